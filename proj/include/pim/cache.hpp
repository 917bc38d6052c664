// JSON-lines cache of exact terms, keyed by a hash of the producing
// parameters.  Decimal strings only, so entries round-trip exactly.
#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pim/construction.hpp"
#include "pim/rational.hpp"

namespace pim {

std::string param_hash(const IntegrandParams& params);

struct TermCacheRecord {
    std::string family;  // "classic" or "A,B"
    long n = 0;
    Rat a, b;
    std::string hash;

    nlohmann::json to_json() const;
    // throws nlohmann::json::exception or std::invalid_argument on bad input
    static TermCacheRecord from_json(const nlohmann::json& j);
};

class TermCache {
public:
    // dir may be empty for a disabled cache; corrupted lines are skipped with
    // a warning on stderr
    explicit TermCache(std::string dir);

    bool enabled() const { return !path_.empty(); }
    std::optional<TermCacheRecord> lookup(const std::string& family, long n,
                                          const std::string& hash) const;
    void store(const TermCacheRecord& rec);  // appends under an flock

    size_t size() const { return map_.size(); }

private:
    std::string path_;
    std::map<std::pair<std::string, long>, TermCacheRecord> map_;
};

}  // namespace pim
