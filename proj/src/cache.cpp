#include "pim/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pim {

std::string param_hash(const IntegrandParams& params) {
    std::string key = "s=" + std::to_string(params.s) + ";v=" + std::to_string(params.v);
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

nlohmann::json TermCacheRecord::to_json() const {
    return {{"family", family},
            {"n", n},
            {"a", {a.get_num().get_str(), a.get_den().get_str()}},
            {"b", {b.get_num().get_str(), b.get_den().get_str()}},
            {"hash", hash}};
}

static Rat parse_rat(const nlohmann::json& pair) {
    Int num(pair.at(0).get<std::string>()), den(pair.at(1).get<std::string>());
    if (den <= 0) throw std::invalid_argument("cache: nonpositive denominator");
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw std::invalid_argument("cache: rational not in lowest terms");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

TermCacheRecord TermCacheRecord::from_json(const nlohmann::json& j) {
    TermCacheRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<long>();
    r.a = parse_rat(j.at("a"));
    r.b = parse_rat(j.at("b"));
    r.hash = j.at("hash").get<std::string>();
    return r;
}

TermCache::TermCache(std::string dir) {
    if (dir.empty()) return;
    path_ = dir + "/terms.jsonl";
    std::ifstream in(path_);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            TermCacheRecord rec = TermCacheRecord::from_json(nlohmann::json::parse(line));
            map_[{rec.family, rec.n}] = std::move(rec);
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping corrupted cache line " << lineno << " in " << path_
                      << ": " << e.what() << "\n";
        }
    }
}

std::optional<TermCacheRecord> TermCache::lookup(const std::string& family, long n,
                                                 const std::string& hash) const {
    auto it = map_.find({family, n});
    if (it == map_.end()) return std::nullopt;
    if (it->second.hash != hash) return std::nullopt;  // stale: recompute
    return it->second;
}

void TermCache::store(const TermCacheRecord& rec) {
    if (path_.empty()) return;
    map_[{rec.family, rec.n}] = rec;
    int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) {
        std::cerr << "warning: cache append failed for " << path_ << "\n";
        return;
    }
    ::flock(fd, LOCK_EX);
    std::string line = rec.to_json().dump() + "\n";
    ssize_t written = ::write(fd, line.data(), line.size());
    if (written != static_cast<ssize_t>(line.size()))
        std::cerr << "warning: short cache write for " << path_ << "\n";
    ::flock(fd, LOCK_UN);
    ::close(fd);
}

}  // namespace pim
