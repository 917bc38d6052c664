// Generalized (A,B) integral family and the BestAB delta scan.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pim/linforms.hpp"
#include "pim/recurrence.hpp"

namespace pim {

struct FamilyKey {
    long A = 0, B = 0;
    bool operator<(const FamilyKey& o) const { return A != o.A ? A < o.A : B < o.B; }
    bool operator==(const FamilyKey& o) const { return A == o.A && B == o.B; }
};

// Exact form for exponents s = 2An, v = 2Bn + 1.
LinearForm family_form(long A, long B, long n, const FormOptions& opts = {});

struct FamilyResult {
    FamilyKey key;
    std::vector<std::pair<long, double>> deltas;  // (n, delta) over the window
    double min_delta = 0.0;
    bool useless = true;      // no positive delta in the window
    bool partial = false;     // acceleration failed; budget-capped direct terms
    bool accelerated = false;
    long rec_order = -1, rec_degree = -1;
};

struct ScanOptions {
    long terms_init = 53;   // supports (r, d) up to (3, 9) with guard 10
    long terms_max = 185;   // enough for the degree-42 coefficient polynomials
    long terms_step = 44;
    long spot_checks = 3;   // extension vs direct, indices just past training
    long spot_window = 8;
    long direct_cap = 110;  // partial fallback never goes past this index
    FormOptions form_opts{.check_two_routes = false};
    GuessOptions guess_opts{.r_max = 4, .d_max = 44, .guard = 10};
    bool use_parallel = true;
};

struct ScanReport {
    long A_max = 0, B_max = 0, n_lo = 0, n_hi = 0;
    std::vector<FamilyResult> families;  // ordered by (A, B)
    std::vector<FamilyKey> ranking;      // useful families, descending min delta

    std::string to_csv() const;  // columns A,B,n,delta
    nlohmann::json summary() const;
};

ScanReport best_ab(long A_max, long B_max, long n_lo, long n_hi, const ScanOptions& opts = {});

}  // namespace pim
