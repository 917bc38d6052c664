// P-recursive recurrence guessing by exact nullspace fitting, forward
// extension, and the indicial polynomial.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pim/rational.hpp"

namespace pim {

struct PRecurrence {
    long order = 0;  // r
    // p[k] is the integer coefficient polynomial multiplying u_{n+k},
    // ascending powers of n; size order+1.  Global content 1.
    std::vector<std::vector<Int>> p;
    long window_lo = 0, window_hi = 0;  // validated index range of u

    long coeff_degree() const;
    Rat coeff_at(long k, long n) const;  // p_k(n)
    // sum_k p_k(n) terms[n+k], terms indexed from 0
    Rat residual(const std::vector<Rat>& terms, long n) const;
    bool annihilates(const std::vector<Rat>& terms) const;

    nlohmann::json to_json() const;
    static PRecurrence from_json(const nlohmann::json& j);
};

struct GuessOptions {
    long r_max = 4;
    long d_max = 12;
    long guard = 10;  // held-out rows
};

// Smallest (r, then d) recurrence fitting the terms, or nullopt.  A modular
// rank pre-screen skips the exact elimination for hopeless candidates.
std::optional<PRecurrence> guess(const std::vector<Rat>& terms, const GuessOptions& opts = {});

class singular_step_error : public std::runtime_error {
public:
    singular_step_error(long n)
        : std::runtime_error("leading recurrence coefficient vanishes at n = " +
                             std::to_string(n)),
          n(n) {}
    long n;
};

// Extend seed (length >= order) forward to indices 0..N inclusive.
std::vector<Rat> extend(const PRecurrence& rec, std::vector<Rat> seed, long N);

// Top-degree coefficients of the p_k as a polynomial in N, content-normalized
// with positive leading coefficient; ascending powers of N.
std::vector<Int> indicial_polynomial(const PRecurrence& rec);

}  // namespace pim
