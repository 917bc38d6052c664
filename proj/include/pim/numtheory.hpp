// Primes, lcm(1..m), the saving prime set and its product.
#pragma once

#include <utility>
#include <vector>

#include "pim/bigfloat.hpp"
#include "pim/rational.hpp"

namespace pim {

std::vector<long> primes_up_to(long m);

Int lcm_upto(long m);  // lcm of the empty range is 1

// The saving set for index n: primes p > max(5, sqrt(3n)) with
// 1/2 <= {n/p} < 2/3, together with Phi = prod p and L = lcm(1..4n)/Phi.
struct SavingData {
    long n = 0;
    std::vector<long> primes_P;
    Int phi;    // product over primes_P
    Int L;      // lcm(1..4n) / phi, integral by construction
    Int lcm4n;
};

SavingData prime_set_P(long n);

// (n, log(Phi_n)/n) samples plus the closed-form limit of the growth rate.
struct PhiGrowth {
    std::vector<std::pair<long, double>> samples;
    double limit;  // pi/(2 sqrt 3) - log(3 sqrt 3 / 4)
};

PhiGrowth phi_growth(long n_max, long step = 1);

// Closed-form Phi growth constant at the given decimal precision.
Real phi_limit(long digits);
Real phi_limit_digamma(long digits);  // digamma(2/3) - digamma(1/2) route

}  // namespace pim
