// Truncated power series over the rationals, fixed order.
#pragma once

#include <vector>

#include "pim/rational.hpp"

namespace pim {

struct TruncSeries {
    std::vector<Rat> c;  // c.size() == order

    size_t order() const { return c.size(); }
    Rat coeff(size_t k) const { return k < c.size() ? c[k] : Rat(0); }
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);  // order = min

// (c - t)^{-m} as a truncated series in t: coefficient of t^k is
// binom(m+k-1, k) * c^{-m-k}.  Throws on c == 0.
TruncSeries series_binomial_recip(const Rat& c, unsigned long m, size_t order);

}  // namespace pim
