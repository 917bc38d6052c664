#include "pim/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pim {

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r;
    r.c.resize(std::min(a.order(), b.order()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r;
    r.c.assign(std::min(a.order(), b.order()), Rat(0));
    for (size_t i = 0; i < a.c.size() && i < r.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; i + j < r.c.size() && j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

TruncSeries series_binomial_recip(const Rat& c, unsigned long m, size_t order) {
    if (c == 0) throw std::domain_error("series_binomial_recip: pole at c = 0");
    if (order < 1) throw std::invalid_argument("series_binomial_recip: order >= 1 required");
    TruncSeries r;
    r.c.resize(order);
    Rat cinv = Rat(1) / c;
    Rat cur = 1;
    for (unsigned long i = 0; i < m; ++i) cur *= cinv;  // c^{-m}
    for (size_t k = 0; k < order; ++k) {
        r.c[k] = binom(m + k - 1, k) * cur;
        cur *= cinv;
    }
    return r;
}

}  // namespace pim
