#include "pim/poly.hpp"

#include <stdexcept>

namespace pim {

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

GaussRat QPoly::eval(const GaussRat& x) const {
    GaussRat r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + GaussRat(*it, Rat(0));
    return r;
}

GaussRat GPoly::eval(const GaussRat& x) const {
    GaussRat r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

static void require_same_basis(const QPoly& p, const QPoly& q) {
    if (p.basis != q.basis) throw std::invalid_argument("QPoly: basis mismatch");
}

QPoly add(const QPoly& p, const QPoly& q) {
    require_same_basis(p, q);
    std::vector<Rat> r(std::max(p.c.size(), q.c.size()), Rat(0));
    for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
    for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
    return QPoly(std::move(r), p.basis);
}

QPoly sub(const QPoly& p, const QPoly& q) {
    require_same_basis(p, q);
    std::vector<Rat> r(std::max(p.c.size(), q.c.size()), Rat(0));
    for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
    for (size_t i = 0; i < q.c.size(); ++i) r[i] -= q.c[i];
    return QPoly(std::move(r), p.basis);
}

QPoly mul(const QPoly& p, const QPoly& q) {
    require_same_basis(p, q);
    if (p.is_zero() || q.is_zero()) return QPoly({}, p.basis);
    std::vector<Rat> r(p.c.size() + q.c.size() - 1, Rat(0));
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
    }
    return QPoly(std::move(r), p.basis);
}

QPoly pow(const QPoly& p, unsigned long e) {
    QPoly r({Rat(1)}, p.basis);
    QPoly base = p;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

static Rat basis_shift_amount(Basis b) {
    // variable of basis b is (x - amount); X: 0, XPlus5: -5
    switch (b) {
        case Basis::X: return Rat(0);
        case Basis::XPlus5: return Rat(-5);
        default: throw std::invalid_argument("shift_basis: Gaussian basis needs GPoly");
    }
}

QPoly shift_basis(const QPoly& p, Basis target) {
    if (p.basis == target) return p;
    // p(x) = sum c_k (x - a)^k; want coefficients of (x - b)^k.
    // Substitute u = x - b: x - a = u + (b - a); Taylor shift by delta = b - a.
    Rat delta = basis_shift_amount(target) - basis_shift_amount(p.basis);
    std::vector<Rat> c = p.c;
    // repeated synthetic division by (u - (-delta)) collects the shifted coeffs
    size_t n = c.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t k = n - 1; k > i; --k) c[k - 1] += delta * c[k];
    }
    return QPoly(std::move(c), target);
}

QPoly exact_div(const QPoly& p, const QPoly& q) {
    require_same_basis(p, q);
    if (q.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (p.is_zero()) return QPoly({}, p.basis);
    if (p.degree() < q.degree()) throw integrity_error("exact_div: nonzero remainder (degree)");
    std::vector<Rat> rem = p.c;
    std::vector<Rat> quot(p.c.size() - q.c.size() + 1, Rat(0));
    const Rat& lead = q.c.back();
    for (size_t i = quot.size(); i-- > 0;) {
        Rat f = rem[i + q.c.size() - 1] / lead;
        quot[i] = f;
        if (f == 0) continue;
        for (size_t j = 0; j < q.c.size(); ++j) rem[i + j] -= f * q.c[j];
    }
    for (const Rat& r : rem)
        if (r != 0) throw integrity_error("exact_div: nonzero remainder");
    return QPoly(std::move(quot), p.basis);
}

QPoly derivative(const QPoly& p) {
    if (p.c.size() <= 1) return QPoly({}, p.basis);
    std::vector<Rat> r(p.c.size() - 1);
    for (size_t k = 1; k < p.c.size(); ++k) r[k - 1] = p.c[k] * Rat(static_cast<long>(k));
    return QPoly(std::move(r), p.basis);
}

long padic_order(const Int& x, const Int& p) {
    if (x == 0) return kPadicOrderOfZero;
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("padic_order: p is not prime");
    Int n = abs(x);
    long ord = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++ord;
    }
    return ord;
}

long padic_order(const Rat& x, const Int& p) {
    if (x == 0) return kPadicOrderOfZero;
    return padic_order(Int(x.get_num()), p) - padic_order(Int(x.get_den()), p);
}

}  // namespace pim
