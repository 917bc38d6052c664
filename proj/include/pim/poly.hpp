// Dense exact polynomials with an explicit basis tag.
//
// A QPoly holds ascending coefficients of sum c_k * (x - shift)^k where the
// shift is determined by the basis tag.  The zero polynomial has an empty
// coefficient vector (degree() == kDegNegInf).
#pragma once

#include <vector>

#include "pim/gaussian.hpp"
#include "pim/rational.hpp"

namespace pim {

enum class Basis { X, XPlus5, XPlus1Plus2i };

constexpr long kDegNegInf = -0x40000000;

struct QPoly {
    std::vector<Rat> c;  // ascending, trailing coefficient nonzero
    Basis basis = Basis::X;

    QPoly() = default;
    QPoly(std::vector<Rat> coeffs, Basis b = Basis::X) : c(std::move(coeffs)), basis(b) {
        trim();
    }

    long degree() const { return c.empty() ? kDegNegInf : static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& operator[](size_t k) const { return c[k]; }
    Rat coeff(size_t k) const { return k < c.size() ? c[k] : Rat(0); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Rat eval(const Rat& x) const;        // in the polynomial's own basis variable
    GaussRat eval(const GaussRat& x) const;

    bool operator==(const QPoly& o) const { return basis == o.basis && c == o.c; }
};

QPoly add(const QPoly& p, const QPoly& q);
QPoly sub(const QPoly& p, const QPoly& q);
QPoly mul(const QPoly& p, const QPoly& q);
QPoly pow(const QPoly& p, unsigned long e);

// Re-express p in the target basis (exact Taylor shift).  Invertible.
QPoly shift_basis(const QPoly& p, Basis target);

// Exact division; throws integrity_error carrying the remainder degree if the
// remainder is nonzero.
QPoly exact_div(const QPoly& p, const QPoly& q);

QPoly derivative(const QPoly& p);

// Gaussian-coefficient polynomial in a fixed basis; only what the (x+1+2i)
// rebasing needs.
struct GPoly {
    std::vector<GaussRat> c;

    GaussRat eval(const GaussRat& x) const;
};

}  // namespace pim
