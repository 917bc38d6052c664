// Gaussian integers and Gaussian rationals, exact.
#pragma once

#include "pim/rational.hpp"

namespace pim {

struct GaussInt {
    Int re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }
    bool operator==(const GaussInt& o) const = default;
};

// Quotient of Gaussian numbers; stored as exact rational components so the
// denominator is always a positive rational integer.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRat(const GaussInt& z) : re(z.re), im(z.im) {}

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator*(const Rat& q) const { return {re * q, im * q}; }
    GaussRat inv() const {
        Rat n = re * re + im * im;
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return {re / n, -im / n};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }
    GaussRat conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_gauss_integer() const { return is_integer(re) && is_integer(im); }
    bool operator==(const GaussRat& o) const = default;
};

inline GaussRat gpow(GaussRat base, long e) {
    if (e < 0) { base = base.inv(); e = -e; }
    GaussRat r{1, 0};
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace pim
