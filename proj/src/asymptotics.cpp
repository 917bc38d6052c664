#include "pim/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pim/numtheory.hpp"

namespace pim {

const std::vector<Int> kIndicialClassic = {Int(-2048), Int(138304), Int(-2359989), Int(108)};
const std::vector<Int> kSaddleCubic = {Int(-625), Int(-500), Int(-125), Int(2)};

namespace {

std::vector<Rat> rat_derivative(const std::vector<Rat>& c) {
    std::vector<Rat> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rat(static_cast<long>(i)));
    if (d.empty()) d.push_back(Rat(0));
    return d;
}

void rat_trim(std::vector<Rat>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// monic Euclid; enough for a squarefree test
std::vector<Rat> rat_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    rat_trim(a);
    rat_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        // a mod b
        while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
            Rat f = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            rat_trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
        rat_trim(b);
    }
    return a;
}

Complex horner(const std::vector<Complex>& c, const Complex& z, mpfr_prec_t prec) {
    Complex acc(prec);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

Complex cpow(Complex base, long e, mpfr_prec_t prec) {
    Complex r{Real(1L, prec), Real(prec)};
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Rat>& coeffs_in, long digits) {
    std::vector<Rat> coeffs = coeffs_in;
    rat_trim(coeffs);
    const long deg = static_cast<long>(coeffs.size()) - 1;
    if (deg < 1) throw std::invalid_argument("poly_roots: degree >= 1 required");
    if (coeffs.back() == 0) throw std::invalid_argument("poly_roots: zero leading coefficient");
    std::vector<Rat> sq = rat_gcd(coeffs, rat_derivative(coeffs));
    if (sq.size() > 1)
        throw std::invalid_argument("poly_roots: polynomial is not squarefree, deflate first");

    const mpfr_prec_t prec = bits_for_digits(digits) + 64;
    std::vector<Complex> c, dc;
    for (const auto& q : coeffs) c.emplace_back(Real(q, prec), Real(prec));
    auto dq = rat_derivative(coeffs);
    for (const auto& q : dq) dc.emplace_back(Real(q, prec), Real(prec));

    // initial points on a perturbed circle inside the Cauchy bound
    double lead = std::abs(coeffs.back().get_d());
    double radius = 0.0;
    for (long i = 0; i < deg; ++i)
        radius = std::max(radius, std::abs(coeffs[static_cast<size_t>(i)].get_d()) / lead);
    radius = 1.0 + radius;
    std::vector<Complex> z;
    for (long k = 0; k < deg; ++k) {
        double th = 2.0 * 3.14159265358979324 * (k + 0.25) / deg + 0.3;
        double rk = radius * (0.3 + 0.5 * (k + 1.0) / deg);
        z.emplace_back(Real(rk * std::cos(th), prec), Real(rk * std::sin(th), prec));
    }

    Real tol = pow_si(Real(2L, prec), -(prec - 24));
    for (int iter = 0; iter < 600; ++iter) {
        Real worst(prec);
        for (long i = 0; i < deg; ++i) {
            Complex pi_ = horner(c, z[static_cast<size_t>(i)], prec);
            Complex dpi = horner(dc, z[static_cast<size_t>(i)], prec);
            if (dpi.abs2().is_zero()) continue;
            Complex w = pi_ / dpi;  // Newton step
            Complex s(prec);
            for (long j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex d = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (d.abs2().is_zero()) continue;
                s = s + Complex{Real(1L, prec), Real(prec)} / d;
            }
            Complex one{Real(1L, prec), Real(prec)};
            Complex corr = w / (one - w * s);  // Aberth correction
            z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - corr;
            Real rel = abs(corr) / (abs(z[static_cast<size_t>(i)]) + Real(1L, prec));
            if (rel > worst) worst = rel;
        }
        if (!(worst > tol)) break;
    }

    {
        // coefficients are rational, hence real: force exact conjugate
        // symmetry and collapse numerically real roots
        Real small = pow_si(Real(2L, prec), -(prec / 2));
        std::vector<bool> done(static_cast<size_t>(deg), false);
        for (long i = 0; i < deg; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            Complex& zi = z[static_cast<size_t>(i)];
            if (abs(zi.im) < small * (abs(zi.re) + Real(1L, prec))) {
                zi.im = Real(prec);
                done[static_cast<size_t>(i)] = true;
                continue;
            }
            long best = -1;
            Real best_d(prec);
            for (long j = i + 1; j < deg; ++j) {
                if (done[static_cast<size_t>(j)]) continue;
                Real d = abs(z[static_cast<size_t>(j)] - zi.conj());
                if (best < 0 || d < best_d) {
                    best = j;
                    best_d = d;
                }
            }
            if (best >= 0) {
                z[static_cast<size_t>(best)] = zi.conj();
                done[static_cast<size_t>(best)] = true;
            }
            done[static_cast<size_t>(i)] = true;
        }
    }

    // residual certificate
    Real norm(prec);
    for (const auto& q : coeffs) {
        Real aq = abs(Real(q, prec));
        if (aq > norm) norm = aq;
    }
    Real bound = norm * exp(Real(static_cast<long>(-(digits - 8)), prec) * log(Real(10L, prec)));
    for (const auto& zi : z) {
        Real res = abs(horner(c, zi, prec));
        if (res > bound)
            throw integrity_error("poly_roots: residual certificate failed");
    }

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        int c0 = abs(a).cmp(abs(b));
        if (c0 != 0) return c0 < 0;
        return a.im.cmp(b.im) < 0;
    });
    return z;
}

Complex g_saddle(const Complex& y, long digits) {
    const mpfr_prec_t prec = bits_for_digits(digits) + 64;
    auto cr = [&](long v) { return Complex{Real(v, prec), Real(prec)}; };
    Complex q = y * y + cr(6) * y + cr(25);
    Complex d = y - cr(25);
    return y * q * q / (d * d * d);
}

std::pair<Real, Real> rates(long digits) {
    const mpfr_prec_t prec = bits_for_digits(digits) + 64;
    std::vector<Rat> ind;
    for (const auto& c : kIndicialClassic) ind.emplace_back(c);
    auto roots = poly_roots(ind, digits + 8);
    Real n1 = abs(roots.front());
    Real n3 = abs(roots.back());
    Real phi = phi_limit(digits + 8);
    Real common = Real(4L, prec) - Real(5L, prec) / Real(2L, prec) * log(Real(2L, prec)) - phi;
    return {log(n1) + common, log(n3) + common};
}

std::pair<Real, Real> measure_bounds(long digits) {
    auto [ri, rb] = rates(digits);
    const mpfr_prec_t prec = std::max(ri.prec(), rb.prec());
    Real phi = phi_limit(digits + 8);
    Real one(1L, prec);
    Real mu = one + rb / (-ri);
    Real crude = one + (rb + phi) / (-(ri + phi));
    return {mu, crude};
}

AsymptoticData asymptotic_data(long digits) {
    AsymptoticData d;
    std::vector<Rat> ind, cub;
    for (const auto& c : kIndicialClassic) ind.emplace_back(c);
    for (const auto& c : kSaddleCubic) cub.emplace_back(c);
    d.N_roots = poly_roots(ind, digits);
    d.y_roots = poly_roots(cub, digits);
    for (const auto& y : d.y_roots) d.g_values.push_back(g_saddle(y, digits));
    // match the multiset {g(y_j)} against {N_j}: greedy nearest pairing,
    // then reorder g_values (and y_roots with them) to follow N_roots
    const mpfr_prec_t prec = bits_for_digits(digits);
    Real tol = exp(Real(-(digits - 12), prec) * log(Real(10L, prec)));
    std::vector<Complex> g_ord, y_ord;
    std::vector<bool> used(d.g_values.size(), false);
    for (size_t j = 0; j < d.N_roots.size(); ++j) {
        size_t best = d.g_values.size();
        Real best_d(prec);
        for (size_t k = 0; k < d.g_values.size(); ++k) {
            if (used[k]) continue;
            Real e = abs(d.g_values[k] - d.N_roots[j]);
            if (best == d.g_values.size() || e < best_d) {
                best = k;
                best_d = e;
            }
        }
        if (best_d > tol * (abs(d.N_roots[j]) + Real(1L, prec)))
            throw integrity_error("asymptotic_data: g(y_j) does not match indicial root N_j");
        used[best] = true;
        g_ord.push_back(d.g_values[best]);
        y_ord.push_back(d.y_roots[best]);
    }
    d.g_values = std::move(g_ord);
    d.y_roots = std::move(y_ord);
    d.phi_limit = phi_limit(digits);
    auto [ri, rb] = rates(digits);
    d.rate_I = ri;
    d.rate_b = rb;
    auto [mu, crude] = measure_bounds(digits);
    d.mu_bound = mu;
    d.mu_crude = crude;
    return d;
}

Complex contour_integral(const IntegrandParams& params, long digits) {
    const mpfr_prec_t prec = bits_for_digits(digits) + 96;
    const long s = params.s, v = params.v;
    const long n = params.label ? params.label->n : 0;

    auto cr = [&](long x) { return Complex{Real(x, prec), Real(prec)}; };
    // R(x) = 5 x^s ((x^2+3)^2 + 16)^s / (25 - x^2)^v  on x = -1 + 2iu
    auto f = [&](const Real& u) {
        Complex x{Real(-1L, prec), Real(2L, prec) * u};
        Complex x2 = x * x;
        Complex t = x2 + cr(3);
        Complex num = cpow(x, s, prec) * cpow(t * t + cr(16), s, prec) * cr(5);
        Complex den = cpow(cr(25) - x2, v, prec);
        return num / den;
    };

    const Real pi_half = Real::pi(prec) / Real(2L, prec);
    Real target = exp(Real(-(digits + 5), prec) * log(Real(10L, prec)));

    // tanh-sinh on u in [-1, 1] with node doubling
    Complex sum = f(Real(0L, prec)) * Complex{pi_half, Real(prec)};
    double h = 1.0;
    Complex prev(prec);
    Real err(prec);
    bool have_prev = false;
    for (int level = 0; level < 14; ++level) {
        // at level 0 take all integer nodes, afterwards only the odd ones
        double step = (level == 0) ? h : 2.0 * h;
        double start = (level == 0) ? h : h;
        for (double t = start;; t += step) {
            Real tt(t, prec);
            Real sh = sinh(tt) * pi_half;
            Real ch = cosh(sh);
            Real w = pi_half * cosh(tt) / (ch * ch);
            Real u = tanh(sh);
            Complex term = (f(u) + f(-u)) * Complex{w, Real(prec)};
            sum = sum + term;
            if (t > 3.0 && abs(term) < target * Real(1L, prec) / Real(100L, prec)) break;
            if (t > 12.0) break;
        }
        Complex total = sum * Complex{Real(h, prec), Real(prec)};
        if (have_prev) {
            err = abs(total - prev);
            if (err < target) {
                prev = total;
                break;
            }
        }
        prev = total;
        have_prev = true;
        // halving h keeps every existing node; the next level only adds the
        // odd multiples of the new step
        h *= 0.5;
    }
    if (have_prev && err > target * Real(100000L, prec))
        throw integrity_error("contour_integral: quadrature did not converge, error " +
                              err.str(6));

    // dx = 2i du; overall factor i (-1)^{n+1}
    Complex val = prev * Complex{Real(prec), Real(2L, prec)};  // times 2i
    Complex iu{Real(prec), Real(1L, prec)};
    val = val * iu;
    if (n % 2 == 0) val = -val;  // (-1)^{n+1}
    return val;
}

}  // namespace pim
