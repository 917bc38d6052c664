#include "pim/recurrence.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>

namespace pim {

long PRecurrence::coeff_degree() const {
    long d = 0;
    for (const auto& pk : p) d = std::max<long>(d, static_cast<long>(pk.size()) - 1);
    return d;
}

Rat PRecurrence::coeff_at(long k, long n) const {
    const auto& pk = p[static_cast<size_t>(k)];
    Int acc = 0;
    for (size_t i = pk.size(); i-- > 0;) acc = acc * n + pk[i];
    return Rat(acc);
}

Rat PRecurrence::residual(const std::vector<Rat>& terms, long n) const {
    Rat acc = 0;
    for (long k = 0; k <= order; ++k) acc += coeff_at(k, n) * terms[static_cast<size_t>(n + k)];
    return acc;
}

bool PRecurrence::annihilates(const std::vector<Rat>& terms) const {
    for (long n = 0; n + order < static_cast<long>(terms.size()); ++n)
        if (residual(terms, n) != 0) return false;
    return true;
}

nlohmann::json PRecurrence::to_json() const {
    nlohmann::json j;
    j["order"] = order;
    auto& cp = j["coeff_polys"] = nlohmann::json::array();
    for (const auto& pk : p) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : pk) row.push_back(c.get_str());
        cp.push_back(std::move(row));
    }
    j["validated_window"] = {window_lo, window_hi};
    return j;
}

PRecurrence PRecurrence::from_json(const nlohmann::json& j) {
    PRecurrence r;
    r.order = j.at("order").get<long>();
    for (const auto& row : j.at("coeff_polys")) {
        std::vector<Int> pk;
        for (const auto& c : row) pk.emplace_back(c.get<std::string>());
        r.p.push_back(std::move(pk));
    }
    r.window_lo = j.at("validated_window").at(0).get<long>();
    r.window_hi = j.at("validated_window").at(1).get<long>();
    return r;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

std::vector<u64> word_primes(size_t count) {
    static std::mutex mu;
    static std::vector<u64> cache;
    static Int cursor = Int(1) << 62;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() < count) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        cache.push_back(mpz_get_ui(cursor.get_mpz_t()));
    }
    return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

// Reduce q mod p; false when the denominator is divisible by p.
// mpz_fdiv_ui already returns the non-negative residue for negative inputs.
bool mod_reduce(const Rat& q, u64 p, u64& out) {
    u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) return false;
    u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    out = mulmod(num, invmod(den, p), p);
    return true;
}

// Row-reduce in place mod p; returns pivot columns in order.
std::vector<long> modular_rref(std::vector<std::vector<u64>>& m, u64 p, size_t cols) {
    std::vector<long> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        u64 inv = invmod(m[rank][col], p);
        for (size_t c = col; c < cols; ++c) m[rank][c] = mulmod(m[rank][c], inv, p);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            u64 f = m[r][col];
            for (size_t c = col; c < cols; ++c) {
                u64 sub = mulmod(f, m[rank][c], p);
                m[r][c] = m[r][c] >= sub ? m[r][c] - sub : m[r][c] + p - sub;
            }
        }
        pivots.push_back(static_cast<long>(col));
        ++rank;
    }
    return pivots;
}

// fit matrix for candidate (r, d) over the residues of the terms
std::vector<std::vector<u64>> build_matrix(const std::vector<u64>& terms_mod, u64 p, long rows,
                                           long r, long d) {
    std::vector<std::vector<u64>> m(static_cast<size_t>(rows));
    for (long n = 0; n < rows; ++n) {
        auto& row = m[static_cast<size_t>(n)];
        row.resize(static_cast<size_t>((r + 1) * (d + 1)));
        u64 np = 1;
        for (long i = 0; i <= d; ++i) {
            for (long k = 0; k <= r; ++k)
                row[static_cast<size_t>(k * (d + 1) + i)] =
                    mulmod(np, terms_mod[static_cast<size_t>(n + k)], p);
            np = mulmod(np, static_cast<u64>(n), p);
        }
    }
    return m;
}

// nullspace vector normalized to 1 at the first free column, or empty if the
// pivot structure disagrees with the expected one
std::vector<u64> modular_null_vector(const std::vector<u64>& terms_mod, u64 p, long rows, long r,
                                     long d, std::vector<long>& pivots_io, bool check_pivots) {
    auto m = build_matrix(terms_mod, p, rows, r, d);
    const size_t cols = static_cast<size_t>((r + 1) * (d + 1));
    auto pivots = modular_rref(m, p, cols);
    if (pivots.size() == cols) return {};
    if (check_pivots) {
        if (pivots != pivots_io) return {};
    } else {
        pivots_io = pivots;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    std::vector<u64> v(cols, 0);
    v[free_col] = 1;
    for (size_t r2 = 0; r2 < pivots.size(); ++r2) {
        u64 x = m[r2][free_col];
        v[static_cast<size_t>(pivots[r2])] = x == 0 ? 0 : p - x;
    }
    return v;
}

// p/q congruent to x mod m with |p|, q bounded by sqrt(m/2); classic
// half-extended Euclid.  Returns false when no such fraction exists.
bool rational_reconstruct(const Int& x, const Int& m, Rat& out) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = x % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    out = Rat(r1, t1);
    out.canonicalize();
    return true;
}

size_t rat_size(const Rat& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

// One nullspace basis, columns = cols.  Pivot rows chosen by smallest entry
// bit size to limit intermediate swell.
std::vector<std::vector<Rat>> exact_nullspace(std::vector<std::vector<Rat>> m, size_t cols) {
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t best = m.size();
        size_t best_sz = 0;
        for (size_t r = rank; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            size_t sz = rat_size(m[r][col]);
            if (best == m.size() || sz < best_sz) {
                best = r;
                best_sz = sz;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[rank], m[best]);
        Rat inv = 1 / m[rank][col];
        for (size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        is_pivot[col] = true;
        ++rank;
    }
    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col_of_row[r])] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Int>> clear_and_normalize(const std::vector<Rat>& v, long r, long d) {
    Int den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> w;
    w.reserve(v.size());
    Int content = 0;
    for (const auto& q : v) {
        Rat x = q * Rat(den);
        w.push_back(x.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& x : w) x /= content;
    for (const auto& x : w) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
    }
    std::vector<std::vector<Int>> p(static_cast<size_t>(r + 1));
    for (long k = 0; k <= r; ++k) {
        auto& pk = p[static_cast<size_t>(k)];
        pk.assign(w.begin() + k * (d + 1), w.begin() + (k + 1) * (d + 1));
        while (pk.size() > 1 && pk.back() == 0) pk.pop_back();
    }
    return p;
}

}  // namespace

namespace {

// exact-elimination fallback for a single candidate (r, d)
std::optional<PRecurrence> try_candidate_exact(const std::vector<Rat>& terms, long r, long d,
                                               long rows_fit, long rows_total) {
    const long cols = (r + 1) * (d + 1);
    std::vector<std::vector<Rat>> m(static_cast<size_t>(rows_fit));
    for (long n = 0; n < rows_fit; ++n) {
        auto& row = m[static_cast<size_t>(n)];
        row.resize(static_cast<size_t>(cols));
        Rat np = 1;
        for (long i = 0; i <= d; ++i) {
            for (long k = 0; k <= r; ++k)
                row[static_cast<size_t>(k * (d + 1) + i)] =
                    np * terms[static_cast<size_t>(n + k)];
            np *= n;
        }
    }
    for (auto& v : exact_nullspace(std::move(m), static_cast<size_t>(cols))) {
        PRecurrence rec;
        rec.order = r;
        rec.p = clear_and_normalize(v, r, d);
        bool pr_zero = true;
        for (const auto& c : rec.p[static_cast<size_t>(r)])
            if (c != 0) pr_zero = false;
        if (pr_zero) continue;
        bool ok = true;
        for (long n = rows_fit; n < rows_total && ok; ++n)
            ok = rec.residual(terms, n) == 0;
        if (!ok) continue;
        rec.window_lo = 0;
        rec.window_hi = static_cast<long>(terms.size()) - 1;
        return rec;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PRecurrence> guess(const std::vector<Rat>& terms, const GuessOptions& opts) {
    const long T = static_cast<long>(terms.size());
    constexpr size_t kMaxPrimes = 400;
    std::vector<u64> primes = word_primes(kMaxPrimes);

    // residues of the terms per prime, computed lazily; a prime dividing some
    // denominator is unusable for this sequence
    std::vector<std::vector<u64>> residues(kMaxPrimes);
    std::vector<char> usable(kMaxPrimes, -1);  // -1 unknown
    auto residues_for = [&](size_t pi) -> const std::vector<u64>* {
        if (usable[pi] == -1) {
            auto& rs = residues[pi];
            rs.resize(terms.size());
            usable[pi] = 1;
            for (size_t i = 0; i < terms.size(); ++i)
                if (!mod_reduce(terms[i], primes[pi], rs[i])) {
                    usable[pi] = 0;
                    rs.clear();
                    break;
                }
        }
        return usable[pi] ? &residues[pi] : nullptr;
    };

    for (long r = 1; r <= opts.r_max; ++r) {
        for (long d = 0; d <= opts.d_max; ++d) {
            const long cols = (r + 1) * (d + 1);
            const long rows_total = T - r;
            if (rows_total < cols + opts.guard) continue;
            const long rows_fit = rows_total - opts.guard;

            // screen with the first usable prime; also fixes the pivot shape
            std::vector<long> pivots;
            std::vector<u64> v0;
            size_t pi0 = 0;
            for (; pi0 < kMaxPrimes; ++pi0) {
                const auto* rs = residues_for(pi0);
                if (!rs) continue;
                v0 = modular_null_vector(*rs, primes[pi0], rows_fit, r, d, pivots, false);
                break;
            }
            if (v0.empty()) continue;

            // CRT over more primes with periodic rational reconstruction,
            // accepted only after exact verification on all rows
            std::vector<Int> X(static_cast<size_t>(cols));
            for (long i = 0; i < cols; ++i) X[static_cast<size_t>(i)] = Int(v0[static_cast<size_t>(i)]);
            Int M(primes[pi0]);
            size_t next_attempt = 3, used = 1;
            for (size_t pi = pi0 + 1; pi < kMaxPrimes; ++pi) {
                const auto* rs = residues_for(pi);
                if (!rs) continue;
                const u64 p = primes[pi];
                std::vector<u64> vp =
                    modular_null_vector(*rs, p, rows_fit, r, d, pivots, true);
                if (vp.empty()) continue;  // unlucky prime
                const u64 m_mod_p = mpz_fdiv_ui(M.get_mpz_t(), p);
                const u64 m_inv = invmod(m_mod_p, p);
                for (long i = 0; i < cols; ++i) {
                    auto& x = X[static_cast<size_t>(i)];
                    u64 x_mod_p = mpz_fdiv_ui(x.get_mpz_t(), p);
                    u64 want = vp[static_cast<size_t>(i)];
                    u64 delta = mulmod(want >= x_mod_p ? want - x_mod_p : want + p - x_mod_p,
                                       m_inv, p);
                    x += M * Int(delta);
                }
                M *= Int(p);
                ++used;
                if (used < next_attempt) continue;
                next_attempt = used + used / 2 + 1;

                std::vector<Rat> cand(static_cast<size_t>(cols));
                bool all = true;
                for (long i = 0; i < cols && all; ++i)
                    all = rational_reconstruct(X[static_cast<size_t>(i)], M,
                                               cand[static_cast<size_t>(i)]);
                if (!all) continue;
                PRecurrence rec;
                rec.order = r;
                rec.p = clear_and_normalize(cand, r, d);
                bool pr_zero = true;
                for (const auto& c : rec.p[static_cast<size_t>(r)])
                    if (c != 0) pr_zero = false;
                if (pr_zero) break;  // not a usable recurrence at this (r, d)
                if (!rec.annihilates(terms)) continue;  // need more primes
                rec.window_lo = 0;
                rec.window_hi = T - 1;
                return rec;
            }

            // reconstruction did not converge; exact elimination settles it
            auto exact = try_candidate_exact(terms, r, d, rows_fit, rows_total);
            if (exact) return exact;
        }
    }
    return std::nullopt;
}

std::vector<Rat> extend(const PRecurrence& rec, std::vector<Rat> seed, long N) {
    if (static_cast<long>(seed.size()) < rec.order)
        throw std::invalid_argument("extend: seed shorter than recurrence order");
    const long r = rec.order;
    seed.reserve(static_cast<size_t>(N + 1));
    while (static_cast<long>(seed.size()) <= N) {
        long n = static_cast<long>(seed.size()) - r;
        Rat lead = rec.coeff_at(r, n);
        if (lead == 0) throw singular_step_error(n);
        Rat acc = 0;
        for (long k = 0; k < r; ++k)
            acc += rec.coeff_at(k, n) * seed[static_cast<size_t>(n + k)];
        seed.push_back(-acc / lead);
    }
    return seed;
}

std::vector<Int> indicial_polynomial(const PRecurrence& rec) {
    const long D = rec.coeff_degree();
    std::vector<Int> c(static_cast<size_t>(rec.order + 1), Int(0));
    for (long k = 0; k <= rec.order; ++k) {
        const auto& pk = rec.p[static_cast<size_t>(k)];
        if (static_cast<long>(pk.size()) - 1 == D) c[static_cast<size_t>(k)] = pk.back();
    }
    Int content = 0;
    for (const auto& x : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
        for (auto& x : c) x /= content;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] != 0) {
            if (c[i] < 0)
                for (auto& x : c) x = -x;
            break;
        }
    }
    return c;
}

}  // namespace pim
