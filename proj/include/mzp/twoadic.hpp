#ifndef MZP_TWOADIC_HPP
#define MZP_TWOADIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mzp/int_poly.hpp"
#include "mzp/number_theory.hpp"
#include "mzp/orbit.hpp"
#include "mzp/valuation.hpp"

namespace mzp {

/* Truncated 2-adic arithmetic: every coefficient lives in Z/2^K. The
 * pipelines below mirror the exact quotient/multiplier ones coefficient by
 * coefficient (reduction mod 2^K is a ring homomorphism), so a valuation
 * read off a truncated result is the valuation of the exact integer
 * whenever it is below the working precision. Two coefficient carriers:
 * a single machine word when K <= 64, GMP residues otherwise.
 */

// a value known modulo 2^kbits
struct TruncVal {
    Int residue; // in [0, 2^kbits)
    unsigned long kbits;
};

inline Valuation valuation_of(const Int& residue, unsigned long kbits) {
    if (residue == 0) return Valuation::at_least(kbits);
    return Valuation::exact(mpz_scan1(residue.get_mpz_t(), 0));
}

inline Valuation valuation_of(const TruncVal& v) { return valuation_of(v.residue, v.kbits); }

// polynomial with coefficients reduced mod 2^K, constant term first
struct TruncPoly {
    std::vector<Int> coeffs;
    unsigned long kbits = 0;
};

namespace detail {

struct WordRing {
    using V = std::uint64_t;
    unsigned long bits;
    std::uint64_t mask;
    explicit WordRing(unsigned long k) : bits(k), mask(k >= 64 ? ~0ull : ((1ull << k) - 1)) {}

    V from_int(const Int& z) const {
        Int t;
        mpz_fdiv_r_2exp(t.get_mpz_t(), z.get_mpz_t(), bits);
        return static_cast<V>(mpz_get_ui(t.get_mpz_t())) & mask;
    }
    V from_ui(unsigned long u) const { return u & mask; }
    Int to_int(V v) const { return Int(static_cast<unsigned long>(v)); }

    V add(V a, V b) const { return (a + b) & mask; }
    V sub(V a, V b) const { return (a - b) & mask; }
    V mul(V a, V b) const { return (a * b) & mask; }
    V neg(V a) const { return (0 - a) & mask; }
    void addmul(V& acc, V a, V b) const { acc += a * b; } // wraps mod 2^64, consistent
    void submul(V& acc, V a, V b) const { acc -= a * b; }
    V finalize(V a) const { return a & mask; }
    bool is_zero(V a) const { return (a & mask) == 0; }
};

struct BigRing {
    using V = Int;
    unsigned long bits;
    explicit BigRing(unsigned long k) : bits(k) {}

    V from_int(const Int& z) const {
        Int t;
        mpz_fdiv_r_2exp(t.get_mpz_t(), z.get_mpz_t(), bits);
        return t;
    }
    V from_ui(unsigned long u) const { return from_int(Int(u)); }
    Int to_int(const V& v) const { return v; }

    V add(const V& a, const V& b) const { return from_int(a + b); }
    V sub(const V& a, const V& b) const { return from_int(a - b); }
    V mul(const V& a, const V& b) const { return from_int(a * b); }
    V neg(const V& a) const { return from_int(-a); }
    void addmul(V& acc, const V& a, const V& b) const {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void submul(V& acc, const V& a, const V& b) const {
        mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    V finalize(const V& a) const { return from_int(a); }
    bool is_zero(const V& a) const { return mpz_divisible_2exp_p(a.get_mpz_t(), bits) != 0; }
};

template <class R>
using TVec = std::vector<typename R::V>;

template <class R>
void t_trim(const R& ring, TVec<R>& f) {
    while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
}

template <class R>
TVec<R> t_from_intpoly(const R& ring, const IntPoly& f) {
    TVec<R> r;
    r.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); i++) r.push_back(ring.from_int(f[i]));
    t_trim(ring, r);
    return r;
}

// schoolbook product; accumulators are finalized once per coefficient
template <class R>
TVec<R> t_mul(const R& ring, const TVec<R>& a, const TVec<R>& b) {
    if (a.empty() || b.empty()) return {};
    TVec<R> out(a.size() + b.size() - 1, ring.from_ui(0));
    for (std::size_t i = 0; i < a.size(); i++) {
        if (ring.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); j++) ring.addmul(out[i + j], a[i], b[j]);
    }
    for (auto& v : out) v = ring.finalize(v);
    t_trim(ring, out);
    return out;
}

// division by a monic divisor; mirrors the exact long division, so the
// quotient and remainder are the truncations of the exact ones
template <class R>
std::pair<TVec<R>, TVec<R>> t_divrem_monic(const R& ring, const TVec<R>& f, const TVec<R>& g) {
    const std::size_t dg = g.size() - 1;
    if (f.size() <= dg) return {{}, f};
    TVec<R> r = f;
    TVec<R> q(f.size() - dg, ring.from_ui(0));
    for (std::size_t i = r.size(); i-- > dg;) {
        const auto qi = ring.finalize(r[i]);
        if (!ring.is_zero(qi)) {
            q[i - dg] = qi;
            for (std::size_t j = 0; j < dg; j++) ring.submul(r[i - dg + j], qi, g[j]);
        }
    }
    r.resize(dg);
    for (auto& v : r) v = ring.finalize(v);
    t_trim(ring, r);
    t_trim(ring, q);
    return {std::move(q), std::move(r)};
}

template <class R>
TVec<R> t_mod(const R& ring, const TVec<R>& f, const TVec<R>& g) {
    return t_divrem_monic(ring, f, g).second;
}

template <class R>
TVec<R> t_modmul(const R& ring, const TVec<R>& a, const TVec<R>& b, const TVec<R>& g) {
    return t_mod(ring, t_mul(ring, a, b), g);
}

template <class R>
TVec<R> t_modpow(const R& ring, TVec<R> a, unsigned long e, const TVec<R>& g) {
    TVec<R> r{ring.from_ui(1)};
    while (e) {
        if (e & 1) r = t_modmul(ring, r, a, g);
        e >>= 1;
        if (e) a = t_modmul(ring, a, a, g);
    }
    return r;
}

// a_i in the truncated ring, by the defining recursion
template <class R>
TVec<R> t_orbit(const R& ring, unsigned i, const Budget& budget) {
    check_budget(1L << (i - 1), budget, "a_" + std::to_string(i));
    TVec<R> a{ring.from_ui(0), ring.from_ui(1)}; // c
    for (unsigned j = 2; j <= i; j++) {
        a = t_mul(ring, a, a);
        if (a.size() < 2) a.resize(2, ring.from_ui(0));
        a[1] = ring.add(a[1], ring.from_ui(1));
    }
    return a;
}

template <class R>
TVec<R> t_orbit_sum(const R& ring, unsigned hi, unsigned lo, const Budget& budget) {
    // a_hi + a_lo
    TVec<R> f = t_orbit(ring, hi, budget);
    const TVec<R> g = t_orbit(ring, lo, budget);
    if (f.size() < g.size()) f.resize(g.size(), ring.from_ui(0));
    for (std::size_t i = 0; i < g.size(); i++) f[i] = ring.add(f[i], g[i]);
    t_trim(ring, f);
    return f;
}

// G_{m,n} in the truncated ring, same factor schedule as the exact builder
template <class R>
TVec<R> t_misiurewicz(const R& ring, const MisiurewiczType& t, const Budget& budget) {
    check_budget(misiurewicz_degree(t), budget, "G_" + t.to_string());
    std::vector<TVec<R>> pos, neg;
    const bool corrected = (t.m - 1) % t.n == 0;
    for (unsigned long k : divisors_of(t.n)) {
        const int mu = moebius(t.n / k);
        if (mu == 0) continue;
        (mu > 0 ? pos : neg).push_back(t_orbit_sum(ring, t.m + static_cast<unsigned>(k) - 1, t.m - 1, budget));
        if (corrected)
            (mu < 0 ? pos : neg).push_back(t_orbit(ring, static_cast<unsigned>(k), budget));
    }
    TVec<R> g{ring.from_ui(1)};
    for (const auto& f : pos) g = t_mul(ring, g, f);
    for (const auto& f : neg) g = t_divrem_monic(ring, g, f).first;
    return g;
}

// power sums s_0..s_J of the roots of monic g (formal degree = size-1)
template <class R>
TVec<R> t_power_sums(const R& ring, const TVec<R>& g, unsigned long J) {
    const unsigned long k = g.size() - 1;
    TVec<R> s;
    s.reserve(J + 1);
    s.push_back(ring.from_ui(k));
    for (unsigned long j = 1; j <= J; j++) {
        auto acc = ring.from_ui(0);
        const unsigned long top = std::min(j - 1, k);
        for (unsigned long i = 1; i <= top; i++) ring.addmul(acc, g[k - i], s[j - i]);
        if (j <= k) ring.addmul(acc, g[k - j], ring.from_ui(j));
        s.push_back(ring.neg(ring.finalize(acc)));
    }
    return s;
}

template <class R>
typename R::V t_trace(const R& ring, const TVec<R>& f, const TVec<R>& psums) {
    auto acc = ring.from_ui(0);
    for (std::size_t j = 0; j < f.size(); j++) ring.addmul(acc, f[j], psums[j]);
    return ring.finalize(acc);
}

} // namespace detail

// run fn with the cheapest ring that holds K-bit residues
template <class F>
auto with_trunc_ring(unsigned long K, F&& fn) {
    if (K < 1) throw precondition_violated("truncation precision K >= 1");
    if (K <= 64) {
        detail::WordRing ring(K);
        return fn(ring);
    }
    detail::BigRing ring(K);
    return fn(ring);
}

inline TruncPoly truncate(const IntPoly& f, unsigned long K) {
    if (K < 1) throw precondition_violated("truncation precision K >= 1");
    detail::BigRing ring(K);
    TruncPoly t;
    t.kbits = K;
    t.coeffs.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); i++) t.coeffs.push_back(ring.from_int(f[i]));
    while (!t.coeffs.empty() && t.coeffs.back() == 0) t.coeffs.pop_back();
    return t;
}

namespace detail {

inline void check_same_k(const TruncPoly& a, const TruncPoly& b) {
    if (a.kbits != b.kbits) throw precondition_violated("mixed truncation precisions");
}

inline void check_trunc_monic(const TruncPoly& g) {
    if (g.coeffs.empty() || g.coeffs.back() != 1 || g.coeffs.size() < 2)
        throw precondition_violated("modulus must be monic of degree >= 1");
}

template <class R>
TVec<R> t_from_trunc(const R& ring, const TruncPoly& f) {
    TVec<R> r;
    r.reserve(f.coeffs.size());
    for (const auto& v : f.coeffs) r.push_back(ring.from_int(v));
    t_trim(ring, r);
    return r;
}

template <class R>
TruncPoly t_to_trunc(const R& ring, const TVec<R>& f, unsigned long K) {
    TruncPoly t;
    t.kbits = K;
    t.coeffs.reserve(f.size());
    for (const auto& v : f) t.coeffs.push_back(ring.to_int(v));
    while (!t.coeffs.empty() && t.coeffs.back() == 0) t.coeffs.pop_back();
    return t;
}

} // namespace detail

// mirrors of the quotient operations on truncated data
inline TruncPoly trunc_mod_mul(const TruncPoly& a, const TruncPoly& b, const TruncPoly& monic_g) {
    detail::check_trunc_monic(monic_g);
    detail::check_same_k(a, monic_g);
    detail::check_same_k(b, monic_g);
    return with_trunc_ring(monic_g.kbits, [&](const auto& ring) {
        auto r = detail::t_mod(ring, detail::t_mul(ring, detail::t_from_trunc(ring, a),
                                                   detail::t_from_trunc(ring, b)),
                               detail::t_from_trunc(ring, monic_g));
        return detail::t_to_trunc(ring, r, monic_g.kbits);
    });
}

inline TruncPoly trunc_mod_pow(const TruncPoly& a, unsigned long e, const TruncPoly& monic_g) {
    detail::check_trunc_monic(monic_g);
    detail::check_same_k(a, monic_g);
    return with_trunc_ring(monic_g.kbits, [&](const auto& ring) {
        auto r = detail::t_modpow(ring, detail::t_from_trunc(ring, a), e,
                                  detail::t_from_trunc(ring, monic_g));
        return detail::t_to_trunc(ring, r, monic_g.kbits);
    });
}

inline Int trunc_trace(const TruncPoly& f, const TruncPoly& monic_g) {
    detail::check_trunc_monic(monic_g);
    detail::check_same_k(f, monic_g);
    return with_trunc_ring(monic_g.kbits, [&](const auto& ring) {
        const auto fv = detail::t_from_trunc(ring, f);
        const auto gv = detail::t_from_trunc(ring, monic_g);
        const auto ps = detail::t_power_sums(ring, gv, fv.empty() ? 0 : fv.size() - 1);
        return ring.to_int(detail::t_trace(ring, fv, ps));
    });
}

/* Default working precision for a type-(m,n) target: a little above the
 * largest trace valuation the certification ever needs to decide, plus
 * guard bits. AtLeast answers trigger doubling and a rerun upstream.
 */
inline unsigned long default_precision(unsigned long m, unsigned long n) {
    return m + 2 + (3 * n + 1) / 2 + 8;
}

/* tr(P_{m,p}) for odd prime p and m >= 3, truncated mirror of the closed
 * form. The result is 2^p times a quantity computed mod 2^K, so it is known
 * mod 2^(K+p).
 */
inline TruncVal trunc_trace_closed_form(unsigned m, unsigned long p, unsigned long K,
                                        const Budget& budget = {}) {
    if (m < 3) throw precondition_violated("truncated closed form needs m >= 3");
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw not_prime("p must be an odd prime");
    const Int inner = with_trunc_ring(K, [&](const auto& ring) -> Int {
        auto g = detail::t_misiurewicz(ring, MisiurewiczType(m, 1), budget);
        auto a = detail::t_mod(ring, detail::t_orbit(ring, m - 1, budget), g);
        auto ap = detail::t_modpow(ring, a, p, g);
        auto ps = detail::t_power_sums(ring, g, ap.empty() ? 0 : ap.size() - 1);
        Int T = ring.to_int(detail::t_trace(ring, ap, ps));
        T += int_pow2(m + p - 2) - int_pow2(m - 2);
        return T;
    });
    const unsigned long kout = K + p;
    Int r = inner << p;
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), kout);
    return {r, kout};
}

/* Power sums p_1..p_J of the roots of P_{m,n}, truncated. p_j carries a
 * factor (-2^n)^j, so p_j is known mod 2^(K + n*j).
 */
inline std::vector<TruncVal> trunc_multiplier_power_sums(const MisiurewiczType& t, unsigned long J,
                                                         unsigned long K, const Budget& budget = {}) {
    if (J < 1) throw precondition_violated("J >= 1 required");
    if (J > static_cast<unsigned long>(misiurewicz_degree(t)))
        throw precondition_violated("J <= deg G required");
    std::vector<Int> traces = with_trunc_ring(K, [&](const auto& ring) {
        const auto g = detail::t_misiurewicz(ring, t, budget);
        auto prod = detail::TVec<std::decay_t<decltype(ring)>>{ring.from_ui(1)};
        for (unsigned i = 0; i < t.n; i++)
            prod = detail::t_modmul(ring, prod, detail::t_orbit(ring, t.m + i - 1, budget), g);
        // collect the residues first so the power sums only go as deep as needed
        std::vector<std::decay_t<decltype(prod)>> powers{prod};
        for (unsigned long j = 2; j <= J; j++)
            powers.push_back(detail::t_modmul(ring, powers.back(), prod, g));
        std::size_t maxdeg = 0;
        for (const auto& pw : powers) maxdeg = std::max(maxdeg, pw.empty() ? 0 : pw.size() - 1);
        const auto ps = detail::t_power_sums(ring, g, maxdeg);
        std::vector<Int> out;
        out.reserve(J);
        for (const auto& pw : powers) out.push_back(ring.to_int(detail::t_trace(ring, pw, ps)));
        return out;
    });
    std::vector<TruncVal> p;
    p.reserve(J);
    for (unsigned long j = 1; j <= J; j++) {
        const unsigned long kout = K + t.n * j;
        Int v = traces[j - 1] << (t.n * j); // times 2^(n j)
        if (j % 2) v = -v;                  // times (-1)^j
        mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), kout);
        p.push_back({v, kout});
    }
    return p;
}

/* Top J coefficients of P_{m,n} from truncated power sums. Newton's
 * identities divide by j at step j, so each division by 2^v2(j) costs that
 * much precision; the effective precision is tracked per coefficient.
 */
inline std::vector<TruncVal> trunc_leading_coeffs(const MisiurewiczType& t, unsigned long J,
                                                  unsigned long K, const Budget& budget = {}) {
    const auto p = trunc_multiplier_power_sums(t, J, K, budget);
    std::vector<TruncVal> g; // g[l-1] = b_{k-l} known mod 2^kbits
    g.reserve(J);
    for (unsigned long j = 1; j <= J; j++) {
        unsigned long kacc = p[j - 1].kbits;
        for (unsigned long i = 1; i < j; i++) kacc = std::min(kacc, std::min(g[i - 1].kbits, p[j - i - 1].kbits));
        Int acc = p[j - 1].residue;
        for (unsigned long i = 1; i < j; i++) acc += g[i - 1].residue * p[j - i - 1].residue;
        // divide the (exactly divisible) value by j = 2^a * odd
        const unsigned long a = mpz_scan1(Int(j).get_mpz_t(), 0);
        const unsigned long odd = j >> a;
        if (kacc <= a) throw budget_exceeded("truncation precision exhausted in Newton step");
        kacc -= a;
        Int mod = int_pow2(kacc);
        Int r;
        mpz_fdiv_r_2exp(r.get_mpz_t(), acc.get_mpz_t(), kacc + a);
        r >>= a;
        if (odd > 1) {
            Int inv;
            Int o(odd);
            mpz_invert(inv.get_mpz_t(), o.get_mpz_t(), mod.get_mpz_t());
            r = r * inv;
        }
        r = -r;
        mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), kacc);
        g.push_back({r, kacc});
    }
    return g;
}

} // namespace mzp

#endif
