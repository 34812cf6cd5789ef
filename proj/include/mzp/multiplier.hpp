#ifndef MZP_MULTIPLIER_HPP
#define MZP_MULTIPLIER_HPP

#include <string>
#include <utility>
#include <vector>

#include "mzp/newton.hpp"
#include "mzp/number_theory.hpp"
#include "mzp/orbit.hpp"
#include "mzp/quotient.hpp"
#include "mzp/valuation.hpp"

namespace mzp {

/* The multiplier polynomial P_{m,n}(x) = prod_j (x - lambda(alpha_j)) over
 * the roots alpha_j of G_{m,n}, where lambda = 2^n prod_{i=0}^{n-1} a_{m+i}
 * is the multiplier of the periodic cycle. Either the full polynomial or
 * just its top coefficients (which is all the 2-adic certification needs,
 * and stays feasible when deg G is in the tens of thousands).
 */
struct MultiplierPoly {
    MisiurewiczType type;
    long degree;           // deg P = deg G_{m,n}
    bool full;
    IntPoly poly;          // the whole polynomial, in x (full mode only)
    std::vector<Int> top;  // top[l-1] = coefficient of x^(degree-l), l = 1..lead_count

    unsigned long lead_count() const { return top.size(); }
    Int trace() const { return top.empty() ? Int(0) : Int(-top[0]); }
};

// the residue 2^n prod_{i=0}^{n-1} a_{m+i} mod G, each orbit factor reduced
// before it enters the product
inline Residue lambda_element(const MisiurewiczType& t, const QuotientCtx& ctx,
                              const Budget& budget = {}) {
    Residue acc(ctx, IntPoly{1});
    for (unsigned i = 0; i < t.n; i++)
        acc = mod_mul(acc, reduce(ctx, orbit_poly(t.m + i, budget)));
    return Residue(ctx, acc.poly() * int_pow2(t.n));
}

namespace detail {

/* Same residue via the sign form -2^n prod a_{m+i-1}: the shifted factors
 * have degree below deg G, which keeps the accumulation cheap on very large
 * contexts. Traces taken against this representative agree with the
 * defining form because the two coincide at every root of G.
 */
inline Residue lambda_element_shifted(const MisiurewiczType& t, const QuotientCtx& ctx,
                                      const Budget& budget = {}) {
    Residue acc(ctx, IntPoly{1});
    for (unsigned i = 0; i < t.n; i++)
        acc = mod_mul(acc, reduce(ctx, orbit_poly(t.m + i - 1, budget)));
    return Residue(ctx, acc.poly() * -int_pow2(t.n));
}

// power sums p_1..p_J of the roots of P_{m,n}
inline std::vector<Int> multiplier_power_sums(const MisiurewiczType& t, const QuotientCtx& ctx,
                                              unsigned long J, const Budget& budget = {}) {
    std::vector<Int> p;
    p.reserve(J);
    const Residue lam = lambda_element_shifted(t, ctx, budget);
    Residue pw = lam;
    for (unsigned long j = 1; j <= J; j++) {
        p.push_back(trace_of(pw));
        if (j < J) pw = mod_mul(pw, lam);
    }
    return p;
}

} // namespace detail

// full P_{m,n} via power sums and Newton's identities; integrality of every
// coefficient is asserted (the Newton denominators must cancel exactly)
inline MultiplierPoly multiplier_poly(const MisiurewiczType& t, const Budget& budget = {},
                                      const PolyCache* cache = nullptr) {
    const long k = misiurewicz_degree(t);
    check_budget(k, budget, "P_" + t.to_string());

    if (cache) {
        if (auto hit = cache->load_P(t.m, t.n, true)) {
            if (hit->degree() == k && hit->is_monic()) {
                MultiplierPoly P{t, k, true, *hit, {}};
                P.top.reserve(static_cast<std::size_t>(k));
                for (long l = 1; l <= k; l++) P.top.push_back((*hit)[static_cast<std::size_t>(k - l)]);
                return P;
            }
        }
    }

    QuotientCtx ctx(misiurewicz_poly(t, budget, cache), budget);
    const auto psums = detail::multiplier_power_sums(t, ctx, static_cast<unsigned long>(k), budget);
    IntPoly P = poly_from_power_sums(psums, static_cast<unsigned long>(k));

    MultiplierPoly out{t, k, true, P, {}};
    out.top.reserve(static_cast<std::size_t>(k));
    for (long l = 1; l <= k; l++) out.top.push_back(P[static_cast<std::size_t>(k - l)]);
    if (cache) cache->store_P(t.m, t.n, true, 0, P);
    return out;
}

// only the top J coefficients of P_{m,n}, from the first J power sums
inline MultiplierPoly leading_coeffs(const MisiurewiczType& t, unsigned long J,
                                     const Budget& budget = {}, const PolyCache* cache = nullptr) {
    const long k = misiurewicz_degree(t);
    if (J > static_cast<unsigned long>(k)) throw precondition_violated("J <= deg G required");

    QuotientCtx ctx(misiurewicz_poly(t, budget, cache), budget);
    const auto psums = detail::multiplier_power_sums(t, ctx, J, budget);
    MultiplierPoly out{t, k, false, {}, leading_coeffs_from_power_sums(psums)};
    return out;
}

/* tr(P_{m,n}) as the Moebius sum
 *   2^n sum_{d|n} (-1)^{n/d} mu(n/d) T((prod_{i=m-1}^{m+d-2} a_i)^{n/d},
 *                                      a_{m+d-1} + a_{m-1}),
 * evaluated without constructing P. Each divisor term lives in the quotient
 * by a_{m+d-1}+a_{m-1}, so the d = n term dominates the cost.
 */
inline Int trace_mobius(const MisiurewiczType& t, const Budget& budget = {}) {
    Int total(0);
    for (unsigned long d : divisors_of(t.n)) {
        const int mu = moebius(t.n / d);
        if (mu == 0) continue;
        const IntPoly g = orbit_poly(t.m + static_cast<unsigned>(d) - 1, budget) + orbit_poly(t.m - 1, budget);
        check_budget(g.degree(), budget, "T over a_" + std::to_string(t.m + d - 1) + "+a_" + std::to_string(t.m - 1));
        // the summand vanishes at c = 0, so T over g equals T over g/c; the
        // smaller quotient is preferred
        QuotientCtx ctx(exact_div(g, IntPoly::variable()), budget);
        Residue prod(ctx, IntPoly{1});
        for (unsigned i = t.m - 1; i <= t.m + d - 2; i++)
            prod = mod_mul(prod, reduce(ctx, orbit_poly(i, budget)));
        const Int term = trace_of(mod_pow(prod, t.n / d));
        const int sign = (t.n / d) % 2 == 0 ? 1 : -1;
        total += Int(sign * mu) * term;
    }
    return int_pow2(t.n) * total;
}

/* tr(P_{m,p}) for an odd prime p in closed form:
 *   m = 2:   2^(2p) - 2^(p+1)
 *   m >= 3:  2^p ( T(a_{m-1}^p, a_m + a_{m-1}) + 2^(m+p-2) - 2^(m-2) ),
 * with the T-term equal to the trace of a_{m-1}^p in Z[c]/(G_{m,1}) since
 * a_m + a_{m-1} = c G_{m,1} and a_{m-1}(0) = 0.
 */
inline Int trace_closed_form(unsigned m, unsigned long p, const Budget& budget = {},
                             const PolyCache* cache = nullptr) {
    if (m < 2) throw precondition_violated("m >= 2 required");
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw not_prime("p must be an odd prime");
    if (m == 2) return int_pow2(2 * p) - int_pow2(p + 1);

    QuotientCtx ctx(misiurewicz_poly(MisiurewiczType(m, 1), budget, cache), budget);
    const Residue r = reduce(ctx, orbit_poly(m - 1, budget));
    const Int T = trace_of(mod_pow(r, p));
    return int_pow2(p) * (T + int_pow2(m + p - 2) - int_pow2(m - 2));
}

struct PrespecialReport {
    MisiurewiczType type;
    std::vector<std::pair<unsigned long, Valuation>> entries; // (l, v2(b_{k-l}))
};

/* Checks the guaranteed valuation floor v2(b_{k-l}) >= n*l + 1 on every
 * available coefficient of P. A violation cannot happen for a genuine
 * multiplier polynomial, so it throws bound_violated as an alarm.
 */
inline PrespecialReport prespecial_bounds(const MultiplierPoly& P) {
    PrespecialReport rep{P.type, {}};
    for (unsigned long l = 1; l <= P.lead_count(); l++) {
        const Valuation v = v2_of(P.top[l - 1]);
        const unsigned long floor = static_cast<unsigned long>(P.type.n) * l + 1;
        if (v.is_exact() && v.value() < floor)
            throw bound_violated("v2(b_{k-" + std::to_string(l) + "}) = " +
                                 std::to_string(v.value()) + " < " + std::to_string(floor) +
                                 " for P_" + P.type.to_string());
        rep.entries.emplace_back(l, v);
    }
    return rep;
}

} // namespace mzp

#endif
