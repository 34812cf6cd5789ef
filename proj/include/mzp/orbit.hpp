#ifndef MZP_ORBIT_HPP
#define MZP_ORBIT_HPP

#include <deque>
#include <mutex>
#include <string>
#include <vector>

#include "mzp/cache.hpp"
#include "mzp/int_poly.hpp"
#include "mzp/number_theory.hpp"

namespace mzp {

/* Degree cap guarding the orbit and product constructions. The default
 * admits everything the built-in verification needs; larger runs opt in
 * explicitly. Transient products can reach roughly twice the cap.
 */
struct Budget {
    long max_degree = 1L << 20;
};

inline void check_budget(long degree, const Budget& b, const std::string& what) {
    if (degree > b.max_degree)
        throw budget_exceeded(what + " needs degree " + std::to_string(degree) +
                              " > budget " + std::to_string(b.max_degree));
}

// preperiod m >= 2, period n >= 1
struct MisiurewiczType {
    unsigned m;
    unsigned n;
    MisiurewiczType(unsigned m_, unsigned n_) : m(m_), n(n_) {
        if (m < 2) throw precondition_violated("preperiod m must be >= 2");
        if (n < 1) throw precondition_violated("period n must be >= 1");
    }
    bool operator==(const MisiurewiczType& o) const { return m == o.m && n == o.n; }
    std::string to_string() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
};

/* Critical-orbit polynomials a_i(c) = f_c^i(0), a_1 = c, a_{i+1} = a_i^2 + c.
 * deg a_i = 2^(i-1); the constant term is always zero. Computed values are
 * memoized (append-only, so references stay valid).
 */
inline const IntPoly& orbit_poly(unsigned i, const Budget& budget = {}) {
    if (i < 1) throw precondition_violated("orbit index must be >= 1");
    if (i > 63) throw budget_exceeded("orbit index " + std::to_string(i) + " is far beyond any budget");
    check_budget(1L << (i - 1), budget, "a_" + std::to_string(i));

    static std::deque<IntPoly> memo; // memo[j] = a_{j+1}
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) memo.push_back(IntPoly::variable());
    while (memo.size() < i) memo.push_back(memo.back() * memo.back() + IntPoly::variable());
    return memo[i - 1];
}

// a_r' by the recursion a_1' = 1, a_r' = 1 + 2 a_{r-1} a_{r-1}'
inline IntPoly orbit_derivative(unsigned r, const Budget& budget = {}) {
    if (r < 1) throw precondition_violated("orbit index must be >= 1");
    IntPoly d{1};
    for (unsigned i = 2; i <= r; i++)
        d = IntPoly{1} + orbit_poly(i - 1, budget) * d * Int(2);
    return d;
}

// closed-form degree of G_{m,n}
inline long misiurewicz_degree(const MisiurewiczType& t) {
    if (t.m + t.n > 60) throw budget_exceeded("type " + t.to_string() + " is far beyond any budget");
    long deg = 0;
    for (unsigned long k : divisors_of(t.n)) {
        const int mu = moebius(t.n / k);
        deg += mu * (1L << (t.m + k - 2));
        if (t.n == 1 || (t.m - 1) % t.n == 0) deg -= mu * (1L << (k - 1));
    }
    return deg;
}

/* The Misiurewicz polynomial G_{m,n}, the monic integer polynomial whose
 * roots are the type-(m,n) parameters:
 *
 *   G_{m,n} = prod_{k|n} (a_{m+k-1} + a_{m-1})^{mu(n/k)}
 *             * prod_{k|n} a_k^{-mu(n/k)}          when n | m-1.
 *
 * All positive-exponent factors are multiplied first, then the
 * negative-exponent factors are divided off in ascending divisor order;
 * each of those divisions is exact because the remaining quotient is
 * itself a product of integer polynomials.
 */
inline IntPoly misiurewicz_poly(const MisiurewiczType& t, const Budget& budget = {},
                                const PolyCache* cache = nullptr) {
    const long final_deg = misiurewicz_degree(t);
    check_budget(final_deg, budget, "G_" + t.to_string());

    if (cache) {
        if (auto hit = cache->load_G(t.m, t.n)) {
            if (hit->degree() == final_deg && hit->is_monic()) return *hit;
        }
    }

    std::vector<IntPoly> pos, neg;
    const bool corrected = t.n == 1 || (t.m - 1) % t.n == 0;
    for (unsigned long k : divisors_of(t.n)) {
        const int mu = moebius(t.n / k);
        if (mu == 0) continue;
        IntPoly f = orbit_poly(t.m + static_cast<unsigned>(k) - 1, budget) + orbit_poly(t.m - 1, budget);
        (mu > 0 ? pos : neg).push_back(std::move(f));
        if (corrected) {
            IntPoly a = orbit_poly(static_cast<unsigned>(k), budget);
            (mu < 0 ? pos : neg).push_back(std::move(a));
        }
    }

    IntPoly g{1};
    for (const auto& f : pos) g *= f;
    for (const auto& f : neg) g = exact_div(g, f); // NonZeroRemainder here means a construction bug

    if (g.degree() != final_deg || !g.is_monic())
        throw error("G_" + t.to_string() + " construction does not match its degree formula");
    if (cache) cache->store_G(t.m, t.n, g);
    return g;
}

} // namespace mzp

#endif
