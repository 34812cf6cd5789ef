#ifndef MZP_NEWTON_HPP
#define MZP_NEWTON_HPP

#include <vector>

#include "mzp/int_poly.hpp"

namespace mzp {

/* Newton's identities, both directions, for a monic integer polynomial
 *   g = x^k + g_{k-1} x^{k-1} + ... + g_0
 * with power sums s_j of its roots (with multiplicity). Sign convention,
 * locked by the round-trip test:
 *   s_1 = -g_{k-1},   s_j + sum_{i=1}^{j-1} g_{k-i} s_{j-i} + j g_{k-j} = 0.
 * The identities relating s_1..s_J to the top J coefficients do not involve
 * the degree k, which is what makes leading-coefficient-only computations
 * possible for very large k.
 */

// s_1..s_J of the roots of monic g; integers since g is monic over Z
inline std::vector<Int> power_sums_from_coeffs(const IntPoly& g, unsigned long J) {
    if (!g.is_monic()) throw precondition_violated("power sums need a monic polynomial");
    const unsigned long k = static_cast<unsigned long>(g.degree());
    std::vector<Int> s;
    s.reserve(J);
    for (unsigned long j = 1; j <= J; j++) {
        Int acc(0);
        const unsigned long top = std::min(j - 1, k);
        for (unsigned long i = 1; i <= top; i++)
            mpz_addmul(acc.get_mpz_t(), g[k - i].get_mpz_t(), s[j - i - 1].get_mpz_t());
        if (j <= k) acc += g[k - j] * j;
        s.push_back(-acc);
    }
    return s;
}

/* Top coefficients (g_{k-1}, ..., g_{k-J}) of the degree-k monic polynomial
 * with power sums s_1..s_J. Intermediate arithmetic is exact rational; each
 * output is checked integral.
 */
inline std::vector<Int> leading_coeffs_from_power_sums(const std::vector<Int>& s) {
    const unsigned long J = s.size();
    std::vector<mpq_class> g;
    g.reserve(J);
    std::vector<Int> out;
    out.reserve(J);
    for (unsigned long j = 1; j <= J; j++) {
        mpq_class acc(s[j - 1]);
        for (unsigned long i = 1; i < j; i++) acc += g[i - 1] * s[j - i - 1];
        acc /= static_cast<long>(j);
        g.push_back(-acc);
        g.back().canonicalize();
        if (g.back().get_den() != 1) throw non_integral_coefficient();
        out.push_back(g.back().get_num());
    }
    return out;
}

// full reconstruction: the monic degree-k polynomial with power sums s_1..s_k
inline IntPoly poly_from_power_sums(const std::vector<Int>& s, unsigned long k) {
    if (s.size() < k) throw precondition_violated("need k power sums for a degree-k reconstruction");
    std::vector<Int> top = leading_coeffs_from_power_sums({s.begin(), s.begin() + static_cast<long>(k)});
    std::vector<Int> coeffs(k + 1, Int(0));
    coeffs[k] = 1;
    for (unsigned long j = 1; j <= k; j++) coeffs[k - j] = std::move(top[j - 1]);
    return IntPoly(std::move(coeffs));
}

} // namespace mzp

#endif
