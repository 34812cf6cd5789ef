#ifndef MZP_NUMBER_THEORY_HPP
#define MZP_NUMBER_THEORY_HPP

#include <map>
#include <mutex>
#include <vector>

#include "mzp/int_poly.hpp"

namespace mzp {

inline std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> lo, hi;
    for (unsigned long d = 1; d * d <= n; d++) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// Moebius function via trial-division factorization
inline int moebius(unsigned long n) {
    if (n == 0) throw precondition_violated("moebius requires n >= 1");
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; p++) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<unsigned long> primes_in(unsigned long lo, unsigned long hi) {
    std::vector<unsigned long> out;
    for (unsigned long n = lo; n <= hi; n++)
        if (is_prime(n)) out.push_back(n);
    return out;
}

/* l-th cyclotomic polynomial, memoized. Built by exact division of x^l - 1
 * by the cyclotomic polynomials of the proper divisors of l.
 */
inline IntPoly cyclotomic(unsigned long l) {
    if (l == 0) throw precondition_violated("cyclotomic requires l >= 1");
    static std::map<unsigned long, IntPoly> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(l);
    if (it != memo.end()) return it->second;

    // compute bottom-up so the recursion stays within the lock
    for (unsigned long d : divisors_of(l)) {
        if (memo.count(d)) continue;
        IntPoly num = IntPoly::monomial(d) - IntPoly{1};
        for (unsigned long e : divisors_of(d))
            if (e != d) num = exact_div(num, memo.at(e));
        memo.emplace(d, std::move(num));
    }
    return memo.at(l);
}

inline Int int_pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

} // namespace mzp

#endif
