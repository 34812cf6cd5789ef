#ifndef MZP_RESULTANT_HPP
#define MZP_RESULTANT_HPP

#include <cstdint>
#include <vector>

#include "mzp/int_poly.hpp"

namespace mzp {

namespace detail {

// lc(B)^(degA-degB+1) * A = Q*B + R, deg R < deg B; returns R
inline IntPoly pseudo_rem(const IntPoly& A, const IntPoly& B) {
    const long dB = B.degree();
    IntPoly R = A;
    long e = A.degree() - dB + 1;
    while (!R.is_zero() && R.degree() >= dB) {
        const long dR = R.degree();
        IntPoly lead = IntPoly::monomial(static_cast<std::size_t>(dR - dB), R.leading());
        R = R * B.leading() - lead * B;
        e--;
    }
    if (e > 0) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(e));
        R = R * f;
    }
    return R;
}

inline Int content_of(const IntPoly& f) {
    Int c(0);
    for (const auto& v : f.coeffs()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    return c; // 0 for the zero polynomial
}

inline IntPoly primitive_part(const IntPoly& f) {
    Int c = content_of(f);
    if (c == 0 || c == 1) return f;
    std::vector<Int> out;
    out.reserve(f.size());
    for (const auto& v : f.coeffs()) out.push_back(v / c);
    return IntPoly(std::move(out));
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace detail

/* Resultant of two nonzero integer polynomials via the subresultant PRS.
 * The sign follows the Sylvester-matrix convention and is not normalized;
 * consumers compare |Res| against 1.
 */
inline Int resultant(IntPoly A, IntPoly B) {
    if (A.is_zero() || B.is_zero()) throw precondition_violated("resultant of the zero polynomial");
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    if (A.degree() == 0) return Int(1);
    if (B.degree() == 0) return s * detail::int_pow(B.leading(), static_cast<unsigned long>(A.degree()));

    const Int ca = detail::content_of(A), cb = detail::content_of(B);
    A = detail::primitive_part(A);
    B = detail::primitive_part(B);
    Int t = detail::int_pow(ca, static_cast<unsigned long>(B.degree())) *
            detail::int_pow(cb, static_cast<unsigned long>(A.degree()));

    Int g(1), h(1);
    while (true) {
        const long dA = A.degree(), dB = B.degree();
        const long delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        IntPoly R = detail::pseudo_rem(A, B);
        if (R.is_zero()) return Int(0); // common factor
        A = B;
        {
            Int div = g * detail::int_pow(h, static_cast<unsigned long>(delta));
            std::vector<Int> out;
            out.reserve(R.size());
            for (const auto& v : R.coeffs()) {
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
                out.push_back(std::move(q));
            }
            B = IntPoly(std::move(out));
        }
        g = A.leading();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            Int num = detail::int_pow(g, static_cast<unsigned long>(delta));
            Int den = detail::int_pow(h, static_cast<unsigned long>(delta - 1));
            h = num / den;
        }
        if (B.degree() == 0) break;
    }
    const long d = A.degree();
    Int num = detail::int_pow(B.leading(), static_cast<unsigned long>(d));
    Int den = detail::int_pow(h, static_cast<unsigned long>(d - 1));
    return s * t * (num / den);
}

namespace detail {

// gcd over F_q with word arithmetic; returns true when the gcd is constant.
// Requires the leading coefficients of a and b to survive mod q.
inline bool coprime_mod_q(const IntPoly& A, const IntPoly& B, std::uint64_t q) {
    auto reduce = [&](const IntPoly& f) {
        std::vector<std::uint64_t> r(f.size());
        Int tmp;
        for (std::size_t i = 0; i < f.size(); i++) {
            mpz_mod_ui(tmp.get_mpz_t(), f[i].get_mpz_t(), q);
            r[i] = mpz_get_ui(tmp.get_mpz_t());
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto mulmod = [&](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % q);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };

    std::vector<std::uint64_t> a = reduce(A), b = reduce(B);
    if (a.size() != A.size() || b.size() != B.size()) return false; // lc vanished, prime unusable
    while (!b.empty()) {
        if (b.size() == 1) return true; // nonzero constant gcd
        const std::uint64_t inv = powmod(b.back(), q - 2);
        while (a.size() >= b.size()) {
            const std::uint64_t f = mulmod(a.back(), inv);
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j + 1 < b.size(); j++) {
                const std::uint64_t sub = mulmod(f, b[j]);
                a[off + j] = a[off + j] >= sub ? a[off + j] - sub : a[off + j] + q - sub;
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size() <= 1; // remainder vanished; gcd is a
}

} // namespace detail

// gcd over Z by the primitive PRS; only the degree matters to callers
inline IntPoly poly_gcd(IntPoly A, IntPoly B) {
    if (A.is_zero()) return detail::primitive_part(B);
    if (B.is_zero()) return detail::primitive_part(A);
    if (A.degree() < B.degree()) std::swap(A, B);
    A = detail::primitive_part(A);
    B = detail::primitive_part(B);
    while (!B.is_zero() && B.degree() > 0) {
        IntPoly R = detail::pseudo_rem(A, B);
        A = std::move(B);
        B = detail::primitive_part(R);
    }
    if (!B.is_zero()) return IntPoly{1}; // constant remainder: coprime
    return A;
}

/* Squarefreeness of g, i.e. gcd(g, g') constant. A word-size modular gcd
 * settles the common case quickly (gcd constant mod q forces gcd constant
 * over Q); the exact primitive PRS is the fallback.
 */
inline bool is_squarefree(const IntPoly& g) {
    if (g.degree() <= 1) return !g.is_zero();
    const IntPoly gp = g.derivative();
    static constexpr std::uint64_t qs[] = {2305843009213693951ull /* 2^61-1 */,
                                           4611686018427387847ull, 4611686018427387817ull};
    for (std::uint64_t q : qs)
        if (detail::coprime_mod_q(g, gp, q)) return true;
    return poly_gcd(g, gp).degree() == 0;
}

} // namespace mzp

#endif
