#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzp/multiplier.hpp"
#include "mzp/twoadic.hpp"

using namespace mzp;

namespace {

Int mod2k(const Int& z, unsigned long k) {
    Int r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), z.get_mpz_t(), k);
    return r;
}

} // namespace

TEST_CASE("valuations of truncated residues") {
    CHECK(valuation_of(Int(8), 10) == Valuation::exact(3));
    CHECK(valuation_of(Int(0), 10) == Valuation::at_least(10));
    CHECK(valuation_of(Int(1) << 9, 10) == Valuation::exact(9));
}

TEST_CASE("valuation comparisons decide only when forced") {
    CHECK(Valuation::exact(3).greater_than(2));
    CHECK_FALSE(Valuation::exact(3).greater_than(3));
    CHECK(Valuation::at_least(10).greater_than(9));
    CHECK(Valuation::infinite().greater_than(1000000));
    CHECK_THROWS_AS(Valuation::at_least(10).greater_than(10), ambiguous_valuation);
    CHECK_THROWS_AS(Valuation::at_least(10).value(), ambiguous_valuation);
}

TEST_CASE("coefficient truncation") {
    const auto t = truncate(IntPoly{32, -8, 1}, 4);
    CHECK(t.coeffs == std::vector<Int>{0, 8, 1});
    CHECK(t.kbits == 4);
    CHECK_THROWS_AS(truncate(IntPoly{1}, 0), precondition_violated);
}

TEST_CASE("truncated trace mirrors the exact one") {
    const IntPoly g = misiurewicz_poly(MisiurewiczType(2, 1));
    const Int tr = trunc_trace(truncate(orbit_poly(1), 8), truncate(g, 8));
    CHECK(tr == 254); // -2 mod 2^8
}

TEST_CASE("truncated closed form commutes with truncation") {
    const Int exact = trace_closed_form(4, 3);
    const auto tv = trunc_trace_closed_form(4, 3, 32);
    CHECK(tv.residue == mod2k(exact, tv.kbits));
    CHECK(valuation_of(tv) == v2_of(exact));
}

TEST_CASE("homomorphism: truncated pipelines equal truncated exact results") {
    std::mt19937_64 rng(90210);
    std::uniform_int_distribution<long> coeff(-20, 20);
    int done = 0;
    while (done < 100) {
        const unsigned m = 2 + static_cast<unsigned>(rng() % 3);
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        const unsigned long K = (done % 2) ? 5 + rng() % 40 : 70 + rng() % 40; // both carriers
        const MisiurewiczType t(m, n);
        const IntPoly g = misiurewicz_poly(t);
        const TruncPoly tg = truncate(g, K);

        std::vector<Int> fc(1 + rng() % static_cast<unsigned long>(g.degree() + 1));
        for (auto& v : fc) v = coeff(rng);
        const IntPoly f(std::move(fc));
        const unsigned long e = 1 + rng() % 6;

        QuotientCtx ctx(g);
        const Residue rf = reduce(ctx, f);
        const IntPoly exact_pow = mod_pow(rf, e).poly();
        const TruncPoly trunc_pow = trunc_mod_pow(truncate(f, K), e, tg);
        for (std::size_t i = 0; i < static_cast<std::size_t>(g.degree()); i++) {
            const Int got = trunc_pow.coeffs.size() > i ? trunc_pow.coeffs[i] : Int(0);
            CHECK(got == mod2k(exact_pow[i], K));
        }

        CHECK(trunc_trace(truncate(rf.poly(), K), tg) == mod2k(trace_of(rf), K));

        const TruncPoly tprod = trunc_mod_mul(truncate(f, K), truncate(orbit_poly(m), K), tg);
        const IntPoly eprod = mod_mul(rf, reduce(ctx, orbit_poly(m))).poly();
        for (std::size_t i = 0; i < static_cast<std::size_t>(g.degree()); i++) {
            const Int got = tprod.coeffs.size() > i ? tprod.coeffs[i] : Int(0);
            CHECK(got == mod2k(eprod[i], K));
        }
        done++;
    }
}

TEST_CASE("mixed precisions are rejected") {
    const TruncPoly a = truncate(IntPoly{1, 1}, 8);
    const TruncPoly g = truncate(IntPoly{1, 1, 1}, 16);
    CHECK_THROWS_AS(trunc_mod_mul(a, a, g), precondition_violated);
    CHECK_THROWS_AS(trunc_trace(a, g), precondition_violated);
}

TEST_CASE("truncated leading coefficients track precision") {
    // P_{2,2}: b = (-8, 32); Newton divides by 2 once at step 2
    const unsigned long K = default_precision(2, 2);
    const auto lead = trunc_leading_coeffs(MisiurewiczType(2, 2), 2, K);
    REQUIRE(lead.size() == 2);
    CHECK(lead[0].kbits == K + 2);
    CHECK(lead[0].residue == mod2k(Int(-8), lead[0].kbits));
    CHECK(valuation_of(lead[0]) == Valuation::exact(3));
    CHECK(lead[1].residue == mod2k(Int(32), lead[1].kbits));
    CHECK(valuation_of(lead[1]) == Valuation::exact(5));

    // word and big carriers give the same residues on a shared precision
    const auto lo = trunc_leading_coeffs(MisiurewiczType(3, 3), 3, 40);
    const auto hi = trunc_leading_coeffs(MisiurewiczType(3, 3), 3, 120);
    const auto full = multiplier_poly(MisiurewiczType(3, 3));
    for (std::size_t l = 0; l < 3; l++) {
        CHECK(lo[l].residue == mod2k(hi[l].residue, lo[l].kbits));
        CHECK(lo[l].residue == mod2k(full.top[l], lo[l].kbits));
    }
}

TEST_CASE("truncated Moebius-route and closed-form traces agree on a prime period") {
    // deg G_{6,11} = 32736; the closed form works in a degree-31 context and
    // the direct route works in the full quotient, so agreement is a strong
    // cross-check of the large-ring kernels
    const unsigned long K = default_precision(6, 11);
    const auto direct = trunc_leading_coeffs(MisiurewiczType(6, 11), 1, K);
    const Int closed = trace_closed_form(6, 11);
    CHECK(direct[0].residue == mod2k(-closed, direct[0].kbits));
    CHECK(valuation_of(direct[0]) == Valuation::exact(16)); // Table value for (6,11)
}
