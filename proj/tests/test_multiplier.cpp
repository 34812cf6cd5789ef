#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mzp/multiplier.hpp"

using namespace mzp;

TEST_CASE("multiplier element worked values") {
    const MisiurewiczType t21(2, 1), t22(2, 2);
    QuotientCtx c21(misiurewicz_poly(t21));
    CHECK(lambda_element(t21, c21).poly() == IntPoly{4}); // 2 a_2(-2)

    QuotientCtx c22(misiurewicz_poly(t22));
    CHECK(lambda_element(t22, c22).poly() == IntPoly{4, 4}); // multiplier 4+4i at c = i
}

TEST_CASE("both sign forms of the multiplier agree") {
    for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 2}}) {
        const MisiurewiczType t(m, n);
        QuotientCtx ctx(misiurewicz_poly(t));
        IntPoly prod{1};
        for (unsigned i = 0; i < n; i++) prod *= orbit_poly(m + i - 1);
        const Residue shifted = reduce(ctx, prod * -int_pow2(n));
        CHECK(lambda_element(t, ctx) == shifted);
    }
}

TEST_CASE("full multiplier polynomials") {
    CHECK(multiplier_poly(MisiurewiczType(2, 1)).poly == IntPoly{-4, 1});
    const auto P22 = multiplier_poly(MisiurewiczType(2, 2));
    CHECK(P22.poly == IntPoly{32, -8, 1}); // (x-4-4i)(x-4+4i)
    CHECK(P22.trace() == 8);
    CHECK(P22.top == std::vector<Int>{-8, 32});

    CHECK(multiplier_poly(MisiurewiczType(2, 3)).trace() == 48); // 2^(2p) - 2^(p+1) at p = 3
}

TEST_CASE("leading coefficients agree with the full construction") {
    const MisiurewiczType t(2, 2);
    CHECK(leading_coeffs(t, 1).top == std::vector<Int>{-8});
    CHECK(leading_coeffs(t, 2).top == std::vector<Int>{-8, 32});

    for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {4, 1}, {3, 3}}) {
        const MisiurewiczType ty(m, n);
        const auto full = multiplier_poly(ty);
        const auto lead = leading_coeffs(ty, static_cast<unsigned long>(full.degree));
        CHECK(lead.top == full.top);
    }
    CHECK_THROWS_AS(leading_coeffs(MisiurewiczType(2, 1), 5), precondition_violated);
}

TEST_CASE("Moebius trace without constructing P") {
    CHECK(trace_mobius(MisiurewiczType(2, 1)) == 4);
    CHECK(trace_mobius(MisiurewiczType(2, 2)) == 8);
    CHECK(v2_of(trace_mobius(MisiurewiczType(3, 2))) == Valuation::exact(3));

    // trace valuations for period 2, exact route
    CHECK(v2_of(trace_mobius(MisiurewiczType(4, 2))) == Valuation::exact(4));
    CHECK(v2_of(trace_mobius(MisiurewiczType(5, 2))) == Valuation::exact(5));
    CHECK(v2_of(trace_mobius(MisiurewiczType(6, 2))) == Valuation::exact(6));
}

TEST_CASE("Moebius trace equals the negated second coefficient") {
    for (unsigned m = 2; m <= 7; m++)
        for (unsigned n = 1; n <= 6; n++) {
            const MisiurewiczType t(m, n);
            if (misiurewicz_degree(t) > 64) continue;
            const auto P = multiplier_poly(t);
            CHECK(P.poly.is_monic());
            CHECK(trace_mobius(t) == P.trace());
        }
}

TEST_CASE("closed-form trace") {
    CHECK(trace_closed_form(2, 5) == 960); // 2^10 - 2^6
    for (unsigned m : {2u, 3u, 4u})
        for (unsigned long p : {3ul, 5ul, 7ul})
            CHECK(trace_closed_form(m, p) == trace_mobius(MisiurewiczType(m, static_cast<unsigned>(p))));

    CHECK_THROWS_AS(trace_closed_form(2, 4), not_prime);
    CHECK_THROWS_AS(trace_closed_form(2, 2), not_prime);
    CHECK_THROWS_AS(trace_closed_form(1, 3), precondition_violated);

    // the bold Table-1 entry where the valuation exceeds m + p
    CHECK(v2_of(trace_closed_form(6, 23)) == Valuation::exact(30));
}

TEST_CASE("trace doubling in the preperiod") {
    for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{
             {4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
        // floor(n/2) <= 2^(m-2) - 2 holds on this set
        CHECK(trace_mobius(MisiurewiczType(m + 1, n)) == Int(2) * trace_mobius(MisiurewiczType(m, n)));
    }
}

TEST_CASE("coefficient valuation floors") {
    const auto rep = prespecial_bounds(multiplier_poly(MisiurewiczType(2, 2)));
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].second == Valuation::exact(3)); // v2(-8) >= 2*1+1
    CHECK(rep.entries[1].second == Valuation::exact(5)); // v2(32) >= 2*2+1

    CHECK(prespecial_bounds(multiplier_poly(MisiurewiczType(2, 1))).entries[0].second == Valuation::exact(2));

    // zero coefficients have infinite valuation and always pass
    MultiplierPoly fake{MisiurewiczType(2, 1), 3, false, {}, {Int(0), Int(8), Int(0)}};
    const auto frep = prespecial_bounds(fake);
    CHECK(frep.entries[0].second.is_infinite());

    MultiplierPoly bad{MisiurewiczType(2, 1), 2, false, {}, {Int(2)}};
    CHECK_THROWS_AS(prespecial_bounds(bad), bound_violated);
}
