#include <catch2/catch_amalgamated.hpp>

#include "mzp/orbit.hpp"
#include "mzp/resultant.hpp"

using namespace mzp;

TEST_CASE("orbit polynomials") {
    CHECK(orbit_poly(1) == IntPoly{0, 1});
    CHECK(orbit_poly(2) == IntPoly{0, 1, 1});
    CHECK(orbit_poly(3) == IntPoly{0, 1, 1, 2, 1}); // square a_2, add c

    for (unsigned i = 1; i <= 10; i++) {
        const IntPoly& a = orbit_poly(i);
        CHECK(a.degree() == (1L << (i - 1)));
        CHECK(a[0] == 0);
        CHECK(a.is_monic());
    }

    // deg(a_{m+n-1} + a_{m-1}) = 2^(m+n-2), the quotient degree used throughout
    for (unsigned m = 2; m <= 4; m++)
        for (unsigned n = 1; n <= 4; n++)
            CHECK((orbit_poly(m + n - 1) + orbit_poly(m - 1)).degree() == (1L << (m + n - 2)));
}

TEST_CASE("orbit derivatives match the formal derivative") {
    CHECK(orbit_derivative(1) == IntPoly{1});
    CHECK(orbit_derivative(2) == IntPoly{1, 2});
    CHECK(orbit_derivative(3) == IntPoly{1, 2, 6, 4});
    for (unsigned r = 1; r <= 9; r++) CHECK(orbit_derivative(r) == orbit_poly(r).derivative());
}

TEST_CASE("degree budget") {
    Budget tight;
    tight.max_degree = 1L << 10;
    CHECK_NOTHROW(orbit_poly(11, tight));
    CHECK_THROWS_AS(orbit_poly(12, tight), budget_exceeded);
    CHECK_THROWS_AS(misiurewicz_poly(MisiurewiczType(4, 10), tight), budget_exceeded);
}

TEST_CASE("Misiurewicz type validation") {
    CHECK_THROWS_AS(MisiurewiczType(1, 1), precondition_violated);
    CHECK_THROWS_AS(MisiurewiczType(2, 0), precondition_violated);
    CHECK_NOTHROW(MisiurewiczType(2, 1));
}

TEST_CASE("small Misiurewicz polynomials") {
    CHECK(misiurewicz_poly(MisiurewiczType(2, 1)) == IntPoly{2, 1});
    CHECK(misiurewicz_poly(MisiurewiczType(2, 2)) == IntPoly{1, 0, 1});
    CHECK(misiurewicz_degree(MisiurewiczType(3, 2)) == 3);
    CHECK(misiurewicz_poly(MisiurewiczType(3, 2)).degree() == 3);

    // hand check G_{3,1} = (a_3 + a_2)/c
    const IntPoly g31 = exact_div(orbit_poly(3) + orbit_poly(2), IntPoly::variable());
    CHECK(misiurewicz_poly(MisiurewiczType(3, 1)) == g31);
}

TEST_CASE("degree formula matches construction") {
    for (unsigned m = 2; m <= 5; m++)
        for (unsigned n = 1; n <= 6; n++) {
            const MisiurewiczType t(m, n);
            const IntPoly g = misiurewicz_poly(t);
            CHECK(g.is_monic());
            CHECK(g.degree() == misiurewicz_degree(t));
        }
}

TEST_CASE("products of consecutive orbit polynomials telescope") {
    // a_l prod_{j=l}^{s} a_j = a_{s+1} - c sum_{i=l+1}^{s+1} prod_{j=i}^{s} a_j
    for (unsigned s = 0; s + 1 <= 8; s++) {
        for (unsigned l = 1; l <= s + 1; l++) {
            IntPoly lhs = orbit_poly(l);
            for (unsigned j = l; j <= s; j++) lhs *= orbit_poly(j);
            IntPoly sum{};
            for (unsigned i = l + 1; i <= s + 1; i++) {
                IntPoly prod{1};
                for (unsigned j = i; j <= s; j++) prod *= orbit_poly(j);
                sum += prod;
            }
            const IntPoly rhs = orbit_poly(s + 1) - IntPoly::variable() * sum;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("norms of a_j at type-(m,n) parameters are even when n divides j") {
    for (unsigned m = 2; m <= 4; m++)
        for (unsigned n = 1; n <= 3; n++) {
            const IntPoly g = misiurewicz_poly(MisiurewiczType(m, n));
            for (unsigned j = n; j <= 3 * n; j += n) {
                const Int res = resultant(g, orbit_poly(j));
                CHECK(res % 2 == 0);
            }
        }
}
