#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzp/newton.hpp"

using namespace mzp;

TEST_CASE("power sums from coefficients") {
    // roots 0 and -2
    CHECK(power_sums_from_coeffs(IntPoly{0, 2, 1}, 2) == std::vector<Int>{-2, 4});
    // single root -2
    CHECK(power_sums_from_coeffs(IntPoly{2, 1}, 1) == std::vector<Int>{-2});
    // roots +-i
    CHECK(power_sums_from_coeffs(IntPoly{1, 0, 1}, 2) == std::vector<Int>{0, -2});
    CHECK_THROWS_AS(power_sums_from_coeffs(IntPoly{1, 2}, 1), precondition_violated);
}

TEST_CASE("power sums against known integer roots") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> root(-5, 5);
    for (int iter = 0; iter < 40; iter++) {
        const int k = 1 + static_cast<int>(rng() % 6);
        IntPoly g{1};
        std::vector<long> roots;
        for (int i = 0; i < k; i++) {
            roots.push_back(root(rng));
            g *= IntPoly{-roots.back(), 1};
        }
        const unsigned long J = static_cast<unsigned long>(k) + 3; // also beyond the degree
        const auto s = power_sums_from_coeffs(g, J);
        for (unsigned long j = 1; j <= J; j++) {
            Int expect(0);
            for (long r : roots) {
                Int t;
                mpz_pow_ui(t.get_mpz_t(), Int(r).get_mpz_t(), j);
                expect += t;
            }
            CHECK(s[j - 1] == expect);
        }
    }
}

TEST_CASE("leading coefficients from power sums") {
    CHECK(leading_coeffs_from_power_sums({Int(-2), Int(4)}) == std::vector<Int>{2, 0});
    CHECK(leading_coeffs_from_power_sums({Int(8)}) == std::vector<Int>{-8});
    CHECK(leading_coeffs_from_power_sums({}).empty());
    CHECK_THROWS_AS(leading_coeffs_from_power_sums({Int(1), Int(2)}), non_integral_coefficient);
}

TEST_CASE("full reconstruction") {
    CHECK(poly_from_power_sums({Int(-2), Int(4)}, 2) == IntPoly{0, 2, 1});
    CHECK(poly_from_power_sums({}, 0) == IntPoly{1});
}

TEST_CASE("round trip on random monic polynomials") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int iter = 0; iter < 60; iter++) {
        const unsigned long k = 1 + rng() % 8;
        std::vector<Int> c(k + 1);
        for (auto& v : c) v = coeff(rng);
        c.back() = 1;
        const IntPoly g(std::move(c));
        const auto s = power_sums_from_coeffs(g, k);
        CHECK(poly_from_power_sums(s, k) == g);
    }
}
