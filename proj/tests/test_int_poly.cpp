#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "mzp/int_poly.hpp"

using namespace mzp;

namespace {

IntPoly random_poly(std::mt19937_64& rng, long deg, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly random_monic(std::mt19937_64& rng, long deg, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = coeff(rng);
    c.back() = 1;
    return IntPoly(std::move(c));
}

// reference product, kept independent of the dispatching multiplier
IntPoly slow_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
    return IntPoly(std::move(out));
}

} // namespace

TEST_CASE("basic ring operations") {
    const IntPoly c = IntPoly::variable();
    CHECK((c + IntPoly{1}) * (c - IntPoly{1}) == IntPoly{-1, 0, 1});

    const IntPoly f{0, 1, 1}; // c^2 + c
    CHECK(f.derivative() == IntPoly{1, 2});

    // orbit of 0 under z^2 - 2 is 0, -2, 2, 2, ...; f is the second step
    CHECK(f.eval(Int(-2)) == 2);

    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{0, 0, 1}.degree() == 2);
    CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
    CHECK(IntPoly{3}.eval(Int(5)) == 3);
    CHECK(IntPoly{}.eval(Int(5)) == 0);
}

TEST_CASE("exact division by monic divisors") {
    CHECK(exact_div(IntPoly{0, 2, 1}, IntPoly::variable()) == IntPoly{2, 1});
    CHECK(exact_div(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
    CHECK_THROWS_AS(exact_div(IntPoly{1, 0, 1}, IntPoly::variable()), non_zero_remainder);
    CHECK_THROWS_AS(exact_div(IntPoly{1, 1}, IntPoly{1, 2}), precondition_violated);
    // dividing by the monic constant 1 is allowed
    CHECK(exact_div(IntPoly{4, 5}, IntPoly{1}) == IntPoly{4, 5});
}

TEST_CASE("remainders modulo monic divisors") {
    // c^2 (2c + 2) mod (c + 2) evaluates the dividend at -2
    const IntPoly f = IntPoly{0, 0, 1} * IntPoly{2, 2};
    CHECK(rem_by_monic(f, IntPoly{2, 1}) == IntPoly{-8});

    CHECK(rem_by_monic(IntPoly{0, 0, 0, 1}, IntPoly{0, 0, 1}).is_zero());

    // a_3 + a_1 is exactly divisible by a_2 + a_1
    const IntPoly a3_plus_a1{0, 2, 1, 2, 1};
    const IntPoly a2_plus_a1{0, 2, 1};
    CHECK(rem_by_monic(a3_plus_a1, a2_plus_a1).is_zero());
}

TEST_CASE("division round trips") {
    std::mt19937_64 rng(20240901);
    for (int iter = 0; iter < 50; iter++) {
        const IntPoly g = random_monic(rng, 1 + static_cast<long>(rng() % 6));
        const IntPoly f = random_poly(rng, 1 + static_cast<long>(rng() % 10));
        auto [q, r] = f.divrem_by_monic(g);
        CHECK(q * g + r == f);
        if (!r.is_zero()) CHECK(r.degree() < g.degree());
        CHECK(exact_div(f * g, g) == f);
    }
}

TEST_CASE("multiplication dispatch agrees with schoolbook") {
    std::mt19937_64 rng(7);
    for (long deg : {5L, 39L, 40L, 41L, 97L, 200L}) {
        const IntPoly a = random_poly(rng, deg, -50, 50);
        const IntPoly b = random_poly(rng, deg + 3, -50, 50);
        CHECK(a * b == slow_mul(a, b));
    }
    // unbalanced operands
    const IntPoly a = random_poly(rng, 150);
    const IntPoly b = random_poly(rng, 7);
    CHECK(a * b == slow_mul(a, b));
}

TEST_CASE("printing") {
    CHECK(IntPoly{2, 1}.to_string("c") == "c+2");
    CHECK(IntPoly{32, -8, 1}.to_string() == "x^2-8x+32");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{0, -1}.to_string() == "-x");
    CHECK(IntPoly{1, 0, -3, 1}.to_string() == "x^3-3x^2+1");
}

TEST_CASE("canonical text round trip") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 30; iter++) {
        const IntPoly f = iter == 0 ? IntPoly{} : random_poly(rng, static_cast<long>(rng() % 12), -1000000, 1000000);
        const std::string text = f.to_canonical_text();
        CHECK(IntPoly::from_canonical_text(text) == f);
        CHECK(text.substr(0, text.find('\n')) == IntPoly::text_tag);
    }
    CHECK(IntPoly::from_canonical_text("mzp.poly.v1\n2 1\n") == IntPoly{2, 1});
    CHECK_THROWS_AS(IntPoly::from_canonical_text("other.tag\n1\n"), parse_error);
    CHECK_THROWS_AS(IntPoly::from_canonical_text("mzp.poly.v1\n1 x\n"), parse_error);
}
