#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nefkit/exactmath.hpp"

using namespace nefkit;

TEST_CASE("vector helpers") {
    Vec a{1, -2, 3}, b{4, 0, -1};
    CHECK(dot(a, b) == 1);
    CHECK((add(a, b) == Vec{5, -2, 2}));
    CHECK((sub(a, b) == Vec{-3, -2, 4}));
    CHECK((scaled(a, 3) == Vec{3, -6, 9}));
    CHECK(gcdOf(Vec{6, -9, 15}) == 3);
    CHECK((primitive(Vec{6, -9, 15}) == Vec{2, -3, 5}));
    CHECK((primitive(Vec{0, 0}) == Vec{0, 0}));
    CHECK((primitive(Vec{-7, 0}) == Vec{-1, 0}));  // gcd 7, sign preserved
}

TEST_CASE("primitive divides by the gcd including sign-mixed entries") {
    CHECK((primitive(Vec{-4, 6}) == Vec{-2, 3}));
}

TEST_CASE("determinant and rank") {
    IntMatrix m = IntMatrix::fromRows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}, 3);
    CHECK(det(m) == 30);
    CHECK(rank(m) == 3);

    IntMatrix swapped = IntMatrix::fromRows({{0, 1}, {1, 0}}, 2);
    CHECK(det(swapped) == -1);

    IntMatrix singular = IntMatrix::fromRows({{1, 2}, {2, 4}}, 2);
    CHECK(det(singular) == 0);
    CHECK(rank(singular) == 1);

    CHECK(rank(IntMatrix::fromRows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3)) == 2);
}

TEST_CASE("determinant stays exact for entries beyond 64 bits") {
    Int big("123456789012345678901234567890");
    IntMatrix m = IntMatrix::fromRows({{big, 0}, {0, big}}, 2);
    CHECK(det(m) == big * big);
}

TEST_CASE("solveRational finds exact solutions and detects inconsistency") {
    IntMatrix m = IntMatrix::fromRows({{2, 1}, {1, -1}}, 2);
    auto x = solveRational(m, {Rational(4), Rational(-1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);

    IntMatrix inconsistent = IntMatrix::fromRows({{1, 1}, {1, 1}}, 2);
    CHECK(!solveRational(inconsistent, {Rational(1), Rational(2)}).has_value());

    // underdetermined: free variables pinned to zero, still a solution
    IntMatrix wide = IntMatrix::fromRows({{1, 2, 3}}, 3);
    auto y = solveRational(wide, {Rational(6)});
    REQUIRE(y.has_value());
    Rational acc = 0;
    Vec coeff{1, 2, 3};
    for (std::size_t i = 0; i < 3; ++i) acc += Rational(coeff[i]) * (*y)[i];
    CHECK(acc == 6);
}

TEST_CASE("smith normal form: transforms, divisibility, classic example") {
    IntMatrix m = IntMatrix::fromRows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
    SmithResult s = smithNormalForm(m);
    REQUIRE(s.diagonal.size() == 3);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 6);
    CHECK(s.diagonal[2] == 12);

    // left * m * right reproduces the diagonal
    IntMatrix prod = mul(mul(s.left, m), s.right);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(prod.at(i, j) == (i == j ? s.diagonal[i] : Int(0)));

    Int dl = det(s.left), dr = det(s.right);
    CHECK((dl == 1 || dl == -1));
    CHECK((dr == 1 || dr == -1));
}

TEST_CASE("smith normal form on random matrices keeps the transform identity") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        SmithResult s = smithNormalForm(m);
        IntMatrix prod = mul(mul(s.left, m), s.right);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                CHECK(prod.at(i, j) == (i == j && i < s.diagonal.size() ? s.diagonal[i] : Int(0)));
        for (std::size_t t = 0; t + 1 < s.diagonal.size(); ++t) {
            CHECK(s.diagonal[t] >= 0);
            if (s.diagonal[t] != 0) CHECK(s.diagonal[t + 1] % s.diagonal[t] == 0);
            if (s.diagonal[t] == 0) CHECK(s.diagonal[t + 1] == 0);
        }
    }
}

TEST_CASE("lattice index") {
    CHECK(*latticeIndex(IntMatrix::fromRows({{1, 0}, {0, 1}}, 2)) == 1);
    CHECK(*latticeIndex(IntMatrix::fromRows({{2, 0}, {0, 3}}, 2)) == 6);
    CHECK(*latticeIndex(IntMatrix::fromRows({{1, 1}, {1, -1}}, 2)) == 2);
    CHECK(!latticeIndex(IntMatrix::fromRows({{1, 1}}, 2)).has_value());
    // redundant generators do not change the index
    CHECK(*latticeIndex(IntMatrix::fromRows({{2, 0}, {0, 3}, {2, 3}}, 2)) == 6);
}

TEST_CASE("inverse of a unimodular matrix") {
    IntMatrix m = IntMatrix::fromRows({{1, 2}, {1, 3}}, 2);
    IntMatrix inv = inverseUnimodular(m);
    IntMatrix prod = mul(m, inv);
    CHECK(prod == IntMatrix::identity(2));
    CHECK_THROWS(inverseUnimodular(IntMatrix::fromRows({{2, 0}, {0, 1}}, 2)));
}
