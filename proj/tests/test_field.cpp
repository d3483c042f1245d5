#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "dads/linalg.hpp"
#include "dads/random.hpp"

using namespace dads;

namespace {

// independent oracle: exhaustive search for the inverse
std::uint32_t brute_inverse(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t b = 1; b < p; ++b)
        if (std::uint64_t(a) * b % p == 1) return b;
    return 0;
}

// independent oracle: rank via exhaustive row-space enumeration; the span
// of the rows over GF(p) has exactly p^rank elements
std::size_t brute_rank(const DenseMatrix& m) {
    const Field& f = m.field();
    std::set<std::vector<std::uint32_t>> span;
    std::vector<std::size_t> combo(m.rows(), 0);
    for (;;) {
        std::vector<std::uint32_t> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] = f.add(Fp{v[j]}, f.mul(f.from_int(combo[i]), m.at(i, j))).v;
        span.insert(v);
        std::size_t i = 0;
        while (i < m.rows() && ++combo[i] == f.modulus()) combo[i++] = 0;
        if (i == m.rows()) break;
    }
    std::size_t rank = 0;
    std::size_t count = span.size();
    while (count > 1) {
        count /= f.modulus();
        ++rank;
    }
    return rank;
}

bool is_null_vector(const DenseMatrix& m, const std::vector<Fp>& v) {
    const Field& f = m.field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Fp acc = f.zero();
        for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
        if (acc != f.zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("field construction validates the modulus") {
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(7));
    CHECK_NOTHROW(Field(101));
    CHECK_NOTHROW(Field(2147483647));  // 2^31 - 1, the largest admissible prime
    CHECK_THROWS_AS(Field(0), MathError);
    CHECK_THROWS_AS(Field(1), MathError);
    CHECK_THROWS_AS(Field(4), MathError);
    CHECK_THROWS_AS(Field(6), MathError);
    CHECK_THROWS_AS(Field(2147483646), MathError);
    CHECK_THROWS_AS(Field(0x80000000u), MathError);  // 2^31 is out of range
}

TEST_CASE("arithmetic in GF(7)") {
    Field f(7);
    CHECK(f.add(Fp{3}, Fp{5}) == Fp{1});
    CHECK(f.mul(Fp{3}, Fp{5}) == Fp{1});
    CHECK(f.neg(Fp{0}) == Fp{0});
    CHECK(f.neg(Fp{2}) == Fp{5});
    CHECK(f.sub(Fp{2}, Fp{5}) == Fp{4});
    CHECK(f.from_int(-1) == Fp{6});
    CHECK(f.from_int(15) == Fp{1});

    CHECK(f.inv(Fp{3}) == Fp{brute_inverse(3, 7)});
    CHECK(f.inv(Fp{3}) == Fp{5});
    CHECK_THROWS_AS(f.inv(Fp{0}), MathError);
}

TEST_CASE("multiplication by one is the identity and inverses invert") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
        Field f(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            CHECK(f.mul(Fp{a}, f.one()) == Fp{a});
            if (a != 0) {
                CHECK(f.inv(Fp{a}) == Fp{brute_inverse(a, p)});
                CHECK(f.mul(Fp{a}, f.inv(Fp{a})) == f.one());
            }
        }
    }
}

TEST_CASE("nullspace of the zero map is the identity pattern") {
    Field f(5);
    DenseMatrix m(f, 2, 3);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(basis[j][i] == (i == j ? f.one() : f.zero()));
    }
}

TEST_CASE("nullspace of the identity is empty") {
    Field f(5);
    DenseMatrix m(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) m.at(i, i) = f.one();
    CHECK(nullspace(m).empty());
}

TEST_CASE("nullspace of a rank-1 system over GF(5)") {
    Field f(5);
    DenseMatrix m = matrix_from_rows(f, 2, {{Fp{1}, Fp{2}}, {Fp{2}, Fp{4}}});
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    // free variable v2 = 1, pivot solved: v = (3, 1)
    CHECK(basis[0][0] == Fp{3});
    CHECK(basis[0][1] == Fp{1});
    CHECK(is_null_vector(m, basis[0]));
}

TEST_CASE("rank + nullity = cols against exhaustive row-space enumeration") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f(p);
        TrialRng rng(2024 + p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng.below(4);
            std::size_t cols = 1 + rng.below(4);
            DenseMatrix m(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, f);

            auto basis = nullspace(m);
            for (const auto& v : basis) CHECK(is_null_vector(m, v));
            CHECK(basis.size() + brute_rank(m) == cols);
            CHECK(rank(m) == brute_rank(m));
        }
    }
}

TEST_CASE("nullspace output is deterministic") {
    Field f(5);
    TrialRng rng(99);
    DenseMatrix m(f, 3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = random_scalar(rng, f);
    CHECK(nullspace(m) == nullspace(m));
}

TEST_CASE("solve finds a particular solution or reports inconsistency") {
    Field f(7);
    TrialRng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(4);
        DenseMatrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, f);

        // rhs built from a known solution is always consistent
        std::vector<Fp> x0(cols);
        for (auto& x : x0) x = random_scalar(rng, f);
        std::vector<Fp> b(rows, f.zero());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b[i] = f.add(b[i], f.mul(m.at(i, j), x0[j]));

        auto x = solve(m, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < rows; ++i) {
            Fp acc = f.zero();
            for (std::size_t j = 0; j < cols; ++j) acc = f.add(acc, f.mul(m.at(i, j), (*x)[j]));
            CHECK(acc == b[i]);
        }
    }

    DenseMatrix zero(f, 1, 2);
    CHECK_FALSE(solve(zero, {Fp{1}}).has_value());
}

TEST_CASE("row span equality is an equivalence on generating sets") {
    Field f(5);
    DenseMatrix a = matrix_from_rows(f, 3, {{Fp{1}, Fp{2}, Fp{0}}, {Fp{0}, Fp{0}, Fp{1}}});
    DenseMatrix b = matrix_from_rows(
        f, 3, {{Fp{2}, Fp{4}, Fp{0}}, {Fp{1}, Fp{2}, Fp{3}}, {Fp{0}, Fp{0}, Fp{2}}});
    CHECK(row_span_equal(a, b));
    DenseMatrix c = matrix_from_rows(f, 3, {{Fp{1}, Fp{0}, Fp{0}}});
    CHECK_FALSE(row_span_equal(a, c));
    CHECK(in_row_span(b, {Fp{1}, Fp{2}, Fp{3}}));
    CHECK_FALSE(in_row_span(c, {Fp{0}, Fp{1}, Fp{0}}));
}
