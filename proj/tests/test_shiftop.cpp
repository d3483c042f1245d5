#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dads/random.hpp"
#include "dads/shiftop.hpp"

using namespace dads;

namespace {

// Independent oracle: the operator coefficient at a is the literal sum
// over the terms of d of d_beta * W_{a+beta}, evaluated entry by entry.
TruncatedSeries apply_by_definition(const Polynomial& d, const TruncatedSeries& w) {
    const Field& f = w.field();
    std::int64_t out_bound = w.bound() - operator_degree(d);
    TruncatedSeries out(f, w.vars(), out_bound);
    for (const Exponent& a : degree_ball(w.vars(), out_bound)) {
        Fp acc = f.zero();
        for (const auto& [beta, c] : d.terms()) acc = f.add(acc, f.mul(c, w.coeff(a.plus(beta))));
        out.set_coeff(a, acc);
    }
    return out;
}

}  // namespace

TEST_CASE("shift moves monomials down and annihilates off the cone") {
    Field f7(7);
    TruncatedSeries w = TruncatedSeries::monomial(f7, Exponent{2, 1}, 5);

    TruncatedSeries shifted = shift(Exponent{1, 0}, w);
    CHECK(shifted.bound() == 4);
    CHECK(shifted == TruncatedSeries::monomial(f7, Exponent{1, 1}, 4));

    TruncatedSeries gone = shift(Exponent{2, 0}, TruncatedSeries::monomial(f7, Exponent{1, 1}, 5));
    CHECK(gone.bound() == 3);
    CHECK(gone.is_zero());

    TruncatedSeries same = shift(Exponent::zeros(2), w);
    CHECK(same == w);

    CHECK_THROWS_AS(shift(Exponent{7, 0}, w), MathError);   // |beta| > bound + 1
    CHECK_THROWS_AS(shift(Exponent{1}, w), MathError);      // arity mismatch
}

TEST_CASE("applying the unit polynomial is the identity") {
    Field f7(7);
    TrialRng rng(21);
    TruncatedSeries w = random_series(rng, f7, 2, 5);
    CHECK(apply(Polynomial::constant(f7, 2, f7.one()), w) == w);
}

TEST_CASE("difference operator kills the constant series") {
    Field f7(7);
    TruncatedSeries ones =
        TruncatedSeries::from_function(f7, 1, 5, [&](const Exponent&) { return Fp{1}; });
    Polynomial x_minus_1 = Polynomial::monomial(f7, Exponent{1}, Fp{1}) +
                           Polynomial::constant(f7, 1, f7.from_int(-1));
    TruncatedSeries out = apply(x_minus_1, ones);
    CHECK(out.bound() == 4);
    CHECK(out.is_zero());
}

TEST_CASE("hand-checked application over GF(5)") {
    // d = 1 + X on coefficients (1, 2, 3): output (1+2, 2+3) = (3, 0) mod 5
    Field f5(5);
    TruncatedSeries w(f5, 1, 2);
    w.set_coeff(Exponent{0}, Fp{1});
    w.set_coeff(Exponent{1}, Fp{2});
    w.set_coeff(Exponent{2}, Fp{3});
    Polynomial d = Polynomial::constant(f5, 1, f5.one()) +
                   Polynomial::monomial(f5, Exponent{1}, f5.one());
    TruncatedSeries out = apply(d, w);
    CHECK(out.bound() == 1);
    CHECK(out.coeff(Exponent{0}) == Fp{3});
    CHECK(out.coeff(Exponent{1}) == Fp{0});
    CHECK(out == apply_by_definition(d, w));
}

TEST_CASE("apply agrees with the summation oracle on random inputs") {
    Field f7(7);
    TrialRng rng(22);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng.below(3);
        Polynomial d = random_polynomial(rng, f7, r, 3);
        TruncatedSeries w = random_series(rng, f7, r, 6);
        CHECK(apply(d, w) == apply_by_definition(d, w));
    }
}

TEST_CASE("apply is the sum of scaled shifts on the common ball") {
    Field f7(7);
    TrialRng rng(29);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = 1 + rng.below(2);
        Polynomial d = random_nonzero_polynomial(rng, f7, r, 3);
        TruncatedSeries w = random_series(rng, f7, r, 6);
        TruncatedSeries sum(f7, r, w.bound());
        for (const auto& [beta, c] : d.terms()) sum = sum + scale(c, shift(beta, w));
        CHECK(apply(d, w) == sum.restricted(w.bound() - operator_degree(d)));
    }
}

TEST_CASE("zero operator keeps the full ball") {
    Field f7(7);
    TrialRng rng(23);
    TruncatedSeries w = random_series(rng, f7, 1, 4);
    TruncatedSeries out = apply(Polynomial(f7, 1), w);
    CHECK(out.bound() == 4);
    CHECK(out.is_zero());
    CHECK_THROWS_AS(apply(Polynomial::monomial(f7, Exponent{6}, Fp{1}), w), MathError);
}

TEST_CASE("matrix action composes the rows") {
    Field f7(7);
    TrialRng rng(24);
    SeriesVector w = random_series_vector(rng, f7, 1, 2, 6);

    CHECK(apply(PolyMatrix::identity(f7, 1, 2), w) == w);

    SeriesVector zeroed = apply(PolyMatrix::zero(f7, 1, 1, 2), w);
    CHECK(zeroed.size() == 1);
    CHECK(zeroed.is_zero());
    CHECK(zeroed.bound() == 6);

    // R = [X-1, -1]: output coefficient at a is w_{a+1} - w_a - v_a
    Polynomial x_minus_1 = Polynomial::monomial(f7, Exponent{1}, Fp{1}) +
                           Polynomial::constant(f7, 1, f7.from_int(-1));
    PolyMatrix r(1, 2, {x_minus_1, Polynomial::constant(f7, 1, f7.from_int(-1))});
    SeriesVector out = apply(r, w);
    CHECK(out.bound() == 5);
    for (const Exponent& a : degree_ball(1, 5)) {
        Fp expect = f7.sub(f7.sub(w[0].coeff(a.plus(Exponent{1})), w[0].coeff(a)), w[1].coeff(a));
        CHECK(out[0].coeff(a) == expect);
    }

    CHECK_THROWS_AS(apply(PolyMatrix::identity(f7, 1, 3), w), MathError);  // shape mismatch
}

TEST_CASE("scalar pairing reads exactly the support of d") {
    Field f7(7);
    // d = X^(1,0) picks the coefficient at (1,0)
    TruncatedSeries w(f7, 2, 3);
    w.set_coeff(Exponent{1, 0}, Fp{3});
    Polynomial d = Polynomial::monomial(f7, Exponent{1, 0}, f7.one());
    CHECK(pairing_scalar(d, w) == Fp{3});

    CHECK(pairing_scalar(Polynomial(f7, 2), w) == Fp{0});

    // 1 + 2X against the constant-1 series: 1 + 2 = 3
    TruncatedSeries ones =
        TruncatedSeries::from_function(f7, 1, 4, [&](const Exponent&) { return Fp{1}; });
    Polynomial one_plus_2x = Polynomial::constant(f7, 1, f7.one()) +
                             Polynomial::monomial(f7, Exponent{1}, Fp{2});
    CHECK(pairing_scalar(one_plus_2x, ones) == Fp{3});

    // support outside the ball reads unknown coefficients: error
    Polynomial too_big = Polynomial::monomial(f7, Exponent{5}, Fp{1});
    CHECK_THROWS_AS(pairing_scalar(too_big, ones), MathError);
}

TEST_CASE("series pairing and its constant term") {
    Field f7(7);
    TrialRng rng(25);

    // unit row projects onto the first component
    SeriesVector w = random_series_vector(rng, f7, 1, 2, 5);
    PolyVector e1{{Polynomial::constant(f7, 1, f7.one()), Polynomial(f7, 1)}};
    CHECK(pairing_series(e1, w) == w[0]);

    PolyVector zero = PolyVector::zero(f7, 1, 2);
    CHECK(pairing_series(zero, w).is_zero());

    // X-1 against constants vanishes
    TruncatedSeries ones =
        TruncatedSeries::from_function(f7, 1, 5, [&](const Exponent&) { return Fp{1}; });
    Polynomial x_minus_1 = Polynomial::monomial(f7, Exponent{1}, Fp{1}) +
                           Polynomial::constant(f7, 1, f7.from_int(-1));
    CHECK(pairing_series(PolyVector{{x_minus_1}}, SeriesVector{{ones}}).is_zero());

    // constant term of the series pairing is the scalar pairing
    for (int t = 0; t < 50; ++t) {
        std::size_t r = 1 + rng.below(2);
        std::size_t l = 1 + rng.below(2);
        PolyVector d = random_poly_vector(rng, f7, r, l, 2);
        SeriesVector v = random_series_vector(rng, f7, r, l, 5);
        TruncatedSeries full = pairing_series(d, v);
        CHECK(full.coeff(Exponent::zeros(r)) == pairing_scalar(d, v));
    }
}

TEST_CASE("adjointness of the operator against multiplication") {
    Field f7(7);
    TrialRng rng(26);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng.below(3);
        Polynomial c = random_polynomial(rng, f7, r, 3);
        Polynomial d = random_polynomial(rng, f7, r, 3);
        TruncatedSeries w = random_series(rng, f7, r, 10);
        CHECK(pairing_scalar(c * d, w) == pairing_scalar(c, apply(d, w)));
    }
    for (int t = 0; t < 50; ++t) {
        std::size_t r = 1 + rng.below(2);
        std::size_t k = 1 + rng.below(3), l = 1 + rng.below(3);
        PolyVector c = random_poly_vector(rng, f7, r, k, 2);
        PolyMatrix m = random_poly_matrix(rng, f7, r, k, l, 2);
        SeriesVector w = random_series_vector(rng, f7, r, l, 8);
        CHECK(pairing_scalar(c * m, w) == pairing_scalar(c, apply(m, w)));
    }
}

TEST_CASE("shift composition law") {
    Field f7(7);
    TrialRng rng(27);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng.below(3);
        Exponent a = random_exponent(rng, r, 3);
        Exponent b = random_exponent(rng, r, 3);
        TruncatedSeries w = random_series(rng, f7, r, 8);
        TruncatedSeries joint = shift(a.plus(b), w);
        TruncatedSeries nested = shift(a, shift(b, w));
        CHECK(joint.bound() == nested.bound());
        CHECK(joint == nested);
    }
}

TEST_CASE("module axioms on common balls") {
    Field f7(7);
    TrialRng rng(28);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng.below(2);
        Polynomial d = random_polynomial(rng, f7, r, 3);
        Polynomial e = random_polynomial(rng, f7, r, 3);
        TruncatedSeries w = random_series(rng, f7, r, 8);
        CHECK(equal_on_common_ball(apply(d + e, w), apply(d, w) + apply(e, w)));
        CHECK(equal_on_common_ball(apply(d * e, w), apply(d, apply(e, w))));
    }
}
