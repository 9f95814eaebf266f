#include <qeg/ratfunc.hpp>
#include <qeg/powerseries.hpp>
#include <qeg/qcalc.hpp>

#include <doctest.h>

using namespace qeg;

namespace {
const RatPoly kOne = RatPoly::constant(Rational(1));
RationalFunction rf(RatPoly num, RatPoly den) {
    return RationalFunction(std::move(num), std::move(den));
}
}  // namespace

TEST_CASE("field arithmetic in canonical form") {
    const RationalFunction z = rf(RatPoly::z(), kOne);
    CHECK((z - z).is_zero());

    const RatPoly one_plus_z{Rational(1), Rational(1)};
    CHECK(rf(kOne, one_plus_z) * rf(one_plus_z, kOne) == RationalFunction::constant(Rational(1)));

    // 1/(1+z) + 1/(1-z) = 2/(1-z^2)
    const RatPoly one_minus_z{Rational(1), Rational(-1)};
    const RatPoly one_minus_z2{Rational(1), Rational(0), Rational(-1)};
    CHECK(rf(kOne, one_plus_z) + rf(kOne, one_minus_z) ==
          rf(RatPoly::constant(Rational(2)), one_minus_z2));

    CHECK_THROWS_AS(z / RationalFunction(), std::domain_error);
}

TEST_CASE("canonical form: coprime, monic denominator") {
    // (2z^2 + 2z) / (4z + 4) reduces to z/2
    const RationalFunction f =
        rf(RatPoly{Rational(0), Rational(2), Rational(2)}, RatPoly{Rational(4), Rational(4)});
    CHECK(f.numerator() == RatPoly{Rational(0), Rational(1, 2)});
    CHECK(f.denominator() == kOne);

    const RationalFunction g = rf(RatPoly{Rational(1)}, RatPoly{Rational(2), Rational(2)});
    CHECK(g.denominator().leading() == Rational(1));

    // (a*b)/b = a for a selection of nonzero b
    const RationalFunction a = rf(RatPoly{Rational(1), Rational(3)},
                                  RatPoly{Rational(2), Rational(0), Rational(1)});
    for (const RationalFunction& b :
         {rf(RatPoly{Rational(1), Rational(1)}, kOne),
          rf(RatPoly{Rational(-1, 2), Rational(0), Rational(5)}, RatPoly{Rational(1), Rational(7)}),
          RationalFunction::constant(Rational(-3, 7))})
        CHECK((a * b) / b == a);
}

TEST_CASE("euler theta operator") {
    CHECK(euler_theta(RationalFunction::constant(Rational(5, 3))).is_zero());

    const RatPoly one_plus_z{Rational(1), Rational(1)};
    const RationalFunction f = rf(kOne, one_plus_z);
    // theta 1/(1+z) = -z/(1+z)^2
    const RationalFunction t1 = euler_theta(f);
    CHECK(t1 == rf(RatPoly{Rational(0), Rational(-1)}, one_plus_z * one_plus_z));
    // theta^2 1/(1+z) = z(z-1)/(1+z)^3
    const RationalFunction t2 = euler_theta(t1);
    CHECK(t2 == rf(RatPoly{Rational(0), Rational(-1), Rational(1)},
                   one_plus_z * one_plus_z * one_plus_z));

    // linearity with fixed rational weights
    const RationalFunction g = rf(RatPoly{Rational(2), Rational(0), Rational(1)},
                                  RatPoly{Rational(1), Rational(-1, 3)});
    const RationalFunction a = RationalFunction::constant(Rational(3, 5));
    const RationalFunction b = RationalFunction::constant(Rational(-7, 2));
    CHECK(euler_theta(f * a + g * b) == euler_theta(f) * a + euler_theta(g) * b);
}

TEST_CASE("regularized alternating q-binomial sums") {
    // r = 1, w = 1: values of (theta^n 1/(1+z)) at z = 1
    for (const Rational& q : {Rational(1, 2), Rational(2, 3)}) {
        CHECK(regularized_alt_qbinom_sum(0, 1, q, Rational(1)) == Rational(1, 2));
        CHECK(regularized_alt_qbinom_sum(1, 1, q, Rational(1)) == Rational(-1, 4));
        CHECK(regularized_alt_qbinom_sum(2, 1, q, Rational(1)) == Rational(0));
    }
    // convergent regime: n = 0, r = 1 is the plain geometric sum 1/(1+w)
    for (const Rational& w : {Rational(1, 2), Rational(1, 3)})
        CHECK(regularized_alt_qbinom_sum(0, 1, Rational(1, 2), w) ==
              (Rational(1) + w).reciprocal());

    // pole at z = 1 is reported with the factor index
    CHECK_THROWS_WITH_AS(regularized_alt_qbinom_sum(0, 2, Rational(1, 2), Rational(-2)),
                         doctest::Contains("factor i = 1"), std::domain_error);
}

TEST_CASE("taylor coefficients match the q-binomial series") {
    // 1/prod_{i<r}(1 + z w q^i) around z = 0 against C(v+r-1,v)_q (-w)^v
    for (long long r = 1; r <= 3; ++r)
        for (const Rational& q : {Rational(1, 2), Rational(1, 3)})
            for (const Rational& w : {Rational(1), Rational(1, 2)}) {
                TruncatedSeries den = TruncatedSeries::constant(Rational(1), 7);
                for (long long i = 0; i < r; ++i) {
                    TruncatedSeries factor = TruncatedSeries::constant(Rational(1), 7);
                    factor.coeff_mut(1) = w * pow(q, i);
                    den = den * factor;
                }
                const TruncatedSeries inv = den.reciprocal();
                Rational w_pow(1);
                for (long long v = 0; v <= 7; ++v) {
                    Rational expected = negbinom_series_coeff(r, v, q) * w_pow;
                    if (v % 2 == 1) expected = -expected;
                    CHECK(inv.coeff(v) == expected);
                    w_pow *= w;
                }
            }
}
