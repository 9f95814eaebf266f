#include <qeg/qcalc.hpp>
#include <qeg/powerseries.hpp>

#include <doctest.h>

using namespace qeg;

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(Rational(0), 3).is_infinite());
    CHECK(padic_valuation(Rational(21, 5), 3).value() == 1);
    CHECK(padic_valuation(Rational(1, 9), 3).value() == -2);
    CHECK(padic_valuation(Rational(50), 5).value() == 2);
    CHECK_THROWS_AS(padic_valuation(Rational(1), 2), std::domain_error);
    CHECK_THROWS_AS(padic_valuation(Rational(1), 9), std::domain_error);
    CHECK_THROWS_AS(padic_valuation(Rational(1), 1), std::domain_error);
}

TEST_CASE("valuation ordering treats infinity as largest") {
    const PadicValuation inf = PadicValuation::infinity();
    CHECK(PadicValuation(3) < inf);
    CHECK(inf >= PadicValuation(1000));
    CHECK(inf >= inf);
    CHECK(inf.at_least(1 << 20));
    CHECK(PadicValuation(2).at_least(2));
    CHECK_FALSE(PadicValuation(1).at_least(2));
    CHECK_THROWS_AS(inf.value(), std::domain_error);
}

TEST_CASE("q-bracket") {
    CHECK(q_bracket(0, Rational(7, 9)) == Rational(0));
    CHECK(q_bracket(3, Rational(1, 2)) == Rational(7, 4));
    CHECK(q_bracket(5, Rational(1)) == Rational(5));  // q -> 1 limit
    CHECK(q_bracket(-3, Rational(1)) == Rational(-3));
    CHECK_THROWS_AS(q_bracket(-1, Rational(0)), std::domain_error);
    // [-m]_q = -q^{-m} [m]_q
    for (long long m = 1; m <= 5; ++m)
        CHECK(q_bracket(-m, Rational(2, 3)) ==
              -pow(Rational(2, 3), -m) * q_bracket(m, Rational(2, 3)));
}

TEST_CASE("bracket addition law") {
    for (const Rational& q : {Rational(1, 2), Rational(2), Rational(-1, 3)})
        for (long long m = -5; m <= 5; ++m)
            for (long long n = -5; n <= 5; ++n)
                CHECK(q_bracket(m + n, q) == q_bracket(m, q) + pow(q, m) * q_bracket(n, q));
}

TEST_CASE("fractional q-bracket through a declared root") {
    // integer-argument consistency
    const Rational q0(3, 5);
    for (long long m = -3; m <= 3; ++m)
        CHECK(q_bracket_frac(ArgSpec::integer(0, q0), m) == q_bracket(m, q0));
    CHECK(q_bracket_frac(ArgSpec(1, 2, Rational(1, 2)), 0) == Rational(2, 3));
    CHECK(q_bracket_frac(ArgSpec(3, 3, Rational(2)), 1) == Rational(9));
    // u^d = 1 takes the limit value offset + s/d
    CHECK(q_bracket_frac(ArgSpec(1, 2, Rational(1)), 3) == Rational(7, 2));
}

TEST_CASE("ArgSpec validation") {
    CHECK_THROWS_AS(ArgSpec(1, 0, Rational(2)), std::domain_error);
    CHECK_THROWS_AS(ArgSpec(1, 2, Rational(0)), std::domain_error);
    const ArgSpec a(3, 2, Rational(1, 2));
    CHECK(a.q() == Rational(1, 4));
    CHECK(a.x() == Rational(3, 2));
    CHECK(a.q_pow_scaled(2) == Rational(1, 64));  // q^{2x} = u^{6}
}

TEST_CASE("signed q-bracket") {
    CHECK(q_minus_bracket(0, Rational(5, 7)) == Rational(0));
    CHECK(q_minus_bracket(1, Rational(5, 7)) == Rational(1));
    CHECK(q_minus_bracket(2, Rational(1, 2)) == Rational(1, 2));
    CHECK_THROWS_AS(q_minus_bracket(1, Rational(-1)), std::domain_error);
}

TEST_CASE("q-shift factorial") {
    const Rational a(-1, 2), q(1, 2);
    CHECK(q_shift_factorial(a, q, 0) == Rational(1));
    CHECK(q_shift_factorial(Rational(1), q, 3) == Rational(0));
    CHECK(q_shift_factorial(a, q, 2) == Rational(15, 8));
    for (const Rational& aa : {Rational(-1, 2), Rational(2, 3), Rational(3)})
        for (const Rational& qq : {Rational(1, 2), Rational(-2, 5)})
            for (long long k = 0; k <= 20; ++k)
                CHECK(q_shift_factorial(aa, qq, k + 1) ==
                      q_shift_factorial(aa, qq, k) * (Rational(1) - aa * pow(qq, k)));
}

TEST_CASE("gaussian binomial polynomials") {
    CHECK(gauss_binomial_poly(7, 0) == QPolynomial::one());
    CHECK(gauss_binomial_poly(2, 1) == QPolynomial({1, 1}));
    CHECK(gauss_binomial_poly(4, 2) == QPolynomial({1, 1, 2, 1, 1}));
    CHECK(gauss_binomial_poly(3, 5).is_zero());  // k > n convention
    CHECK(gauss_binomial_poly(0, 0) == QPolynomial::one());

    for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; k <= n; ++k) {
            const QPolynomial g = gauss_binomial_poly(n, k);
            CHECK(g == gauss_binomial_poly(n, n - k));           // symmetry
            CHECK(g.degree() == (k == 0 || k == n ? 0 : k * (n - k)));
            for (long long i = 0; i <= g.degree(); ++i) CHECK(g.coeff(i) >= 0);
        }

    // q-Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k)
    for (long long n = 1; n <= 12; ++n)
        for (long long k = 1; k <= n; ++k) {
            std::vector<BigInt> mono(static_cast<size_t>(k) + 1, BigInt(0));
            mono.back() = 1;
            CHECK(gauss_binomial_poly(n, k) ==
                  gauss_binomial_poly(n - 1, k - 1) +
                      QPolynomial(mono) * gauss_binomial_poly(n - 1, k));
        }
}

TEST_CASE("gaussian binomial evaluation") {
    CHECK(gauss_binomial_eval(4, 2, Rational(1)) == Rational(6));
    CHECK(gauss_binomial_eval(2, 1, Rational(1, 2)) == Rational(3, 2));
    CHECK(gauss_binomial_eval(3, 3, Rational(9, 7)) == Rational(1));
    for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; k <= n; ++k)
            CHECK(gauss_binomial_eval(n, k, Rational(1)) == Rational(binomial(n, k)));
}

TEST_CASE("series coefficients of 1/(z:q)_alpha") {
    CHECK(negbinom_series_coeff(1, 9, Rational(2, 3)) == Rational(1));
    CHECK(negbinom_series_coeff(2, 2, Rational(1, 2)) == Rational(7, 4));
    CHECK(negbinom_series_coeff(4, 0, Rational(5, 3)) == Rational(1));
    CHECK_THROWS_AS(negbinom_series_coeff(0, 1, Rational(1, 2)), std::domain_error);

    // match the power-series inversion of (z:q)_r in the z variable
    for (const Rational& q : {Rational(1, 2), Rational(1, 3)})
        for (long long r = 1; r <= 4; ++r) {
            TruncatedSeries prod = TruncatedSeries::constant(Rational(1), 9);
            for (long long i = 0; i < r; ++i) {
                TruncatedSeries factor = TruncatedSeries::constant(Rational(1), 9);
                factor.coeff_mut(1) = -pow(q, i);
                prod = prod * factor;
            }
            const TruncatedSeries inv = prod.reciprocal();
            for (long long m = 0; m <= 9; ++m)
                CHECK(inv.coeff(m) == negbinom_series_coeff(r, m, q));
        }
}

TEST_CASE("polynomial exact division rejects inexact input") {
    // q^2 + 1 does not divide q^3 + 1
    const QPolynomial a({1, 0, 0, 1});
    const QPolynomial b({1, 0, 1});
    CHECK_THROWS_AS(QPolynomial::div_exact(a, b), std::domain_error);
    CHECK(QPolynomial::div_exact(a * b, b) == a);
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(7, 0) == 1);
}
