#include <qeg/powerseries.hpp>
#include <qeg/qcalc.hpp>

#include <doctest.h>

#include <vector>

using namespace qeg;

namespace {

// Recurrence oracle from (w e^t + 1) * sum E_{n,w} t^n/n! = 2:
// w sum_{k<=n} C(n,k) E_{k,w} + E_{n,w} = 2 [n = 0].
std::vector<Rational> euler_numbers_by_recurrence(const Rational& w, long long top) {
    std::vector<Rational> e(static_cast<size_t>(top) + 1);
    for (long long n = 0; n <= top; ++n) {
        Rational acc = n == 0 ? Rational(2) : Rational(0);
        for (long long k = 0; k < n; ++k)
            acc -= w * Rational(binomial(n, k)) * e[static_cast<size_t>(k)];
        e[static_cast<size_t>(n)] = acc / (Rational(1) + w);
    }
    return e;
}

// Same device for 2t/(w e^t + 1): w sum C(n,k) G_k + G_n = 2 [n = 1].
std::vector<Rational> genocchi_numbers_by_recurrence(const Rational& w, long long top) {
    std::vector<Rational> g(static_cast<size_t>(top) + 1);
    for (long long n = 0; n <= top; ++n) {
        Rational acc = n == 1 ? Rational(2) : Rational(0);
        for (long long k = 0; k < n; ++k)
            acc -= w * Rational(binomial(n, k)) * g[static_cast<size_t>(k)];
        g[static_cast<size_t>(n)] = acc / (Rational(1) + w);
    }
    return g;
}

}  // namespace

TEST_CASE("series primitives") {
    CHECK(TruncatedSeries::exp_linear(Rational(0), 5).coeff(0) == Rational(1));
    CHECK(TruncatedSeries::exp_linear(Rational(0), 5).coeff(3) == Rational(0));

    const TruncatedSeries e1 = TruncatedSeries::exp_linear(Rational(1), 3);
    CHECK(e1.coeff(0) == Rational(1));
    CHECK(e1.coeff(1) == Rational(1));
    CHECK(e1.coeff(2) == Rational(1, 2));
    CHECK(e1.coeff(3) == Rational(1, 6));

    const TruncatedSeries eh = TruncatedSeries::exp_linear(Rational(1, 2), 2);
    CHECK(eh.coeff(2) == Rational(1, 8));

    // 1/(1+t) = 1 - t + t^2 - t^3
    TruncatedSeries one_plus_t = TruncatedSeries::constant(Rational(1), 3);
    one_plus_t.coeff_mut(1) = Rational(1);
    const TruncatedSeries inv = one_plus_t.reciprocal();
    CHECK(inv.coeff(0) == Rational(1));
    CHECK(inv.coeff(1) == Rational(-1));
    CHECK(inv.coeff(2) == Rational(1));
    CHECK(inv.coeff(3) == Rational(-1));

    const TruncatedSeries prod = inv * one_plus_t;
    CHECK(prod.coeff(0) == Rational(1));
    for (long long k = 1; k <= 3; ++k) CHECK(prod.coeff(k) == Rational(0));

    CHECK_THROWS_AS(TruncatedSeries(4).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(e1.coeff(4), std::domain_error);
    CHECK_THROWS_AS(e1.truncated(9), std::domain_error);
}

TEST_CASE("trusted order propagates as the minimum") {
    const TruncatedSeries a = TruncatedSeries::exp_linear(Rational(1), 8);
    const TruncatedSeries b = TruncatedSeries::exp_linear(Rational(2), 5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
    CHECK(a.shifted_up(2).order() == 10);
}

TEST_CASE("classical w-Euler values against the recurrence oracle") {
    // anchors: 1, -1/2, 0, 1/4 at w = 1, x = 0
    const auto e = classical_w_euler_coeffs(1, Rational(1), Rational(0), 8);
    CHECK(e[0] == Rational(1));
    CHECK(e[1] == Rational(-1, 2));
    CHECK(e[2] == Rational(0));
    CHECK(e[3] == Rational(1, 4));

    for (const Rational& w : {Rational(1), Rational(1, 2)}) {
        const auto oracle = euler_numbers_by_recurrence(w, 8);
        const auto got = classical_w_euler_coeffs(1, w, Rational(0), 8);
        for (long long n = 0; n <= 8; ++n) CHECK(got[static_cast<size_t>(n)] == oracle[static_cast<size_t>(n)]);
    }

    // E_1(1/2) = 0 by the symmetry of the classical polynomials
    CHECK(classical_w_euler_coeffs(1, Rational(1), Rational(1, 2), 1)[1] == Rational(0));
    // order-2 constant term (2/2)^2 = 1
    CHECK(classical_w_euler_coeffs(2, Rational(1), Rational(0), 0)[0] == Rational(1));

    CHECK_THROWS_AS(classical_w_euler_coeffs(1, Rational(-1), Rational(0), 3),
                    std::domain_error);
}

TEST_CASE("classical w-Genocchi values against the recurrence oracle") {
    const auto g = classical_genocchi_coeffs(Rational(1), 4);
    CHECK(g[0] == Rational(0));
    CHECK(g[1] == Rational(1));
    CHECK(g[2] == Rational(-1));
    CHECK(g[3] == Rational(0));
    CHECK(g[4] == Rational(1));

    for (const Rational& w : {Rational(1), Rational(1, 2), Rational(2, 3)}) {
        const auto oracle = genocchi_numbers_by_recurrence(w, 8);
        const auto got = classical_genocchi_coeffs(w, 8);
        CHECK(got[0] == Rational(0));  // the factor t
        for (long long n = 0; n <= 8; ++n) CHECK(got[static_cast<size_t>(n)] == oracle[static_cast<size_t>(n)]);
    }
    CHECK_THROWS_AS(classical_genocchi_coeffs(Rational(-1), 3), std::domain_error);
}

TEST_CASE("order-r values are r-fold products of the order-1 series") {
    for (long long r = 1; r <= 3; ++r)
        for (const Rational& w : {Rational(1), Rational(1, 2)}) {
            TruncatedSeries denom = TruncatedSeries::exp_linear(Rational(1), 8).scaled(w) +
                                    TruncatedSeries::constant(Rational(1), 8);
            const TruncatedSeries base = denom.reciprocal().scaled(Rational(2));
            TruncatedSeries folded = TruncatedSeries::constant(Rational(1), 8);
            for (long long i = 0; i < r; ++i) folded = folded * base;
            const auto direct = classical_w_euler_coeffs(r, w, Rational(0), 8);
            for (long long n = 0; n <= 8; ++n)
                CHECK(direct[static_cast<size_t>(n)] == folded.egf_coeff(n));
        }
}

TEST_CASE("Genocchi/Euler bridge: G_{n+1,w}/(n+1) = E_{n,w}") {
    for (const Rational& w : {Rational(1), Rational(1, 2)}) {
        const auto e = classical_w_euler_coeffs(1, w, Rational(0), 7);
        const auto g = classical_genocchi_coeffs(w, 8);
        for (long long n = 0; n <= 7; ++n)
            CHECK(g[static_cast<size_t>(n + 1)] / Rational(n + 1) == e[static_cast<size_t>(n)]);
    }
}

TEST_CASE("weighted generating function coefficients") {
    // h = 0, r = 1 is q-free and classical
    for (const Rational& q : {Rational(1, 2), Rational(7, 3)}) {
        const auto g = cos_generating_coeffs(0, 1, q, 2);
        CHECK(g[1] == Rational(1));
        CHECK(g[2] == Rational(-1));
    }
    // constant term of 2/(q e^t + 1) at q = 1/2
    CHECK(cos_generating_coeffs(1, 1, Rational(1, 2), 1)[1] == Rational(4, 3));
    // the t^r factor forces r leading zeros
    for (long long r = 1; r <= 3; ++r) {
        const auto g = cos_generating_coeffs(r - 1, r, Rational(1, 2), r + 2);
        for (long long n = 0; n < r; ++n) CHECK(g[static_cast<size_t>(n)] == Rational(0));
    }

    // h = r-1 at q = 1 reproduces the r-fold classical data
    for (long long r = 1; r <= 3; ++r) {
        const auto got = cos_generating_coeffs(r - 1, r, Rational(1), 8);
        TruncatedSeries denom = TruncatedSeries::exp_linear(Rational(1), 8) +
                                TruncatedSeries::constant(Rational(1), 8);
        TruncatedSeries folded =
            denom.reciprocal().scaled(Rational(2)).pow(r).shifted_up(r).truncated(8);
        for (long long n = 0; n <= 8; ++n)
            CHECK(got[static_cast<size_t>(n)] == folded.egf_coeff(n));
    }

    CHECK_THROWS_WITH_AS(cos_generating_coeffs(1, 2, Rational(-1), 4),
                         doctest::Contains("factor i = 1"), std::domain_error);
    CHECK_THROWS_AS(cos_generating_coeffs(0, 2, Rational(0), 4), std::domain_error);
}

TEST_CASE("denominators stay within factorial-times-small bounds") {
    for (long long r = 1; r <= 2; ++r)
        for (const Rational& w : {Rational(1), Rational(1, 2)}) {
            const auto e = classical_w_euler_coeffs(r, w, Rational(0), 12);
            const BigInt base = (Rational(1) + w).num() * w.den() * 2;
            for (long long n = 0; n <= 12; ++n) {
                // raw coefficient denominator divides n! * base^{2(n+r+1)}
                const Rational raw = e[static_cast<size_t>(n)] / Rational(factorial(n));
                BigInt bound = factorial(n);
                for (long long i = 0; i < 2 * (n + r + 1); ++i) bound *= base;
                CHECK(bound % raw.den() == 0);
            }
        }
}
