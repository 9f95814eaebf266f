#include <qeg/rational.hpp>

#include <doctest.h>

#include <sstream>

using qeg::BigInt;
using qeg::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    const Rational a(BigInt(6), BigInt(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
    CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("arithmetic is exact and canonical") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("ordering crosses denominators") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
}

TEST_CASE("pow handles negative exponents and rejects 0^-k") {
    CHECK(qeg::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(qeg::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(qeg::pow(Rational(5), 0) == Rational(1));
    CHECK(qeg::pow(Rational(0), 0) == Rational(1));
    CHECK_THROWS_AS(qeg::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("canonical strings round-trip") {
    const Rational samples[] = {Rational(-1, 5), Rational(0), Rational(22, 7), Rational(-9),
                                Rational(BigInt("123456789123456789"), BigInt(1000000007))};
    for (const Rational& r : samples) CHECK(Rational::parse(r.str()) == r);
    CHECK(Rational(-1, 5).str() == "-1/5");
    CHECK(Rational(8).str() == "8");
    CHECK(Rational::parse("+3/9") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);

    std::ostringstream os;
    os << Rational(-3, 4);
    CHECK(os.str() == "-3/4");
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rational(-1, 5).decimal_str(3) == "-0.200");
    CHECK(Rational(1, 3).decimal_str(2) == "0.33");
    CHECK(Rational(2, 3).decimal_str(2) == "0.67");
    CHECK(Rational(1, 2).decimal_str(0) == "1");
    CHECK(Rational(-1, 2).decimal_str(0) == "-1");
    CHECK(Rational(12345, 100).decimal_str(1) == "123.5");
}
