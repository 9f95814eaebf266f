#pragma once

#include "qeg/rational.hpp"

#include <string>
#include <vector>

namespace qeg {

/// Dense univariate polynomial over Rational (indeterminate z).
/// Trailing zeros trimmed; the zero polynomial has degree() == -1.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RatPoly constant(Rational c);
    static RatPoly z();

    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(long long i) const;
    const Rational& leading() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly scaled(const Rational& c) const;

    /// Euclidean division: returns {quotient, remainder}.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

    /// Monic greatest common divisor (Euclidean algorithm over the rationals).
    static RatPoly gcd(RatPoly a, RatPoly b);

    RatPoly derivative() const;
    RatPoly monic() const;
    Rational eval(const Rational& z) const;

    bool operator==(const RatPoly&) const = default;

    std::string str() const;

private:
    std::vector<Rational> coeffs_;

    void trim();
};

/// Reduced quotient of two RatPolys: gcd(num, den) = 1 and the denominator
/// is monic, so equality is componentwise on the canonical form.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(RatPoly::constant(1)) {}
    RationalFunction(RatPoly num, RatPoly den);

    static RationalFunction constant(Rational c);

    const RatPoly& numerator() const { return num_; }
    const RatPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    bool operator==(const RationalFunction&) const = default;

    RationalFunction derivative() const;

    /// Evaluation; throws std::domain_error on a pole.
    Rational eval(const Rational& z) const;

    std::string str() const;

private:
    RatPoly num_;
    RatPoly den_;
};

/// The Euler operator theta = z d/dz.
RationalFunction euler_theta(const RationalFunction& f);

/// Abel-regularized value of sum_{v>=0} C(r+v-1, v)_q (-w)^v v^n, obtained
/// exactly as (theta^n R)(1) for R(z) = 1/prod_{i=0}^{r-1} (1 + z w q^i).
/// Requires 1 + w q^i != 0 for 0 <= i < r (no pole at z = 1).
Rational regularized_alt_qbinom_sum(long long n, long long r, const Rational& q,
                                    const Rational& w);

}  // namespace qeg
