#pragma once

#include "qeg/rational.hpp"

#include <string>
#include <vector>

namespace qeg {

/// Dense integer-coefficient polynomial in the indeterminate q.
/// Trailing zero coefficients are trimmed; the zero polynomial has
/// degree() == -1.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<long long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    static QPolynomial constant(BigInt c);
    static QPolynomial one() { return constant(1); }

    /// 1 + q + ... + q^{m-1} (the q-analogue of m as a polynomial), m >= 0.
    static QPolynomial bracket(long long m);

    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^i; zero beyond the degree.
    const BigInt& coeff(long long i) const;

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    /// Exact quotient a / b; throws std::domain_error if the division
    /// leaves a remainder or a coefficient quotient is not integral.
    static QPolynomial div_exact(const QPolynomial& a, const QPolynomial& b);

    Rational eval(const Rational& q) const;

    bool operator==(const QPolynomial&) const = default;

    std::string str() const;

private:
    std::vector<BigInt> coeffs_;  // coeffs_[i] = coefficient of q^i

    void trim();
};

/// A fractional argument x = s/d together with a declared d-th root u of q,
/// so that q = u^d and q^{l x} = u^{l s} is exactly computable for integer l.
/// The library never extracts roots itself; the caller supplies u.
struct ArgSpec {
    long long s;  // numerator of x
    long long d;  // denominator of x, >= 1
    Rational u;   // declared value of q^{1/d}, nonzero

    ArgSpec(long long s_, long long d_, Rational u_);

    /// Integer argument x with base q (d = 1, u = q).
    static ArgSpec integer(long long x, const Rational& q) { return ArgSpec(x, 1, q); }

    Rational q() const { return pow(u, d); }
    Rational x() const { return Rational(BigInt(s), BigInt(d)); }

    /// q^{l x} = u^{l s}.
    Rational q_pow_scaled(long long l) const { return pow(u, l * s); }
};

/// Value of a p-adic valuation: an integer or +infinity (v_p(0)).
class PadicValuation {
public:
    static PadicValuation infinity() {
        PadicValuation v;
        v.infinite_ = true;
        return v;
    }
    PadicValuation(long long value = 0) : value_(value) {}

    bool is_infinite() const { return infinite_; }
    long long value() const {
        if (infinite_) throw std::domain_error("PadicValuation: infinite valuation has no value");
        return value_;
    }

    bool at_least(long long bound) const { return infinite_ || value_ >= bound; }

    friend bool operator==(const PadicValuation& a, const PadicValuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator<(const PadicValuation& a, const PadicValuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const PadicValuation& a, const PadicValuation& b) { return !(b < a); }
    friend bool operator>=(const PadicValuation& a, const PadicValuation& b) { return !(a < b); }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    bool infinite_ = false;
    long long value_ = 0;
};

bool is_odd_prime(long long p);

/// v_p(x), the multiplicity of the odd prime p in x (negative for
/// denominators); +infinity for x = 0.
PadicValuation padic_valuation(const Rational& x, long long p);

/// [m]_q = (1 - q^m)/(1 - q); the limit value m at q = 1.
Rational q_bracket(long long m, const Rational& q);

/// [offset + s/d]_{u^d} computed exactly as (1 - u^{d*offset+s})/(1 - u^d);
/// the limit value offset + s/d when u^d = 1.
Rational q_bracket_frac(const ArgSpec& arg, long long offset);

/// [m]_{-q} = (1 - (-q)^m)/(1 + q); requires q != -1.
Rational q_minus_bracket(long long m, const Rational& q);

/// (a:q)_k = prod_{i=0}^{k-1} (1 - a q^i); (a:q)_0 = 1.
Rational q_shift_factorial(const Rational& a, const Rational& q, long long k);

/// Gaussian binomial C(n,k)_q as a polynomial in q, via the product formula
/// [n]_q [n-1]_q ... [n-k+1]_q / [k]_q! with exact polynomial division.
/// Degree k(n-k), all coefficients nonnegative. Zero polynomial for k > n.
QPolynomial gauss_binomial_poly(long long n, long long k);

/// gauss_binomial_poly(n, k) evaluated at a rational point. Pass 1/q for
/// the q^{-1}-parameterized family.
Rational gauss_binomial_eval(long long n, long long k, const Rational& q);

/// m-th series coefficient of 1/(z:q)_alpha, i.e. C(m+alpha-1, m)_q
/// evaluated at q.
Rational negbinom_series_coeff(long long alpha, long long m, const Rational& q);

BigInt factorial(long long n);
BigInt binomial(long long n, long long k);

}  // namespace qeg
