#pragma once

#include "qeg/rational.hpp"

#include <vector>

namespace qeg {

/// Exact truncated formal power series in t: the coefficients of t^0..t^K
/// are trusted, nothing beyond. Binary operations propagate the trusted
/// order as the minimum of the operands'.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long long order);

    static TruncatedSeries constant(const Rational& c, long long order);

    /// e^{c t} truncated: sum_{k<=K} c^k t^k / k!.
    static TruncatedSeries exp_linear(const Rational& c, long long order);

    long long order() const { return order_; }
    const Rational& coeff(long long k) const;
    Rational& coeff_mut(long long k);

    /// n! * [t^n], the exponential-generating-function reading of coefficient n.
    Rational egf_coeff(long long n) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries scaled(const Rational& c) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    /// Multiplication by t^j (exact): trusted order grows by j.
    TruncatedSeries shifted_up(long long j) const;

    TruncatedSeries pow(long long e) const;

    /// Restriction to a smaller trusted order.
    TruncatedSeries truncated(long long new_order) const;

private:
    std::vector<Rational> coeffs_;  // size order_ + 1
    long long order_;
};

/// w-Euler polynomial values E^{(r)}_{n,w}(x) for n = 0..order, read off
/// (2/(w e^t + 1))^r e^{x t}. Requires w != -1.
std::vector<Rational> classical_w_euler_coeffs(long long r, const Rational& w, const Rational& x,
                                               long long order);

/// w-Genocchi numbers G_{n,w} for n = 0..order, read off 2t/(w e^t + 1).
/// Requires w != -1.
std::vector<Rational> classical_genocchi_coeffs(const Rational& w, long long order);

/// Higher-order q-Genocchi numbers G^{(h,r)}_{n,q} for n = 0..order, read off
/// 2^r t^r / prod_{i=1}^{r} (q^{h-i+1} e^t + 1). The first r values are 0.
/// Requires q^{h-i+1} != -1 for each factor (and q != 0 when an exponent is
/// negative).
std::vector<Rational> cos_generating_coeffs(long long h, long long r, const Rational& q,
                                            long long order);

}  // namespace qeg
