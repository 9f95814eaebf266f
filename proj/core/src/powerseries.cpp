#include "qeg/powerseries.hpp"

#include "qeg/qcalc.hpp"

#include <algorithm>
#include <string>

namespace qeg {

TruncatedSeries::TruncatedSeries(long long order) : order_(order) {
    if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::exp_linear(const Rational& c, long long order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Rational(1);
    for (long long k = 1; k <= order; ++k)
        s.coeffs_[static_cast<size_t>(k)] =
            s.coeffs_[static_cast<size_t>(k - 1)] * c / Rational(k);
    return s;
}

const Rational& TruncatedSeries::coeff(long long k) const {
    if (k < 0 || k > order_)
        throw std::domain_error("TruncatedSeries: coefficient " + std::to_string(k) +
                                " beyond trusted order " + std::to_string(order_));
    return coeffs_[static_cast<size_t>(k)];
}

Rational& TruncatedSeries::coeff_mut(long long k) {
    return const_cast<Rational&>(static_cast<const TruncatedSeries*>(this)->coeff(k));
}

Rational TruncatedSeries::egf_coeff(long long n) const {
    return coeff(n) * Rational(factorial(n));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_));
    for (long long k = 0; k <= r.order_; ++k)
        r.coeffs_[static_cast<size_t>(k)] =
            a.coeffs_[static_cast<size_t>(k)] + b.coeffs_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_));
    for (long long k = 0; k <= r.order_; ++k)
        r.coeffs_[static_cast<size_t>(k)] =
            a.coeffs_[static_cast<size_t>(k)] - b.coeffs_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_));
    for (long long i = 0; i <= r.order_; ++i) {
        const Rational& ai = a.coeffs_[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (long long j = 0; i + j <= r.order_; ++j)
            r.coeffs_[static_cast<size_t>(i + j)] += ai * b.coeffs_[static_cast<size_t>(j)];
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0].is_zero())
        throw std::domain_error("TruncatedSeries: reciprocal needs a nonzero constant term");
    TruncatedSeries r(order_);
    const Rational inv0 = coeffs_[0].reciprocal();
    r.coeffs_[0] = inv0;
    for (long long n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (long long k = 1; k <= n; ++k)
            acc += coeffs_[static_cast<size_t>(k)] * r.coeffs_[static_cast<size_t>(n - k)];
        r.coeffs_[static_cast<size_t>(n)] = -inv0 * acc;
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted_up(long long j) const {
    if (j < 0) throw std::domain_error("TruncatedSeries: negative shift");
    TruncatedSeries r(order_ + j);
    for (long long k = 0; k <= order_; ++k)
        r.coeffs_[static_cast<size_t>(k + j)] = coeffs_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries TruncatedSeries::pow(long long e) const {
    if (e < 0) throw std::domain_error("TruncatedSeries: negative power");
    TruncatedSeries r = TruncatedSeries::constant(Rational(1), order_);
    for (long long i = 0; i < e; ++i) r = r * *this;
    return r;
}

TruncatedSeries TruncatedSeries::truncated(long long new_order) const {
    if (new_order > order_)
        throw std::domain_error("TruncatedSeries: cannot extend trusted order");
    TruncatedSeries r(new_order);
    for (long long k = 0; k <= new_order; ++k)
        r.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    return r;
}

std::vector<Rational> classical_w_euler_coeffs(long long r, const Rational& w, const Rational& x,
                                               long long order) {
    if (r < 1) throw std::domain_error("classical_w_euler_coeffs: order r must be positive");
    if (w == Rational(-1))
        throw std::domain_error("classical_w_euler_coeffs: w = -1 is a pole of 2/(w e^t + 1)");
    TruncatedSeries denom =
        TruncatedSeries::exp_linear(Rational(1), order).scaled(w) +
        TruncatedSeries::constant(Rational(1), order);
    TruncatedSeries s = denom.reciprocal().scaled(Rational(2)).pow(r) *
                        TruncatedSeries::exp_linear(x, order);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (long long n = 0; n <= order; ++n) out.push_back(s.egf_coeff(n));
    return out;
}

std::vector<Rational> classical_genocchi_coeffs(const Rational& w, long long order) {
    if (w == Rational(-1))
        throw std::domain_error("classical_genocchi_coeffs: w = -1 is a pole of 2t/(w e^t + 1)");
    TruncatedSeries denom =
        TruncatedSeries::exp_linear(Rational(1), order).scaled(w) +
        TruncatedSeries::constant(Rational(1), order);
    TruncatedSeries s = denom.reciprocal().scaled(Rational(2)).shifted_up(1).truncated(order);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (long long n = 0; n <= order; ++n) out.push_back(s.egf_coeff(n));
    return out;
}

std::vector<Rational> cos_generating_coeffs(long long h, long long r, const Rational& q,
                                            long long order) {
    if (r < 1) throw std::domain_error("cos_generating_coeffs: order r must be positive");
    TruncatedSeries denom = TruncatedSeries::constant(Rational(1), order);
    for (long long i = 1; i <= r; ++i) {
        const long long e = h - i + 1;
        if (q.is_zero() && e < 0)
            throw std::domain_error("cos_generating_coeffs: q = 0 with negative exponent h-i+1 (i = " +
                                    std::to_string(i) + ")");
        const Rational qe = pow(q, e);
        if (qe == Rational(-1))
            throw std::domain_error(
                "cos_generating_coeffs: factor i = " + std::to_string(i) +
                " has vanishing constant term (q^{h-i+1} = -1)");
        denom = denom * (TruncatedSeries::exp_linear(Rational(1), order).scaled(qe) +
                         TruncatedSeries::constant(Rational(1), order));
    }
    TruncatedSeries s =
        denom.reciprocal().scaled(pow(Rational(2), r)).shifted_up(r).truncated(order);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (long long n = 0; n <= order; ++n) out.push_back(s.egf_coeff(n));
    return out;
}

}  // namespace qeg
