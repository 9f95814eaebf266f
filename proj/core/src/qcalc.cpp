#include "qeg/qcalc.hpp"

#include <algorithm>

namespace qeg {

namespace {
const BigInt kZero = 0;
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(BigInt c) {
    QPolynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

QPolynomial QPolynomial::bracket(long long m) {
    if (m < 0) throw std::domain_error("QPolynomial::bracket: negative index");
    QPolynomial p;
    p.coeffs_.assign(static_cast<size_t>(m), BigInt(1));
    return p;
}

const BigInt& QPolynomial::coeff(long long i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
    }
    r.trim();
    return r;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) r.coeffs_[i] -= b.coeffs_[i];
    }
    r.trim();
    return r;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPolynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

QPolynomial QPolynomial::div_exact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("QPolynomial: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw std::domain_error("QPolynomial: inexact division (degree too small)");

    std::vector<BigInt> rem = a.coeffs_;
    const BigInt& lead = b.coeffs_.back();
    QPolynomial quot;
    quot.coeffs_.assign(rem.size() - b.coeffs_.size() + 1, BigInt(0));

    for (size_t i = rem.size(); i-- >= b.coeffs_.size();) {
        if (rem[i].is_zero()) {
            if (i == 0) break;
            continue;
        }
        if (rem[i] % lead != 0)
            throw std::domain_error("QPolynomial: inexact division (noninteger quotient)");
        BigInt c = rem[i] / lead;
        size_t shift = i - (b.coeffs_.size() - 1);
        for (size_t j = 0; j < b.coeffs_.size(); ++j) rem[shift + j] -= c * b.coeffs_[j];
        quot.coeffs_[shift] = std::move(c);
        if (i == 0) break;
    }
    for (const BigInt& c : rem)
        if (!c.is_zero()) throw std::domain_error("QPolynomial: inexact division (remainder)");
    quot.trim();
    return quot;
}

Rational QPolynomial::eval(const Rational& q) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * q + Rational(coeffs_[i]);
        if (i == 0) break;
    }
    return acc;
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += coeffs_[i].sign() < 0 ? " - " : " + ";
        else if (coeffs_[i].sign() < 0) out += "-";
        BigInt mag = boost::multiprecision::abs(coeffs_[i]);
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) {
            out += "q";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

ArgSpec::ArgSpec(long long s_, long long d_, Rational u_) : s(s_), d(d_), u(std::move(u_)) {
    if (d < 1) throw std::domain_error("ArgSpec: denominator d must be >= 1");
    if (u.is_zero()) throw std::domain_error("ArgSpec: root u must be nonzero");
}

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

PadicValuation padic_valuation(const Rational& x, long long p) {
    if (!is_odd_prime(p))
        throw std::domain_error("padic_valuation: p = " + std::to_string(p) + " is not an odd prime");
    if (x.is_zero()) return PadicValuation::infinity();

    const BigInt bp = p;
    auto multiplicity = [&bp](BigInt v) {
        long long m = 0;
        while (v % bp == 0) {
            v /= bp;
            ++m;
        }
        return m;
    };
    return PadicValuation(multiplicity(boost::multiprecision::abs(x.num())) -
                          multiplicity(x.den()));
}

Rational q_bracket(long long m, const Rational& q) {
    if (q == Rational(1)) return Rational(m);
    if (m < 0 && q.is_zero())
        throw std::domain_error("q_bracket: q = 0 with negative index");
    return (Rational(1) - pow(q, m)) / (Rational(1) - q);
}

Rational q_bracket_frac(const ArgSpec& arg, long long offset) {
    const Rational base = arg.q();
    if (base == Rational(1))
        return Rational(BigInt(arg.d) * offset + arg.s, BigInt(arg.d));
    return (Rational(1) - pow(arg.u, arg.d * offset + arg.s)) / (Rational(1) - base);
}

Rational q_minus_bracket(long long m, const Rational& q) {
    if (q == Rational(-1)) throw std::domain_error("q_minus_bracket: q = -1");
    if (m < 0 && q.is_zero())
        throw std::domain_error("q_minus_bracket: q = 0 with negative index");
    return (Rational(1) - pow(-q, m)) / (Rational(1) + q);
}

Rational q_shift_factorial(const Rational& a, const Rational& q, long long k) {
    if (k < 0) throw std::domain_error("q_shift_factorial: negative length");
    Rational prod(1);
    Rational qpow(1);
    for (long long i = 0; i < k; ++i) {
        prod *= Rational(1) - a * qpow;
        qpow *= q;
    }
    return prod;
}

QPolynomial gauss_binomial_poly(long long n, long long k) {
    if (n < 0 || k < 0) throw std::domain_error("gauss_binomial_poly: negative parameter");
    if (k > n) return {};  // standard convention
    QPolynomial num = QPolynomial::one();
    QPolynomial den = QPolynomial::one();
    for (long long j = 0; j < k; ++j) {
        num = num * QPolynomial::bracket(n - j);
        den = den * QPolynomial::bracket(j + 1);
    }
    return QPolynomial::div_exact(num, den);
}

Rational gauss_binomial_eval(long long n, long long k, const Rational& q) {
    return gauss_binomial_poly(n, k).eval(q);
}

Rational negbinom_series_coeff(long long alpha, long long m, const Rational& q) {
    if (alpha < 1) throw std::domain_error("negbinom_series_coeff: alpha must be positive");
    if (m < 0) throw std::domain_error("negbinom_series_coeff: negative index");
    return gauss_binomial_eval(m + alpha - 1, m, q);
}

BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (long long j = 1; j <= k; ++j) {
        c *= n - k + j;
        c /= j;
    }
    return c;
}

}  // namespace qeg
