#include "qeg/ratfunc.hpp"

#include <algorithm>
#include <utility>

namespace qeg {

namespace {
const Rational kZero(0);
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPoly RatPoly::constant(Rational c) {
    RatPoly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::z() { return RatPoly{Rational(0), Rational(1)}; }

const Rational& RatPoly::coeff(long long i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
    if (is_zero()) throw std::domain_error("RatPoly: leading coefficient of zero polynomial");
    return coeffs_.back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
    }
    r.trim();
    return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) r.coeffs_[i] -= b.coeffs_[i];
    }
    r.trim();
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly RatPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    RatPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("RatPoly: division by the zero polynomial");
    RatPoly rem = a;
    RatPoly quot;
    if (a.degree() >= b.degree()) {
        quot.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const Rational c = rem.leading() / b.leading();
            const size_t shift = static_cast<size_t>(rem.degree() - b.degree());
            quot.coeffs_[shift] = c;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                rem.coeffs_[shift + j] -= c * b.coeffs_[j];
            rem.trim();
        }
        quot.trim();
    }
    return {std::move(quot), std::move(rem)};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? RatPoly() : r.monic();  // normalize to tame coefficient growth
    }
    return a.is_zero() ? a : a.monic();
}

RatPoly RatPoly::derivative() const {
    RatPoly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    r.trim();
    return r;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::domain_error("RatPoly: cannot normalize zero polynomial");
    return scaled(leading().reciprocal());
}

Rational RatPoly::eval(const Rational& z) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z + coeffs_[i];
        if (i == 0) break;
    }
    return acc;
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += coeffs_[i].sign() < 0 ? " - " : " + ";
        else if (coeffs_[i].sign() < 0) out += "-";
        Rational mag = coeffs_[i].abs();
        if (mag != Rational(1) || i == 0) out += mag.str();
        if (i >= 1) {
            out += "z";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RationalFunction::RationalFunction(RatPoly num, RatPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = RatPoly::constant(1);
        return;
    }
    RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = RatPoly::divmod(num_, g).first;
        den_ = RatPoly::divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = lead.reciprocal();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::constant(Rational c) {
    return RationalFunction(RatPoly::constant(std::move(c)), RatPoly::constant(1));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& z) const {
    const Rational d = den_.eval(z);
    if (d.is_zero())
        throw std::domain_error("RationalFunction: pole at z = " + z.str());
    return num_.eval(z) / d;
}

std::string RationalFunction::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunction euler_theta(const RationalFunction& f) {
    return RationalFunction(RatPoly::z(), RatPoly::constant(1)) * f.derivative();
}

Rational regularized_alt_qbinom_sum(long long n, long long r, const Rational& q,
                                    const Rational& w) {
    if (n < 0) throw std::domain_error("regularized_alt_qbinom_sum: negative power");
    if (r < 1) throw std::domain_error("regularized_alt_qbinom_sum: order must be positive");

    RatPoly den = RatPoly::constant(1);
    Rational qpow(1);
    for (long long i = 0; i < r; ++i) {
        const Rational c = w * qpow;  // factor 1 + c z
        if ((Rational(1) + c).is_zero())
            throw std::domain_error(
                "regularized_alt_qbinom_sum: pole at z = 1 from factor i = " + std::to_string(i) +
                " (1 + w q^i = 0)");
        den = den * RatPoly{Rational(1), c};
        qpow *= q;
    }

    RationalFunction f(RatPoly::constant(1), den);
    for (long long k = 0; k < n; ++k) f = euler_theta(f);
    return f.eval(Rational(1));
}

}  // namespace qeg
