#include "qeg/rational.hpp"

#include <cctype>
#include <ostream>

namespace qeg {

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::string Rational::decimal_str(unsigned digits) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt n = boost::multiprecision::abs(num_) * scale;
    BigInt quot = n / den_;
    BigInt rem = n % den_;
    if (2 * rem >= den_) ++quot;  // round half away from zero

    std::string mag = quot.str();
    std::string out;
    if (sign() < 0 && !quot.is_zero()) out += '-';
    if (digits == 0) {
        out += mag;
        return out;
    }
    if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
    out += mag.substr(0, mag.size() - digits);
    out += '.';
    out += mag.substr(mag.size() - digits);
    return out;
}

Rational Rational::parse(std::string_view text) {
    const auto malformed = [&] {
        return std::invalid_argument("Rational: malformed rational '" + std::string(text) + "'");
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw malformed();

    const auto digits = [&](std::string_view part) {
        if (part.empty()) throw malformed();
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw malformed();
        return BigInt(std::string(part));
    };

    BigInt num, den = 1;
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = digits(s.substr(0, pos));
        den = digits(s.substr(pos + 1));
        if (den.is_zero()) throw malformed();
    } else {
        num = digits(s);
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw std::domain_error("Rational: zero to a negative power");
        return pow(base.reciprocal(), -exp);
    }
    Rational result(1);
    Rational b = base;
    unsigned long long e = static_cast<unsigned long long>(exp);
    while (e != 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace qeg
