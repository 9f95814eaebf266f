#include "qeg/engine.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qeg {

namespace {

void require_index_order(const char* fn, long long n, long long r) {
    if (n < 0) throw std::domain_error(std::string(fn) + ": index n must be >= 0");
    if (r < 1) throw std::domain_error(std::string(fn) + ": order r must be >= 1");
}

void require_q_regular(const char* fn, const Rational& q) {
    if (q == Rational(1))
        throw std::domain_error(std::string(fn) +
                                ": q = 1 is the classical limit; use the classical "
                                "generating-function routines instead");
}

std::string tuple_str(const std::vector<long long>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

// Alternating binomial sum shared by the closed forms:
// 2^r/(1-q)^n sum_l C(n,l) (-1)^l u^{l s} / denom(l).
Rational closed_form_sum(long long n, long long r, const ArgSpec& x,
                         const std::function<Rational(long long)>& denom_at) {
    const Rational q = x.q();
    const Rational u_s = pow(x.u, x.s);
    Rational sum(0);
    Rational u_ls(1);
    BigInt binom = 1;
    for (long long l = 0; l <= n; ++l) {
        if (l > 0) {
            binom *= n - l + 1;
            binom /= l;
            u_ls *= u_s;
        }
        Rational term = Rational(binom) * u_ls / denom_at(l);
        if (l % 2 == 1) term = -term;
        sum += term;
    }
    return qeg::pow(Rational(2), r) / qeg::pow(Rational(1) - q, n) * sum;
}

}  // namespace

Rational euler_q(long long n, long long r, const Rational& w, const Rational& q) {
    require_index_order("euler_q", n, r);
    require_q_regular("euler_q", q);
    // Scan every denominator before computing anything.
    for (long long l = 0; l <= n; ++l)
        if ((Rational(1) + pow(q, l) * w).is_zero())
            throw std::domain_error("euler_q: denominator 1 + q^l w vanishes at l = " +
                                    std::to_string(l));
    Rational sum(0);
    BigInt binom = 1;
    for (long long l = 0; l <= n; ++l) {
        if (l > 0) {
            binom *= n - l + 1;
            binom /= l;
        }
        Rational term = Rational(binom) * pow(Rational(1) + pow(q, l) * w, -r);
        if (l % 2 == 1) term = -term;
        sum += term;
    }
    return pow(Rational(2), r) / pow(Rational(1) - q, n) * sum;
}

Rational euler_q_poly(long long n, long long r, const Rational& w, const ArgSpec& x) {
    require_index_order("euler_q_poly", n, r);
    const Rational q = x.q();
    require_q_regular("euler_q_poly", q);
    for (long long l = 0; l <= n; ++l)
        if ((Rational(1) + pow(q, l) * w).is_zero())
            throw std::domain_error("euler_q_poly: denominator 1 + q^l w vanishes at l = " +
                                    std::to_string(l));
    return closed_form_sum(n, r, x,
                           [&](long long l) { return pow(Rational(1) + pow(q, l) * w, r); });
}

Rational genocchi_q_poly(long long m, long long r, const Rational& w, const ArgSpec& x) {
    if (m < 0) throw std::domain_error("genocchi_q_poly: index m must be >= 0");
    if (r < 1) throw std::domain_error("genocchi_q_poly: order r must be >= 1");
    if (m < r) return Rational(0);
    return Rational(factorial(r) * binomial(m, r)) * euler_q_poly(m - r, r, w, x);
}

Rational euler_hq_poly(long long n, long long r, long long h, const Rational& w,
                       const ArgSpec& x) {
    require_index_order("euler_hq_poly", n, r);
    const Rational q = x.q();
    require_q_regular("euler_hq_poly", q);
    if (q.is_zero()) throw std::domain_error("euler_hq_poly: q must be nonzero");
    for (long long l = 0; l <= n; ++l)
        for (long long j = 0; j < r; ++j)
            if ((Rational(1) + pow(q, l + h - j) * w).is_zero())
                throw std::domain_error(
                    "euler_hq_poly: shift-factorial factor vanishes at l = " + std::to_string(l) +
                    ", j = " + std::to_string(j));
    const Rational q_inv = q.reciprocal();
    return closed_form_sum(n, r, x, [&](long long l) {
        // (-q^{l+h} w : q^{-1})_r = prod_{j<r} (1 + q^{l+h-j} w)
        return q_shift_factorial(-pow(q, l + h) * w, q_inv, r);
    });
}

Rational euler_hq_special(long long n, long long r, const Rational& w, const ArgSpec& x) {
    require_index_order("euler_hq_special", n, r);
    const Rational q = x.q();
    require_q_regular("euler_hq_special", q);
    for (long long l = 0; l <= n; ++l)
        for (long long j = 0; j < r; ++j)
            if ((Rational(1) + pow(q, l + j) * w).is_zero())
                throw std::domain_error(
                    "euler_hq_special: shift-factorial factor vanishes at l = " +
                    std::to_string(l) + ", j = " + std::to_string(j));
    return closed_form_sum(n, r, x, [&](long long l) {
        // (-q^l w : q)_r = prod_{j<r} (1 + q^{l+j} w)
        return q_shift_factorial(-pow(q, l) * w, q, r);
    });
}

Rational genocchi_hq_poly(long long m, long long r, long long h, const Rational& w,
                          const ArgSpec& x) {
    if (m < 0) throw std::domain_error("genocchi_hq_poly: index m must be >= 0");
    if (r < 1) throw std::domain_error("genocchi_hq_poly: order r must be >= 1");
    if (m < r) return Rational(0);
    return Rational(factorial(r) * binomial(m, r)) * euler_hq_poly(m - r, r, h, w, x);
}

Rational euler_series_truncated(const EulerParams& params, long long terms) {
    require_index_order("euler_series_truncated", params.n, params.r);
    if (terms < 0) throw std::domain_error("euler_series_truncated: negative term count");
    const long long n = params.n;
    const long long r = params.r;
    const Rational q = params.x.q();

    Rational q_inv(0);
    Rational qh(1);
    if (params.h) {
        if (q.is_zero())
            throw std::domain_error("euler_series_truncated: q must be nonzero in the "
                                    "(h,q) variant");
        q_inv = q.reciprocal();
        qh = pow(q, *params.h);
    }

    Rational sum(0);
    BigInt binom = 1;     // C(m+r-1, m) at m = 0
    Rational gbinom(1);   // C(m+r-1, m)_{q^{-1}} at m = 0
    Rational w_pow(1);
    Rational qh_pow(1);
    for (long long m = 0; m < terms; ++m) {
        if (m > 0) {
            if (params.h) {
                const Rational br = q_bracket(m, q_inv);
                // The ratio update needs [m]_{q^{-1}} != 0; at q = -1 fall
                // back to direct evaluation.
                gbinom = br.is_zero() ? gauss_binomial_eval(m + r - 1, m, q_inv)
                                      : gbinom * q_bracket(m + r - 1, q_inv) / br;
                qh_pow *= qh;
            } else {
                binom *= m + r - 1;
                binom /= m;
            }
            w_pow *= params.w;
        }
        Rational term = params.h ? gbinom * qh_pow * w_pow : Rational(binom) * w_pow;
        term *= pow(q_bracket_frac(params.x, m), n);
        if (m % 2 == 1) term = -term;
        sum += term;
    }
    return pow(Rational(2), r) * sum;
}

Rational euler_hq_special_series_truncated(long long n, long long r, const Rational& w,
                                           const ArgSpec& x, long long terms) {
    require_index_order("euler_hq_special_series_truncated", n, r);
    if (terms < 0)
        throw std::domain_error("euler_hq_special_series_truncated: negative term count");
    const Rational q = x.q();
    Rational sum(0);
    Rational gbinom(1);  // C(m+r-1, m)_q at m = 0
    Rational w_pow(1);
    for (long long m = 0; m < terms; ++m) {
        if (m > 0) {
            const Rational br = q_bracket(m, q);
            gbinom = br.is_zero() ? gauss_binomial_eval(m + r - 1, m, q)
                                  : gbinom * q_bracket(m + r - 1, q) / br;
            w_pow *= w;
        }
        Rational term = gbinom * w_pow * pow(q_bracket_frac(x, m), n);
        if (m % 2 == 1) term = -term;
        sum += term;
    }
    return pow(Rational(2), r) * sum;
}

namespace {

// Shared tuple enumeration for the distribution right-hand sides.
// `summand` maps (tuple, sum of entries) to the inner value; the twist
// exponent e(a) is supplied by `twist_exponent` (zero for the plain form).
Rational distribution_sum(const DistributionParams& params, const char* fn,
                          const std::function<long long(const std::vector<long long>&)>& twist_exponent,
                          const std::function<Rational(long long)>& inner_at_sum) {
    const EulerParams& base = params.base;
    require_index_order(fn, base.n, base.r);
    if (params.d < 1 || params.d % 2 == 0)
        throw std::domain_error(std::string(fn) + ": modulus d must be odd and positive");
    if (base.x.d != 1)
        throw std::domain_error(std::string(fn) + ": base argument must be an integer (x.d == 1)");

    const Rational q = base.x.q();
    std::vector<long long> a(static_cast<size_t>(base.r), 0);
    // The inner evaluation depends on the tuple only through its sum.
    std::vector<std::optional<Rational>> cache(
        static_cast<size_t>(base.r * (params.d - 1)) + 1);
    Rational sum(0);
    const std::function<void(long long, long long)> recurse = [&](long long i, long long s) {
        if (i == base.r) {
            auto& slot = cache[static_cast<size_t>(s)];
            if (!slot) {
                try {
                    slot = inner_at_sum(s);
                } catch (const std::domain_error& e) {
                    throw std::domain_error(std::string(fn) + ": at tuple " + tuple_str(a) +
                                            ": " + e.what());
                }
            }
            Rational term = *slot;
            term *= pow(base.w, s) * pow(q, twist_exponent(a));
            if (s % 2 != 0) term = -term;
            sum += term;
            return;
        }
        for (long long v = 0; v < params.d; ++v) {
            a[static_cast<size_t>(i)] = v;
            recurse(i + 1, s + v);
        }
    };
    recurse(0, 0);
    return pow(q_bracket(params.d, q), base.n) * sum;
}

}  // namespace

Rational distribution_rhs_plain(const DistributionParams& params) {
    const EulerParams& base = params.base;
    const Rational q = base.x.q();
    const Rational w_d = pow(base.w, params.d);
    return distribution_sum(
        params, "distribution_rhs_plain", [](const std::vector<long long>&) { return 0LL; },
        [&](long long s) {
            return euler_q_poly(base.n, base.r, w_d, ArgSpec(s + base.x.s, params.d, q));
        });
}

Rational distribution_rhs_genocchi(const DistributionParams& params) {
    const EulerParams& base = params.base;
    const Rational q = base.x.q();
    const Rational w_d = pow(base.w, params.d);
    return distribution_sum(
        params, "distribution_rhs_genocchi", [](const std::vector<long long>&) { return 0LL; },
        [&](long long s) {
            return genocchi_q_poly(base.n + base.r, base.r, w_d,
                                   ArgSpec(s + base.x.s, params.d, q));
        });
}

Rational distribution_rhs_special(const DistributionParams& params, SpecialWeighting weighting) {
    const EulerParams& base = params.base;
    const Rational q = base.x.q();
    const Rational w_d = pow(base.w, params.d);
    const long long r = base.r;
    const auto exponent = [r, weighting](const std::vector<long long>& a) {
        long long e = 0;
        for (long long i = 1; i <= r; ++i) {
            const long long c = weighting == SpecialWeighting::r_minus_i ? r - i : r - i + 1;
            e += c * a[static_cast<size_t>(i - 1)];
        }
        return e;
    };
    return distribution_sum(params, "distribution_rhs_special", exponent, [&](long long s) {
        return euler_hq_special(base.n, base.r, w_d, ArgSpec(s + base.x.s, params.d, q));
    });
}

}  // namespace qeg
