#include "qeg/padic_oracle.hpp"

#include "qeg/engine.hpp"
#include "qeg/powerseries.hpp"

#include <string>

namespace qeg {

namespace {

constexpr long long kGridCap = 10'000'000;  // total lattice points per level

// p^e, refusing anything beyond the desk-scale cap.
long long capped_power(long long p, long long e) {
    long long v = 1;
    for (long long i = 0; i < e; ++i) {
        v *= p;
        if (v > kGridCap)
            throw std::domain_error("padic_oracle: grid " + std::to_string(p) + "^" +
                                    std::to_string(e) + " exceeds the desk-scale cap " +
                                    std::to_string(kGridCap));
    }
    return v;
}

void require_levels(const char* fn, long long n_max) {
    if (n_max < 1) throw std::domain_error(std::string(fn) + ": need at least one level");
}

// Exact r-fold lattice sum over [0, P)^r of
//   prod_i (b_i^{x_i} (-1)^{x_i}) * diag[x_1 + ... + x_r].
// The alternating signs combine to (-1)^{sum}, so the per-sum weights
// V[s] = sum over tuples with sum s of prod b_i^{x_i} are built by iterated
// convolution with the geometric rows; each convolution uses the exact
// sliding-window recurrence U[s] = b U[s-1] + V[s] - b^P V[s-P].
Rational geometric_lattice_sum(const std::vector<Rational>& bases, long long points,
                               const std::vector<Rational>& diag) {
    std::vector<Rational> v = {Rational(1)};
    for (const Rational& b : bases) {
        const Rational b_p = pow(b, points);
        std::vector<Rational> u(v.size() + static_cast<size_t>(points) - 1);
        for (size_t s = 0; s < u.size(); ++s) {
            Rational acc = s > 0 ? b * u[s - 1] : Rational(0);
            if (s < v.size()) acc += v[s];
            if (s >= static_cast<size_t>(points) && s - static_cast<size_t>(points) < v.size())
                acc -= b_p * v[s - static_cast<size_t>(points)];
            u[s] = std::move(acc);
        }
        v = std::move(u);
    }
    Rational total(0);
    for (size_t s = 0; s < v.size(); ++s) {
        Rational term = v[s] * diag[s];
        if (s % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

// Same sum when every per-coordinate factor is the alternating sign alone:
// group tuples by their coordinate sum. The number of tuples in [0, P)^r
// with sum s is the coefficient of z^s in (1 + z + ... + z^{P-1})^r, and
// the sign is (-1)^s throughout the group.
Rational signed_lattice_sum(long long r, long long points, const std::vector<Rational>& diag) {
    std::vector<long long> counts = {1};
    for (long long i = 0; i < r; ++i) {
        std::vector<long long> next(counts.size() + static_cast<size_t>(points) - 1, 0);
        for (size_t a = 0; a < counts.size(); ++a)
            for (long long x = 0; x < points; ++x)
                next[a + static_cast<size_t>(x)] += counts[a];
        counts = std::move(next);
    }
    Rational total(0);
    for (size_t s = 0; s < counts.size(); ++s) {
        Rational term = Rational(counts[s]) * diag[s];
        if (s % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

std::vector<Rational> power_table(const Rational& base, long long count) {
    std::vector<Rational> t(static_cast<size_t>(count));
    t[0] = Rational(1);
    for (long long i = 1; i < count; ++i) t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] * base;
    return t;
}

WittReport run_levels(long long n_max, long long p, long long r, const Rational& exact,
                      const std::function<Rational(long long)>& partial_at_level) {
    capped_power(p, n_max * r);
    WittReport report{p, exact, {}};
    report.entries.reserve(static_cast<size_t>(n_max));
    for (long long level = 1; level <= n_max; ++level) {
        const Rational partial = partial_at_level(level);
        report.entries.push_back({level, partial, padic_valuation(partial - exact, p)});
    }
    return report;
}

}  // namespace

PadicDomain::PadicDomain(long long p_, Rational q_, Rational w_)
    : p(p_), q(std::move(q_)), w(std::move(w_)) {
    if (!is_odd_prime(p))
        throw std::domain_error("PadicDomain: p = " + std::to_string(p) + " is not an odd prime");
    if (!padic_valuation(q - Rational(1), p).at_least(1))
        throw std::domain_error("PadicDomain: q = " + q.str() + " violates v_" +
                                std::to_string(p) + "(q - 1) >= 1");
    if (!padic_valuation(w - Rational(1), p).at_least(1))
        throw std::domain_error("PadicDomain: w = " + w.str() + " violates v_" +
                                std::to_string(p) + "(w - 1) >= 1");
}

bool WittReport::passes() const {
    if (entries.empty()) return false;
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i].valuation < entries[i - 1].valuation) return false;
    return entries.back().valuation.at_least(entries.back().level - 1);
}

Rational fermionic_partial_sum(const std::function<Rational(long long)>& f, long long p,
                               long long n_level) {
    if (!is_odd_prime(p))
        throw std::domain_error("fermionic_partial_sum: p is not an odd prime");
    require_levels("fermionic_partial_sum", n_level);
    const long long points = capped_power(p, n_level);
    Rational sum(0);
    for (long long x = 0; x < points; ++x) {
        if (x % 2 == 0)
            sum += f(x);
        else
            sum -= f(x);
    }
    return sum;
}

Rational fermionic_q_partial_sum(const std::function<Rational(long long)>& f, long long p,
                                 long long n_level, const Rational& q) {
    if (!is_odd_prime(p))
        throw std::domain_error("fermionic_q_partial_sum: p is not an odd prime");
    require_levels("fermionic_q_partial_sum", n_level);
    const long long points = capped_power(p, n_level);
    const Rational normalizer = q_minus_bracket(points, q);
    if (normalizer.is_zero())
        throw std::domain_error("fermionic_q_partial_sum: normalizer [p^N]_{-q} vanishes");
    Rational sum(0);
    Rational weight(1);  // (-q)^x
    for (long long x = 0; x < points; ++x) {
        sum += f(x) * weight;
        weight *= -q;
    }
    return sum / normalizer;
}

WittReport witt_check_plain(long long n, long long r, long long x, const PadicDomain& dom,
                            long long n_max) {
    require_levels("witt_check_plain", n_max);
    const Rational exact = euler_q_poly(n, r, dom.w, ArgSpec::integer(x, dom.q));
    return run_levels(n_max, dom.p, r, exact, [&](long long level) {
        const long long per_axis = capped_power(dom.p, level);
        const long long s_max = r * (per_axis - 1);

        std::vector<Rational> diag(static_cast<size_t>(s_max) + 1);
        const std::vector<Rational> w_pow = power_table(dom.w, s_max + 1);
        for (long long s = 0; s <= s_max; ++s)
            diag[static_cast<size_t>(s)] =
                w_pow[static_cast<size_t>(s)] * pow(q_bracket(x + s, dom.q), n);

        return signed_lattice_sum(r, per_axis, diag);
    });
}

WittReport witt_check_hq(long long n, long long r, long long h, long long x,
                         const PadicDomain& dom, long long n_max) {
    require_levels("witt_check_hq", n_max);
    const Rational exact = euler_hq_poly(n, r, h, dom.w, ArgSpec::integer(x, dom.q));
    return run_levels(n_max, dom.p, r, exact, [&](long long level) {
        const long long per_axis = capped_power(dom.p, level);
        const long long s_max = r * (per_axis - 1);

        std::vector<Rational> diag(static_cast<size_t>(s_max) + 1);
        const std::vector<Rational> w_pow = power_table(dom.w, s_max + 1);
        for (long long s = 0; s <= s_max; ++s)
            diag[static_cast<size_t>(s)] =
                w_pow[static_cast<size_t>(s)] * pow(q_bracket(x + s, dom.q), n);

        std::vector<Rational> bases;
        bases.reserve(static_cast<size_t>(r));
        for (long long i = 1; i <= r; ++i) bases.push_back(pow(dom.q, h - i + 1));
        return geometric_lattice_sum(bases, per_axis, diag);
    });
}

WittReport cos_witt_check(long long n, long long r, long long h, const PadicDomain& dom,
                          long long n_max) {
    require_levels("cos_witt_check", n_max);
    if (n < 0) throw std::domain_error("cos_witt_check: index n must be >= 0");
    if (r < 1) throw std::domain_error("cos_witt_check: order r must be >= 1");
    const Rational g = cos_generating_coeffs(h, r, dom.q, n + r)[static_cast<size_t>(n + r)];
    const Rational exact = g / Rational(factorial(r) * binomial(n + r, r));
    return run_levels(n_max, dom.p, r, exact, [&](long long level) {
        const long long per_axis = capped_power(dom.p, level);
        const long long s_max = r * (per_axis - 1);

        std::vector<Rational> diag(static_cast<size_t>(s_max) + 1);
        for (long long s = 0; s <= s_max; ++s) {
            BigInt sp = 1;
            for (long long k = 0; k < n; ++k) sp *= s;
            diag[static_cast<size_t>(s)] = Rational(sp);
        }

        std::vector<Rational> bases;
        bases.reserve(static_cast<size_t>(r));
        for (long long i = 1; i <= r; ++i) bases.push_back(pow(dom.q, h - i + 1));
        return geometric_lattice_sum(bases, per_axis, diag);
    });
}

}  // namespace qeg
