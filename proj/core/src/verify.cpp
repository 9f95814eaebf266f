#include "qeg/verify.hpp"

#include "qeg/engine.hpp"
#include "qeg/padic_oracle.hpp"
#include "qeg/powerseries.hpp"
#include "qeg/qcalc.hpp"
#include "qeg/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace qeg::verify {

namespace {

struct WQ {
    Rational w;
    Rational q;
};

std::vector<WQ> wq_pairs(Grid grid) {
    std::vector<WQ> pairs = {{Rational(1), Rational(1, 2)}, {Rational(1, 3), Rational(1, 2)}};
    if (grid == Grid::full) pairs.push_back({Rational(2, 3), Rational(1, 4)});
    return pairs;
}

CaseResult equality_case(std::string name, const Rational& lhs, const Rational& rhs) {
    CaseResult c;
    c.name = std::move(name);
    c.passed = lhs == rhs;
    if (!c.passed) c.detail = "lhs = " + lhs.str() + ", rhs = " + rhs.str();
    return c;
}

std::string wq_tag(const WQ& p) { return "w=" + p.w.str() + " q=" + p.q.str(); }

}  // namespace

long long SuiteResult::failures() const {
    long long n = 0;
    for (const auto& c : cases)
        if (!c.passed && !c.flagged) ++n;
    return n;
}

SuiteResult run_distribution(Grid grid) {
    SuiteResult out;
    out.suite = "distribution";

    const auto pairs = wq_pairs(grid);
    const std::vector<long long> rs = grid == Grid::full ? std::vector<long long>{1, 2, 3}
                                                         : std::vector<long long>{1, 2};
    const long long n_max = grid == Grid::full ? 5 : 3;
    const std::vector<long long> ds = grid == Grid::full ? std::vector<long long>{1, 3, 5}
                                                         : std::vector<long long>{1, 3};
    const std::vector<long long> xs = grid == Grid::full ? std::vector<long long>{0, 1, 2}
                                                         : std::vector<long long>{0, 1};

    for (const auto& p : pairs)
        for (long long r : rs)
            for (long long n = 0; n <= n_max; ++n)
                for (long long d : ds)
                    for (long long x : xs) {
                        const ArgSpec arg = ArgSpec::integer(x, p.q);
                        const DistributionParams dp{{n, r, p.w, std::nullopt, arg}, d};
                        std::ostringstream tag;
                        tag << "r=" << r << " n=" << n << " d=" << d << " x=" << x << " "
                            << wq_tag(p);
                        out.cases.push_back(equality_case("plain " + tag.str(),
                                                          euler_q_poly(n, r, p.w, arg),
                                                          distribution_rhs_plain(dp)));
                        out.cases.push_back(equality_case("genocchi " + tag.str(),
                                                          genocchi_q_poly(n + r, r, p.w, arg),
                                                          distribution_rhs_genocchi(dp)));
                    }

    // Weighted (h = r-1) form. Both candidate readings of the twist exponent
    // are evaluated; the default must hold, otherwise the outcome is recorded
    // as a finding instead of a silent pass.
    const auto wpairs = wq_pairs(Grid::small);
    const std::vector<long long> wrs = {1, 2};
    const long long wn_max = grid == Grid::full ? 4 : 2;
    const std::vector<long long> wds = {1, 3};
    const std::vector<long long> wxs = grid == Grid::full ? std::vector<long long>{0, 1}
                                                          : std::vector<long long>{0};

    struct WeightedCase {
        std::string name;
        Rational lhs, rhs_default, rhs_alt;
    };
    std::vector<WeightedCase> weighted;
    for (const auto& p : (grid == Grid::full ? wpairs : std::vector<WQ>{wpairs[0]}))
        for (long long r : wrs)
            for (long long n = 0; n <= wn_max; ++n)
                for (long long d : wds)
                    for (long long x : wxs) {
                        const ArgSpec arg = ArgSpec::integer(x, p.q);
                        const DistributionParams dp{{n, r, p.w, std::nullopt, arg}, d};
                        std::ostringstream tag;
                        tag << "weighted r=" << r << " n=" << n << " d=" << d << " x=" << x
                            << " " << wq_tag(p);
                        weighted.push_back(
                            {tag.str(), euler_hq_special(n, r, p.w, arg),
                             distribution_rhs_special(dp, SpecialWeighting::r_minus_i),
                             distribution_rhs_special(dp, SpecialWeighting::r_minus_i_plus_1)});
                    }

    const bool default_holds = std::all_of(weighted.begin(), weighted.end(),
                                           [](const auto& c) { return c.lhs == c.rhs_default; });
    const bool alt_holds = std::all_of(weighted.begin(), weighted.end(),
                                       [](const auto& c) { return c.lhs == c.rhs_alt; });
    if (default_holds) {
        for (const auto& c : weighted)
            out.cases.push_back(equality_case(c.name, c.lhs, c.rhs_default));
        out.notes.push_back(
            "weighted distribution: twist exponent sum_{i=1..r} (r-i) a_i confirmed as an "
            "exact identity on this grid");
    } else {
        for (const auto& c : weighted) {
            CaseResult cr;
            cr.name = c.name;
            cr.passed = false;
            cr.flagged = true;
            cr.detail = "lhs = " + c.lhs.str() + ", rhs[(r-i) a_i] = " + c.rhs_default.str() +
                        ", rhs[(r-i+1) a_i] = " + c.rhs_alt.str();
            out.cases.push_back(cr);
        }
        out.notes.push_back(
            alt_holds
                ? "FINDING: weighted distribution holds with twist exponent sum (r-i+1) a_i, "
                  "not the default sum (r-i) a_i"
                : "FINDING: no tested twist-exponent reading makes the weighted distribution "
                  "an identity on this grid");
    }
    return out;
}

SuiteResult run_special(Grid grid) {
    SuiteResult out;
    out.suite = "special";

    const auto pairs = wq_pairs(grid);
    const std::vector<long long> rs = grid == Grid::full ? std::vector<long long>{1, 2, 3}
                                                         : std::vector<long long>{1, 2};
    const long long n_max = grid == Grid::full ? 5 : 3;
    const std::vector<long long> xs = grid == Grid::full ? std::vector<long long>{0, 1, 2}
                                                         : std::vector<long long>{0, 1};

    for (const auto& p : pairs)
        for (long long r : rs)
            for (long long n = 0; n <= n_max; ++n)
                for (long long x : xs) {
                    const ArgSpec arg = ArgSpec::integer(x, p.q);
                    std::ostringstream tag;
                    tag << "h=r-1 r=" << r << " n=" << n << " x=" << x << " " << wq_tag(p);
                    out.cases.push_back(equality_case(tag.str(),
                                                      euler_hq_special(n, r, p.w, arg),
                                                      euler_hq_poly(n, r, r - 1, p.w, arg)));
                }

    // Fractional arguments with declared roots.
    const std::vector<ArgSpec> fracs = {ArgSpec(1, 2, Rational(1, 2)),
                                        ArgSpec(3, 2, Rational(2, 3))};
    for (const auto& arg : fracs)
        for (long long r : rs)
            for (long long n = 0; n <= std::min<long long>(n_max, 3); ++n)
                for (const Rational& w : {Rational(1), Rational(1, 3)}) {
                    std::ostringstream tag;
                    tag << "h=r-1 r=" << r << " n=" << n << " x=" << arg.x().str()
                        << " (u=" << arg.u.str() << ") w=" << w.str();
                    out.cases.push_back(equality_case(tag.str(), euler_hq_special(n, r, w, arg),
                                                      euler_hq_poly(n, r, r - 1, w, arg)));
                }

    for (const auto& p : pairs)
        for (long long n = 0; n <= n_max; ++n)
            for (long long x : xs) {
                const ArgSpec arg = ArgSpec::integer(x, p.q);
                std::ostringstream tag;
                tag << "reduction r=1 h=0 n=" << n << " x=" << x << " " << wq_tag(p);
                out.cases.push_back(equality_case(tag.str(), euler_hq_poly(n, 1, 0, p.w, arg),
                                                  euler_q_poly(n, 1, p.w, arg)));
            }
    return out;
}

SuiteResult run_cos_formula(Grid grid) {
    SuiteResult out;
    out.suite = "cos_formula";

    const std::vector<long long> rs = grid == Grid::full ? std::vector<long long>{1, 2, 3}
                                                         : std::vector<long long>{1, 2};
    const long long n_max = grid == Grid::full ? 4 : 3;
    const std::vector<Rational> qs = grid == Grid::full
                                         ? std::vector<Rational>{Rational(1, 2), Rational(1, 3)}
                                         : std::vector<Rational>{Rational(1, 2)};

    for (const Rational& q : qs)
        for (long long r : rs) {
            const auto g = cos_generating_coeffs(r - 1, r, q, n_max + r);
            for (long long n = 0; n <= n_max; ++n) {
                const Rational lhs = g[static_cast<size_t>(n + r)];
                const Rational rhs = pow(Rational(2), r) *
                                     Rational(factorial(r) * binomial(n + r, r)) *
                                     regularized_alt_qbinom_sum(n, r, q, Rational(1));
                std::ostringstream tag;
                tag << "r=" << r << " n=" << n << " q=" << q.str();
                out.cases.push_back(equality_case(tag.str(), lhs, rhs));
            }
        }
    return out;
}

namespace {

CaseResult witt_case(std::string name, const WittReport& report) {
    CaseResult c;
    c.name = std::move(name);
    c.passed = report.passes();
    if (!c.passed) {
        std::ostringstream d;
        d << "exact = " << report.exact.str() << ", valuations:";
        for (const auto& e : report.entries)
            d << " N=" << e.level << ":" << e.valuation.str();
        c.detail = d.str();
    }
    return c;
}

}  // namespace

SuiteResult run_witt(Grid grid) {
    SuiteResult out;
    out.suite = "witt";

    const std::vector<long long> ps =
        grid == Grid::full ? std::vector<long long>{3, 5} : std::vector<long long>{3};
    const std::vector<long long> rs = {1, 2};
    const long long n_top = grid == Grid::full ? 4 : 2;
    const std::vector<long long> xs = grid == Grid::full ? std::vector<long long>{0, 1}
                                                         : std::vector<long long>{0};
    const auto levels_for = [&](long long r) {
        if (grid == Grid::full) return r == 1 ? 4LL : 3LL;
        return r == 1 ? 3LL : 2LL;
    };

    for (long long p : ps) {
        const Rational q(1 + p);
        for (const Rational& w : {Rational(1), Rational(1 + p)}) {
            const PadicDomain dom(p, q, w);
            for (long long r : rs)
                for (long long n = 0; n <= n_top; ++n)
                    for (long long x : xs) {
                        std::ostringstream tag;
                        tag << "p=" << p << " w=" << w.str() << " r=" << r << " n=" << n
                            << " x=" << x;
                        out.cases.push_back(witt_case(
                            "plain " + tag.str(),
                            witt_check_plain(n, r, x, dom, levels_for(r))));

                        std::vector<long long> hs = {0, 1, r - 1};
                        if (grid == Grid::small) hs = {0, r - 1};
                        std::sort(hs.begin(), hs.end());
                        hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
                        for (long long h : hs)
                            out.cases.push_back(witt_case(
                                "hq h=" + std::to_string(h) + " " + tag.str(),
                                witt_check_hq(n, r, h, x, dom, levels_for(r))));
                    }
        }

        // Weighted order-r Genocchi form (no twist w).
        const PadicDomain dom(p, q, Rational(1));
        const long long cn_top = grid == Grid::full ? 2 : 1;
        for (long long r : (grid == Grid::full ? rs : std::vector<long long>{1}))
            for (long long n = 0; n <= cn_top; ++n) {
                std::vector<long long> hs = {0, r - 1};
                std::sort(hs.begin(), hs.end());
                hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
                for (long long h : hs) {
                    std::ostringstream tag;
                    tag << "cos p=" << p << " r=" << r << " n=" << n << " h=" << h;
                    out.cases.push_back(
                        witt_case(tag.str(), cos_witt_check(n, r, h, dom, levels_for(r))));
                }
            }
    }
    return out;
}

SuiteResult run_series(Grid grid) {
    SuiteResult out;
    out.suite = "series";

    struct Variant {
        std::string name;
        std::optional<long long> h;  // std::nullopt = plain, -1 = ascending h=r-1 form
        long long x;
    };
    const std::vector<Variant> variants = {{"numbers", std::nullopt, 0},
                                           {"polys", std::nullopt, 1},
                                           {"hq h=1", 1, 0},
                                           {"special", -1, 0}};

    const std::vector<Rational> qws =
        grid == Grid::full ? std::vector<Rational>{Rational(1, 3), Rational(1, 2)}
                           : std::vector<Rational>{Rational(1, 3)};
    const std::vector<long long> rs = {1, 2};
    const long long n_max = grid == Grid::full ? 3 : 2;
    const long long m_lo = 20, m_hi = 60;
    const Rational tolerance_scale(BigInt(1), boost::multiprecision::pow(BigInt(10), 12));

    for (const Rational& qw : qws)
        for (long long r : rs)
            for (long long n = 0; n <= n_max; ++n)
                for (const auto& v : variants) {
                    const ArgSpec arg = ArgSpec::integer(v.x, qw);
                    Rational exact;
                    if (!v.h)
                        exact = euler_q_poly(n, r, qw, arg);
                    else if (*v.h == -1)
                        exact = euler_hq_special(n, r, qw, arg);
                    else
                        exact = euler_hq_poly(n, r, *v.h, qw, arg);

                    const auto partial = [&](long long m) {
                        if (v.h && *v.h == -1)
                            return euler_hq_special_series_truncated(n, r, qw, arg, m);
                        return euler_series_truncated({n, r, qw, v.h, arg}, m);
                    };

                    bool monotone = true;
                    Rational prev_err;
                    for (long long m = m_lo; m <= m_hi; ++m) {
                        const Rational err = (partial(m) - exact).abs();
                        if (m > m_lo && err > prev_err) {
                            monotone = false;
                            break;
                        }
                        prev_err = err;
                    }
                    const Rational bound =
                        tolerance_scale * std::max(Rational(1), exact.abs());
                    const bool tail_small = (partial(m_hi) - exact).abs() < bound;

                    CaseResult c;
                    std::ostringstream tag;
                    tag << "convergence " << v.name << " r=" << r << " n=" << n
                        << " q=w=" << qw.str();
                    c.name = tag.str();
                    c.passed = monotone && tail_small;
                    if (!c.passed)
                        c.detail = std::string(monotone ? "" : "error not nonincreasing; ") +
                                   (tail_small ? "" : "tail above 1e-12 bound; ") +
                                   "exact = " + exact.str();
                    out.cases.push_back(c);
                }

    // q -> 1: the closed forms approach the classical Euler numbers along
    // q_k = 1 - 2^{-k}. Exact agreement at every k counts as converged.
    const auto classical = classical_w_euler_coeffs(1, Rational(1), Rational(0), 4);
    for (long long n = 0; n <= 4; ++n) {
        std::vector<Rational> errs;
        for (long long k = 3; k <= 12; ++k) {
            const Rational qk = Rational(1) - Rational(BigInt(1), boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k)));
            errs.push_back((euler_q(n, 1, Rational(1), qk) - classical[static_cast<size_t>(n)]).abs());
        }
        const bool all_zero = std::all_of(errs.begin(), errs.end(),
                                          [](const Rational& e) { return e.is_zero(); });
        bool strict = true;
        for (size_t i = 1; i < errs.size(); ++i)
            if (!(errs[i] < errs[i - 1])) strict = false;
        const bool ratio_ok = all_zero || errs.back() * Rational(100) < errs.front();

        CaseResult c;
        c.name = "classical limit n=" + std::to_string(n);
        c.passed = all_zero || (strict && ratio_ok);
        if (!c.passed)
            c.detail = "e(3) = " + errs.front().str() + ", e(12) = " + errs.back().str();
        out.cases.push_back(c);
    }

    // Classical Genocchi anchors out of two routes: series division and the
    // regularized alternating sums (r = 1, where the weight drops out).
    {
        const auto g = classical_genocchi_coeffs(Rational(1), 4);
        const std::vector<Rational> expected = {Rational(0), Rational(1), Rational(-1),
                                                Rational(0), Rational(1)};
        bool ok = std::equal(g.begin(), g.end(), expected.begin());
        for (const Rational& q : {Rational(1, 2), Rational(1, 3)})
            for (long long n = 0; n <= 3; ++n)
                ok = ok && Rational(2) * Rational(n + 1) *
                               regularized_alt_qbinom_sum(n, 1, q, Rational(1)) ==
                           expected[static_cast<size_t>(n + 1)];
        CaseResult c;
        c.name = "classical genocchi anchors G1..G4";
        c.passed = ok;
        if (!ok) c.detail = "series division or regularized route disagrees with 1, -1, 0, 1";
        out.cases.push_back(c);
    }
    return out;
}

SuiteResult run_qcalc_properties() {
    SuiteResult out;
    out.suite = "qcalc";

    {
        CaseResult c;
        c.name = "gaussian binomial symmetry n<=12";
        c.passed = true;
        for (long long n = 0; n <= 12 && c.passed; ++n)
            for (long long k = 0; k <= n && c.passed; ++k)
                if (!(gauss_binomial_poly(n, k) == gauss_binomial_poly(n, n - k))) {
                    c.passed = false;
                    c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
        out.cases.push_back(c);
    }
    {
        CaseResult c;
        c.name = "q-pascal recurrence n<=12";
        c.passed = true;
        for (long long n = 1; n <= 12 && c.passed; ++n)
            for (long long k = 1; k <= n && c.passed; ++k) {
                std::vector<BigInt> mono(static_cast<size_t>(k) + 1, BigInt(0));
                mono.back() = 1;
                const QPolynomial qk{std::vector<BigInt>(mono)};
                if (!(gauss_binomial_poly(n, k) ==
                      gauss_binomial_poly(n - 1, k - 1) + qk * gauss_binomial_poly(n - 1, k))) {
                    c.passed = false;
                    c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        out.cases.push_back(c);
    }
    {
        CaseResult c;
        c.name = "classical limit at q=1, n<=12";
        c.passed = true;
        for (long long n = 0; n <= 12 && c.passed; ++n)
            for (long long k = 0; k <= n && c.passed; ++k)
                if (gauss_binomial_eval(n, k, Rational(1)) != Rational(binomial(n, k))) {
                    c.passed = false;
                    c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
        out.cases.push_back(c);
    }
    {
        CaseResult c;
        c.name = "shift factorial recurrence k<=20";
        c.passed = true;
        const std::vector<Rational> samples = {Rational(-1, 2), Rational(2, 3), Rational(3),
                                               Rational(-5, 7)};
        for (const Rational& a : samples)
            for (const Rational& q : samples)
                for (long long k = 0; k <= 20 && c.passed; ++k)
                    if (q_shift_factorial(a, q, k + 1) !=
                        q_shift_factorial(a, q, k) * (Rational(1) - a * pow(q, k))) {
                        c.passed = false;
                        c.detail = "a=" + a.str() + " q=" + q.str() + " k=" + std::to_string(k);
                    }
        out.cases.push_back(c);
    }
    {
        CaseResult c;
        c.name = "bracket addition law";
        c.passed = true;
        for (const Rational& q : {Rational(1, 2), Rational(2), Rational(-1, 3)})
            for (long long m = -5; m <= 5 && c.passed; ++m)
                for (long long n = -5; n <= 5 && c.passed; ++n)
                    if (q_bracket(m + n, q) != q_bracket(m, q) + pow(q, m) * q_bracket(n, q)) {
                        c.passed = false;
                        c.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                   " q=" + q.str();
                    }
        out.cases.push_back(c);
    }
    {
        CaseResult c;
        c.name = "q-binomial theorem coefficients r<=4";
        c.passed = true;
        for (const Rational& q : {Rational(1, 2), Rational(1, 3)})
            for (long long r = 1; r <= 4 && c.passed; ++r) {
                // (z:q)_r as a truncated series in z, inverted.
                TruncatedSeries prod = TruncatedSeries::constant(Rational(1), 9);
                for (long long i = 0; i < r; ++i) {
                    TruncatedSeries factor = TruncatedSeries::constant(Rational(1), 9);
                    factor.coeff_mut(1) = -pow(q, i);
                    prod = prod * factor;
                }
                const TruncatedSeries inv = prod.reciprocal();
                for (long long m = 0; m <= 9 && c.passed; ++m)
                    if (inv.coeff(m) != negbinom_series_coeff(r, m, q)) {
                        c.passed = false;
                        c.detail = "r=" + std::to_string(r) + " m=" + std::to_string(m) +
                                   " q=" + q.str();
                    }
            }
        out.cases.push_back(c);
    }
    return out;
}

std::vector<SuiteResult> run_all(Grid grid) {
    return {run_distribution(grid), run_special(grid), run_cos_formula(grid), run_witt(grid),
            run_series(grid)};
}

}  // namespace qeg::verify
