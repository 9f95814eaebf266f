#pragma once

#include "qeg/qcalc.hpp"
#include "qeg/rational.hpp"

#include <functional>
#include <vector>

namespace qeg {

/// Parameters (p, q, w) with q and w inside the p-adic unit disc around 1:
/// v_p(q - 1) >= 1 and v_p(w - 1) >= 1. Construction fails outside the
/// domain, so checks never run on parameters where the limits are
/// meaningless.
struct PadicDomain {
    long long p;
    Rational q;
    Rational w;

    PadicDomain(long long p_, Rational q_, Rational w_);
};

struct WittEntry {
    long long level;          // N
    Rational partial;         // finite-level sum over [0, p^N)^r
    PadicValuation valuation; // v_p(partial - exact)
};

/// Trace of finite-level approximations against an exact value. Passing
/// means the valuations never decrease and the final one reaches at least
/// N_max - 1 (one notch lenient against constant offsets).
struct WittReport {
    long long p;
    Rational exact;
    std::vector<WittEntry> entries;

    bool passes() const;
};

/// sum_{x=0}^{p^N - 1} f(x) (-1)^x, the level-N approximation of the
/// fermionic integral of f.
Rational fermionic_partial_sum(const std::function<Rational(long long)>& f, long long p,
                               long long n_level);

/// sum_{x < p^N} f(x) (-q)^x / [p^N]_{-q}, the level-N approximation of the
/// q-deformed fermionic integral.
Rational fermionic_q_partial_sum(const std::function<Rational(long long)>& f, long long p,
                                 long long n_level, const Rational& q);

/// Valuation trace of the r-fold sums of w^{sum x_i} [x + sum x_i]_q^n
/// (-1)^{sum x_i} against the closed-form E^{(r)}_{n,w,q}(x), for
/// N = 1..n_max.
WittReport witt_check_plain(long long n, long long r, long long x, const PadicDomain& dom,
                            long long n_max);

/// Same with the extra weight q^{sum_i (h-i+1) x_i}, against
/// E^{(h,r)}_{n,w,q}(x).
WittReport witt_check_hq(long long n, long long r, long long h, long long x,
                         const PadicDomain& dom, long long n_max);

/// Valuation trace of the weighted sums of q^{sum_i (h-i+1) x_i}
/// (sum x_i)^n (-1)^{sum x_i} against G^{(h,r)}_{n+r,q} / (r! C(n+r,r))
/// read off the generating function. dom.w is unused here.
WittReport cos_witt_check(long long n, long long r, long long h, const PadicDomain& dom,
                          long long n_max);

}  // namespace qeg
