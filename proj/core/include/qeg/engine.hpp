#pragma once

#include "qeg/qcalc.hpp"
#include "qeg/rational.hpp"

#include <optional>

namespace qeg {

/// Parameter bundle for the q-extended Euler/Genocchi families.
/// h absent selects the plain q-extension; h present selects the
/// (h,q)-extension. The argument x = s/d comes with its declared root u,
/// so q = u^d.
struct EulerParams {
    long long n;                 // index, >= 0
    long long r;                 // order, >= 1
    Rational w;                  // twist
    std::optional<long long> h;  // weight exponent
    ArgSpec x;                   // argument
};

/// Parameters of a distribution relation: base values at (w, q) on the left,
/// a twisted sum over residues mod d at (w^d, q^d) on the right. d must be
/// odd and the base argument must be an integer (base.x.d == 1).
struct DistributionParams {
    EulerParams base;
    long long d;
};

/// E^{(r)}_{n,w,q} by the exact finite sum
/// 2^r/(1-q)^n sum_{l=0}^{n} C(n,l) (-1)^l (1/(1 + q^l w))^r.
/// Requires q != 1 and 1 + q^l w != 0 for 0 <= l <= n.
Rational euler_q(long long n, long long r, const Rational& w, const Rational& q);

/// E^{(r)}_{n,w,q}(x) with the extra factor q^{l x} = u^{l s}.
Rational euler_q_poly(long long n, long long r, const Rational& w, const ArgSpec& x);

/// G^{(r)}_{m,w,q}(x): zero for m < r, otherwise
/// r! C(m,r) E^{(r)}_{m-r,w,q}(x).
Rational genocchi_q_poly(long long m, long long r, const Rational& w, const ArgSpec& x);

/// E^{(h,r)}_{n,w,q}(x) by the exact finite sum with denominators
/// (-q^{l+h} w : q^{-1})_r = prod_{j=0}^{r-1} (1 + q^{l+h-j} w).
Rational euler_hq_poly(long long n, long long r, long long h, const Rational& w,
                       const ArgSpec& x);

/// E^{(r-1,r)}_{n,w,q}(x) through the ascending products
/// (-q^l w : q)_r = prod_{j=0}^{r-1} (1 + q^{l+j} w) — an independent code
/// path from euler_hq_poly(h = r-1); the two agree identically.
Rational euler_hq_special(long long n, long long r, const Rational& w, const ArgSpec& x);

/// G^{(h,r)}_{m,w,q}(x): zero for m < r, otherwise
/// r! C(m,r) E^{(h,r)}_{m-r,w,q}(x).
Rational genocchi_hq_poly(long long m, long long r, long long h, const Rational& w,
                          const ArgSpec& x);

/// Partial sum of the series representation, `terms` leading terms:
///   plain:  2^r sum_m C(m+r-1,m) (-w)^m [m+x]_q^n
///   (h,q):  2^r sum_m C(m+r-1,m)_{q^{-1}} q^{hm} (-w)^m [m+x]_q^n
/// Gaussian-binomial values are updated incrementally through the exact
/// ratio C(m+r,m+1)_q = C(m+r-1,m)_q [m+r]_q/[m+1]_q.
Rational euler_series_truncated(const EulerParams& params, long long terms);

/// Partial sum of the h = r-1 series in its ascending form,
/// 2^r sum_m C(m+r-1,m)_q (-w)^m [m+x]_q^n.
Rational euler_hq_special_series_truncated(long long n, long long r, const Rational& w,
                                           const ArgSpec& x, long long terms);

/// Right-hand side of the distribution relation for E^{(r)}_{n,w,q}(x):
/// [d]_q^n sum over (a_1..a_r) in [0,d)^r of w^{sum a} (-1)^{sum a}
/// E^{(r)}_{n,w^d,q^d}((sum a + x)/d), with the fractional arguments encoded
/// as ArgSpec(sum a + x, d, q) so that (q^d)^{1/d} = q exactly.
Rational distribution_rhs_plain(const DistributionParams& params);

/// Genocchi form at index base.n + r:
/// [d]_q^{base.n} sum over tuples of w^{sum a} (-1)^{sum a}
/// G^{(r)}_{base.n+r,w^d,q^d}((sum a + x)/d).
Rational distribution_rhs_genocchi(const DistributionParams& params);

/// Candidate readings of the twist exponent in the weighted (h = r-1)
/// distribution relation: sum_{i=1}^{r} (r-i) a_i (the default) or
/// sum_{i=1}^{r} (r-i+1) a_i.
enum class SpecialWeighting { r_minus_i, r_minus_i_plus_1 };

/// Right-hand side of the weighted distribution relation for
/// E^{(r-1,r)}_{n,w,q}(x): [d]_q^n sum over tuples of q^{e(a)} w^{sum a}
/// (-1)^{sum a} E^{(r-1,r)}_{n,w^d,q^d}((sum a + x)/d), where e(a) is chosen
/// by `weighting`.
Rational distribution_rhs_special(const DistributionParams& params,
                                  SpecialWeighting weighting = SpecialWeighting::r_minus_i);

}  // namespace qeg
