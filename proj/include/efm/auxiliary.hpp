#pragma once

#include "efm/efunction.hpp"

#include <vector>

namespace efm {

/// m(n+1) - floor(eps1 n) - 1. Requires 0 < eps1 < 1/(2m-1).
int vanishing_order_target(std::size_t m, int n, const Rational& eps1);

/// 1/(2m).
Rational default_eps1(std::size_t m);

struct AuxiliaryBasis {
    int n = 0;
    Rational eps1;
    int tau = 0;
    std::vector<IntPoly> P;
    /// Exact order of vanishing of R = sum P_i f_i at 0, or the search
    /// limit when R vanished that far (then order_at_limit is set and the
    /// true order is at least this value).
    int achieved_order = 0;
    bool order_at_limit = false;
    Integer height;  // max |coefficient| over all P_i
    std::size_t kernel_dimension = 0;
};

/// Integer polynomials P_1..P_m of degree <= n, not all zero, with
/// ord_0(sum P_i f_i) >= tau. Among the exact kernel basis vectors the one
/// of least max-norm is kept (ties: lexicographically smallest).
AuxiliaryBasis construct(const DiffSystem& sys, int n, const Rational& eps1);

/// sum_i P_i f_i, exact up to z^order.
RatSeries combination_series(const DiffSystem& sys, const std::vector<IntPoly>& P, int order);

/// Majorant g(nu) = K nu^power base^nu / (nu - shift)! of the ordinary
/// coefficients of a power series, valid for every nu >= start. The
/// construction keeps start - shift >= 1, so the factorial argument is
/// positive wherever the bound is used.
struct TailMajorant {
    Rational K;
    unsigned power = 0;
    Rational base;
    long shift = 0;
    long start = 0;

    Rational at(long nu) const;

    /// Majorant of the derivative of the series.
    TailMajorant derivative() const;
    /// Majorant of the product with the polynomial t.
    TailMajorant times(const IntPoly& t) const;
    /// Upper bound for sum_{nu >= start} g(nu) r^nu, r >= 0.
    Rational sum(const Rational& r) const;
};

struct RemainderSeries {
    RatSeries head;  // exact a_nu / nu! for nu <= cutoff
    int cutoff = 0;
    TailMajorant tail;  // for nu > cutoff
};

/// R's coefficients up to `cutoff` together with the tail majorant
/// m(n+1) B Chat^{nu+1} / (nu-n)!, B = height, Chat = max(1, C).
/// Rejects cutoff < achieved_order.
RemainderSeries remainder(const AuxiliaryBasis& basis, const DiffSystem& sys, int cutoff);

}  // namespace efm
