#include "efm/evalcert.hpp"

#include <algorithm>

namespace efm {

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h))
{
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b)
{
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b)
{
    const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

Rational abs_lower(const RatInterval& iv)
{
    if (iv.lo > 0) return iv.lo;
    if (iv.hi < 0) return -iv.hi;
    return 0;
}

Rational abs_upper(const RatInterval& iv)
{
    return std::max(abs(iv.lo), abs(iv.hi));
}

bool strictly_positive(const RatInterval& iv)
{
    return iv.lo > 0;
}

namespace {

Rational grid_floor(const Rational& x, unsigned bits)
{
    const Integer scale = pow(Integer(2), bits);
    return make_rational(floor(x * Rational(scale)), scale);
}

Rational grid_ceil(const Rational& x, unsigned bits)
{
    const Integer scale = pow(Integer(2), bits);
    return make_rational(ceil(x * Rational(scale)), scale);
}

}  // namespace

RatInterval round_outward(const RatInterval& iv, unsigned bits)
{
    return {grid_floor(iv.lo, bits), grid_ceil(iv.hi, bits)};
}

RatInterval centered(const RatInterval& iv, const Rational& width)
{
    if (iv.width() > width) throw Error(ErrorCode::InvalidArgument, "interval is wider than the requested width");
    const Rational m = iv.mid();
    return {m - width / 2, m + width / 2};
}

unsigned bits_for_width(const Rational& w)
{
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "target width must be positive");
    unsigned bits = 0;
    Rational step = 1;
    while (step > w) {
        step /= 2;
        ++bits;
    }
    return bits;
}

namespace {

// Partial sums of sum_k term(k) for a series whose k-th term is bounded by
// C (C|x|)^k / k!, until the geometric tail bound is <= width/4.
template <class TermAt>
RatInterval sum_with_tail(TermAt term_at, const Rational& c, const Rational& x, const Rational& width)
{
    const Rational cx = c * abs(x);
    const unsigned bits = bits_for_width(width) + 2;
    const Rational quarter = width / 4;
    Rational sum = 0;
    // bound[N] = C (C|x|)^{N+1} / (N+1)!
    Rational bound = c * cx;
    for (unsigned long n = 0;; ++n) {
        sum += term_at(n);
        const Rational denom_left = Rational(n + 2);
        if (denom_left > cx) {
            const Rational tail = bound / (1 - cx / denom_left);
            if (tail <= quarter) {
                return round_outward({sum - tail, sum + tail}, bits);
            }
        }
        bound = bound * cx / Rational(n + 2);
    }
}

}  // namespace

RatInterval eval_component(const DiffSystem& sys, std::size_t i, const Rational& x, const Rational& target_width)
{
    if (i >= sys.dim()) throw Error(ErrorCode::InvalidArgument, "component index out of range");
    if (x == 0) return RatInterval(sys.coefficients(0)[i][0]);
    const Rational c = sys.require_growth().C;
    std::vector<Rational> coeffs;
    Rational power = 1;
    auto term = [&](unsigned long k) {
        if (k >= coeffs.size()) {
            const std::size_t want = std::max<std::size_t>(2 * coeffs.size(), 32);
            coeffs = sys.coefficients(want)[i].coefficients();
        }
        const Rational t = coeffs[k] * power;
        power *= x;
        return t;
    };
    return sum_with_tail(term, c, x, target_width);
}

RatInterval eval_exp(const Rational& r, const Rational& target_width)
{
    if (r == 0) return RatInterval(Rational(1));
    Rational t = 1;
    auto term = [&](unsigned long k) {
        if (k > 0) t = t * r / Rational(k);
        return t;
    };
    // |r^k/k!| <= (|r|)^k/k!, i.e. C = 1 with x = r
    return sum_with_tail(term, Rational(1), r, target_width);
}

namespace {

// atanh(t) for 0 <= t <= 1/3: sum t^{2j+1}/(2j+1), tail after the j = N
// term at most t^{2N+3} / ((2N+3)(1-t^2)). Powers are rounded outward.
RatInterval atanh_small(const Rational& t, const Rational& eps, unsigned bits)
{
    if (t == 0) return RatInterval(Rational(0));
    const Rational t2_lo = round_down(t * t, bits);
    const Rational t2_hi = round_up(t * t, bits);
    Rational p_lo = round_down(t, bits);
    Rational p_hi = round_up(t, bits);
    Rational lo = 0;
    Rational hi = 0;
    for (unsigned long j = 0;; ++j) {
        lo += p_lo / Rational(2 * j + 1);
        hi += p_hi / Rational(2 * j + 1);
        p_lo = round_down(p_lo * t2_lo, bits);
        p_hi = round_up(p_hi * t2_hi, bits);
        const Rational tail = p_hi / (Rational(2 * j + 3) * (1 - t2_hi));
        if (tail <= eps) {
            return {round_down(lo, bits), round_up(hi + tail, bits)};
        }
    }
}

RatInterval ln_point(const Rational& y, const Rational& eps)
{
    // y = 2^k u with u in [1, 2); ln y = k ln 2 + 2 atanh((u-1)/(u+1))
    long k = static_cast<long>(mpz_sizeinbase(y.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(y.get_den_mpz_t(), 2));
    auto scaled = [&](long e) {
        Rational u = y;
        if (e > 0) u /= Rational(pow(Integer(2), static_cast<unsigned long>(e)));
        if (e < 0) u *= Rational(pow(Integer(2), static_cast<unsigned long>(-e)));
        return u;
    };
    Rational u = scaled(k);
    while (u < 1) u = scaled(--k);
    while (u >= 2) u = scaled(++k);
    const unsigned bits = bits_for_width(eps) + 16;
    const Rational share = eps / Rational(4 * (std::abs(k) + 1));
    const RatInterval ln2 = atanh_small(Rational(1, 3), share, bits) * RatInterval(Rational(2));
    const RatInterval frac = atanh_small((u - 1) / (u + 1), share, bits) * RatInterval(Rational(2));
    return ln2 * RatInterval(Rational(k)) + frac;
}

}  // namespace

RatInterval eval_ln(const RatInterval& x, const Rational& target_width)
{
    if (!strictly_positive(x)) {
        throw Error(ErrorCode::NonPositiveValue, "logarithm of an interval that is not strictly positive");
    }
    const Rational eps = target_width / 4;
    const unsigned bits = bits_for_width(target_width) + 2;
    return round_outward({ln_point(x.lo, eps).lo, ln_point(x.hi, eps).hi}, bits);
}

}  // namespace efm
