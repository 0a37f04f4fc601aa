#pragma once

#include "efm/efunction.hpp"

namespace efm {

/// Closed interval [lo, hi] with rational endpoints. Arithmetic is exact on
/// the endpoints, hence trivially outward-conservative.
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    RatInterval(Rational point) : lo(point), hi(std::move(point)) {}  // NOLINT(google-explicit-constructor)
    RatInterval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

/// Lower bound of |x| over the interval (0 when it straddles 0).
Rational abs_lower(const RatInterval& iv);
Rational abs_upper(const RatInterval& iv);
bool strictly_positive(const RatInterval& iv);

/// Widens to endpoints on the grid 2^-bits (lo down, hi up).
RatInterval round_outward(const RatInterval& iv, unsigned bits);

/// The interval of exactly `width` with iv's midpoint; iv must fit inside.
RatInterval centered(const RatInterval& iv, const Rational& width);

/// Smallest bits with 2^-bits <= w (w > 0).
unsigned bits_for_width(const Rational& w);

/// f_i(x) to width <= target_width, from the exact partial sum and the
/// growth certificate: after N terms the tail is at most
/// C (C|x|)^{N+1} / (N+1)! / (1 - C|x|/(N+2)).
RatInterval eval_component(const DiffSystem& sys, std::size_t i, const Rational& x, const Rational& target_width);

/// exp(r) to width <= target_width.
RatInterval eval_exp(const Rational& r, const Rational& target_width);

/// ln over a positive interval, widened by at most target_width.
RatInterval eval_ln(const RatInterval& x, const Rational& target_width);

}  // namespace efm
