#pragma once

#include "efm/poly.hpp"

#include <vector>

namespace efm {

/// Truncated power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
/// Binary operations truncate to the smaller of the two orders.
class RatSeries {
public:
    RatSeries() = default;
    explicit RatSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    /// Highest known index N (the series is exact modulo z^{N+1}).
    /// An empty series has order -1.
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Rational>& coefficients() const { return c_; }

    RatSeries truncate(int order) const;
    RatSeries derivative() const;
    RatSeries times(const RatPoly& p) const;
    RatSeries times(const IntPoly& p) const;

    /// Index of the first nonzero known coefficient, or -1 if all known
    /// coefficients vanish.
    int valuation() const;

    RatSeries& operator+=(const RatSeries& o);
    RatSeries& operator-=(const RatSeries& o);
    friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
    friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
    friend bool operator==(const RatSeries& a, const RatSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

}  // namespace efm
