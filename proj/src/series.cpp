#include "efm/series.hpp"

#include <algorithm>

namespace efm {

RatSeries RatSeries::truncate(int order) const
{
    if (order >= this->order()) return *this;
    if (order < 0) return RatSeries();
    return RatSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

RatSeries RatSeries::derivative() const
{
    if (c_.size() <= 1) return RatSeries();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return RatSeries(std::move(d));
}

RatSeries RatSeries::times(const RatPoly& p) const
{
    std::vector<Rational> out(c_.size(), Rational(0));
    const auto& pc = p.coefficients();
    for (std::size_t j = 0; j < pc.size() && j < c_.size(); ++j) {
        if (pc[j] == 0) continue;
        for (std::size_t k = 0; k + j < c_.size(); ++k) out[k + j] += pc[j] * c_[k];
    }
    return RatSeries(std::move(out));
}

RatSeries RatSeries::times(const IntPoly& p) const
{
    return times(to_rat(p));
}

int RatSeries::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] != 0) return static_cast<int>(k);
    }
    return -1;
}

RatSeries& RatSeries::operator+=(const RatSeries& o)
{
    const std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
    return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o)
{
    const std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
    return *this;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b)
{
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return RatSeries(std::move(out));
}

}  // namespace efm
