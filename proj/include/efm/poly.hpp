#pragma once

#include "efm/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace efm {

/// Dense univariate polynomial in z with exact coefficients, stored by
/// increasing degree. The leading stored coefficient is never zero, so the
/// zero polynomial has an empty coefficient list and degree() == -1.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(const T& constant)  // NOLINT(google-explicit-constructor)
    {
        if (constant != 0) {
            c_.push_back(constant);
        }
    }
    Poly(int constant) : Poly(T(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const T& coeff, std::size_t k)
    {
        if (coeff == 0) {
            return Poly();
        }
        std::vector<T> c(k + 1, T(0));
        c[k] = coeff;
        return Poly(std::move(c));
    }
    static Poly z() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const std::vector<T>& coefficients() const { return c_; }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    /// Index of the lowest nonzero coefficient, -1 for the zero polynomial.
    int valuation() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] != 0) return static_cast<int>(k);
        }
        return -1;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) {
            return Poly();
        }
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) {
            d[k - 1] = c_[k] * static_cast<unsigned long>(k);
        }
        return Poly(std::move(d));
    }

    /// Horner evaluation at x in the (possibly wider) ring U.
    template <class U>
    U evaluate(const U& x) const
    {
        U acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + U(*it);
        }
        return acc;
    }

    /// p(c z).
    Poly dilate(const T& c) const
    {
        std::vector<T> out(c_);
        T power = 1;
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] *= power;
            power *= c;
        }
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s)
    {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a)
    {
        Poly out = a;
        for (auto& x : out.c_) x = -x;
        return out;
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& p);

/// Exact conversion; throws if some coefficient is not an integer.
IntPoly to_int(const RatPoly& p);

/// Polynomial long division over Q: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly lcm(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);

/// Least common multiple of the coefficient denominators.
Integer coefficient_denominator(const RatPoly& p);

/// Integer primitive polynomial proportional to p, with positive leading
/// coefficient. Zero maps to zero.
IntPoly primitive_part(const RatPoly& p);

/// Max modulus of the coefficients (0 for the zero polynomial).
Rational max_abs_coefficient(const RatPoly& p);
Integer max_abs_coefficient(const IntPoly& p);
Integer abs_coefficient_sum(const IntPoly& p);

/// Compact infix form in z, descending powers: "3/2*z^2-z+1".
std::string to_string(const RatPoly& p, const std::string& var = "z");
std::string to_string(const IntPoly& p, const std::string& var = "z");

}  // namespace efm
