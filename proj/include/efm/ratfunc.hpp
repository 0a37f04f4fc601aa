#pragma once

#include "efm/poly.hpp"

#include <string>
#include <string_view>

namespace efm {

/// Rational function num/den over Q, kept reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rational(c)) {}                    // NOLINT(google-explicit-constructor)
    RatFunc(RatPoly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(RatPoly num, RatPoly den);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// f(c z).
    RatFunc dilate(const Rational& c) const;

    /// Value at x; throws if x is a pole.
    Rational evaluate(const Rational& x) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void normalize();

    RatPoly num_;
    RatPoly den_;
};

/// Parses an infix expression in z with rational constants, + - * / ^ and
/// parentheses, e.g. "(z-1/2)/z^2". Exponents are integers (negative
/// allowed). Errors carry the 1-based column.
RatFunc parse_ratfunc(std::string_view text);

/// Canonical textual form accepted by parse_ratfunc: "num" or "(num)/(den)"
/// (parentheses dropped around single terms).
std::string to_string(const RatFunc& f);

}  // namespace efm
