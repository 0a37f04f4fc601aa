#include "efm/poly.hpp"

namespace efm {

RatPoly to_rat(const IntPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& x : p.coefficients()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& p)
{
    std::vector<Integer> c;
    c.reserve(p.size());
    for (const auto& x : p.coefficients()) {
        if (x.get_den() != 1) {
            throw Error(ErrorCode::InvalidArgument, "polynomial has non-integer coefficient " + to_string(x));
        }
        c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    }
    std::vector<Rational> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size()) {
        return {RatPoly(), a};
    }
    std::vector<Rational> q(r.size() - db, Rational(0));
    const Rational lead = bc.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        const Rational t = r[k] / lead;
        q[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j) {
            r[k - db + j] -= t * bc[j];
        }
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(const RatPoly& p)
{
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a;
    RatPoly y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

RatPoly lcm(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() || b.is_zero()) return RatPoly();
    return monic(divmod(a * b, gcd(a, b)).first);
}

Integer coefficient_denominator(const RatPoly& p)
{
    Integer d = 1;
    for (const auto& x : p.coefficients()) d = lcm(d, x.get_den());
    return d;
}

IntPoly primitive_part(const RatPoly& p)
{
    if (p.is_zero()) return IntPoly();
    const Integer d = coefficient_denominator(p);
    std::vector<Integer> c;
    c.reserve(p.size());
    Integer g = 0;
    for (const auto& x : p.coefficients()) {
        Integer v = x.get_num() * (d / x.get_den());
        g = gcd(g, v);
        c.push_back(std::move(v));
    }
    if (c.back() < 0) g = -g;
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

Rational max_abs_coefficient(const RatPoly& p)
{
    Rational m = 0;
    for (const auto& x : p.coefficients()) {
        const Rational a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

Integer max_abs_coefficient(const IntPoly& p)
{
    Integer m = 0;
    for (const auto& x : p.coefficients()) {
        const Integer a = ::abs(x);
        if (a > m) m = a;
    }
    return m;
}

Integer abs_coefficient_sum(const IntPoly& p)
{
    Integer s = 0;
    for (const auto& x : p.coefficients()) s += ::abs(x);
    return s;
}

namespace {

template <class T>
std::string poly_string(const Poly<T>& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        const bool negative = c[k] < 0;
        const T mag = negative ? T(-c[k]) : c[k];
        if (negative) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        const std::string mag_str = to_string(Rational(mag));
        if (k == 0) {
            out += mag_str;
            continue;
        }
        if (mag != 1) out += mag_str + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string to_string(const RatPoly& p, const std::string& var)
{
    return poly_string(p, var);
}

std::string to_string(const IntPoly& p, const std::string& var)
{
    return poly_string(p, var);
}

}  // namespace efm
