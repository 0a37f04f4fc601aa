#include "efm/zeroestimate.hpp"

#include <algorithm>

namespace efm {

Rational LocalExponents::modulus_bound() const
{
    Rational out = other_count > 0 ? other_bound : Rational(0);
    for (const auto& r : rational) out = std::max(out, abs(r));
    return out;
}

const char* to_string(PointExponents::Kind k)
{
    switch (k) {
    case PointExponents::Kind::Regular: return "regular";
    case PointExponents::Kind::Irregular: return "irregular";
    case PointExponents::Kind::User: return "user";
    }
    return "?";
}

std::vector<Rational> exponent_for_exp_block(const Rational&)
{
    return {Rational(0)};
}

N0Bound n0_bound(std::size_t m, int q, const Integer& exponent_ceil)
{
    if (m == 0 || q < 0 || exponent_ceil < 0) {
        throw Error(ErrorCode::InvalidArgument, "n0 needs m >= 1, q >= 0 and a nonnegative exponent bound");
    }
    const Integer mm = static_cast<unsigned long>(m);
    const Integer q1 = q + 1;
    N0Bound out;
    out.value = 2 * q1 * mm * mm * (exponent_ceil + q1 * mm + 1);
    out.m = m;
    out.q = q;
    out.exponent_ceil = exponent_ceil;
    return out;
}

namespace {

std::vector<Integer> divisors(Integer n)
{
    n = ::abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::pair<std::vector<Rational>, RatPoly> rational_roots(const RatPoly& p)
{
    if (p.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    }
    std::vector<Rational> roots;
    RatPoly rest = p;
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        roots.emplace_back(0);
        rest = divmod(rest, RatPoly::z()).first;
    }
    if (rest.degree() > 0) {
        const IntPoly prim = primitive_part(rest);
        const auto lead = divisors(prim.leading());
        const auto constant = divisors(prim.coeff(0));
        std::vector<Rational> candidates;
        for (const auto& d : constant) {
            for (const auto& e : lead) {
                const Rational r = make_rational(d, e);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            const RatPoly factor(std::vector<Rational>{Rational(-r), Rational(1)});
            while (rest.degree() > 0 && rest.evaluate(r) == 0) {
                roots.push_back(r);
                rest = divmod(rest, factor).first;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, monic(rest)};
}

RatPoly characteristic_polynomial(const RatMatrix& a)
{
    // Faddeev-LeVerrier: exact over Q, no divisions by matrix entries.
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a(i, l) * mk(l, j);
                next(i, j) = s;
            }
            next(i, i) += c[n - k + 1];
        }
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * next(l, i);
        }
        c[n - k] = -trace / Rational(static_cast<unsigned long>(k));
        mk = std::move(next);
    }
    return RatPoly(std::move(c));
}

namespace {

int pole_order(const RatFunc& f)
{
    if (f.is_zero()) return 0;
    return std::max(0, f.den().valuation() - f.num().valuation());
}

// lim z^k f(z) at 0, assuming the pole order of f is at most k.
Rational leading_at_zero(const RatFunc& f, int k)
{
    if (f.is_zero() || pole_order(f) < k) return 0;
    return f.num().coeff(static_cast<std::size_t>(f.num().valuation())) /
           f.den().coeff(static_cast<std::size_t>(f.den().valuation()));
}

RatPoly translate(const RatPoly& p, const Rational& z0)
{
    return p.evaluate(RatPoly(std::vector<Rational>{z0, Rational(1)}));
}

RatPoly reversed(const RatPoly& p)
{
    std::vector<Rational> c = p.coefficients();
    std::reverse(c.begin(), c.end());
    return RatPoly(std::move(c));
}

// The system at the local coordinate w: z = z0 + w, or z = 1/w at infinity.
RatFuncMatrix local_matrix(const DiffSystem& sys, const std::string& point)
{
    const std::size_t m = sys.dim();
    RatFuncMatrix out(m, m);
    if (point == "inf") {
        // dY/dw = -(1/w^2) A(1/w) Y
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const RatFunc& f = sys.matrix()(i, j);
                if (f.is_zero()) continue;
                const int shift = f.den().degree() - f.num().degree() - 2;
                RatPoly num = reversed(f.num());
                RatPoly den = reversed(f.den());
                if (shift >= 0) {
                    num = num * RatPoly::monomial(Rational(1), static_cast<std::size_t>(shift));
                } else {
                    den = den * RatPoly::monomial(Rational(1), static_cast<std::size_t>(-shift));
                }
                out(i, j) = -RatFunc(num, den);
            }
        }
        return out;
    }
    const Rational z0 = parse_rational(point);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const RatFunc& f = sys.matrix()(i, j);
            out(i, j) = z0 == 0 ? f : RatFunc(translate(f.num(), z0), translate(f.den(), z0));
        }
    }
    return out;
}

LocalExponents exponents_of(const RatPoly& indicial)
{
    LocalExponents out;
    auto [roots, rest] = rational_roots(indicial);
    out.rational = std::move(roots);
    if (rest.degree() > 0) {
        out.other_count = static_cast<std::size_t>(rest.degree());
        Rational worst = 0;
        for (int k = 0; k < rest.degree(); ++k) worst = std::max(worst, abs(rest.coeff(static_cast<std::size_t>(k))));
        out.other_bound = 1 + worst;  // Cauchy's bound; rest is monic
    }
    return out;
}

// Y_{i+1} = Y_i' / lambda_i for i < m-1, so the first component satisfies
// a scalar equation y^(m) = sum c_j y^(j). Returns nullopt when A does not
// have that shape.
std::optional<std::vector<RatFunc>> companion_coefficients(const RatFuncMatrix& a)
{
    const std::size_t m = a.rows();
    std::vector<Rational> lambda(m, Rational(1));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const RatFunc& f = a(i, j);
            if (j == i + 1) {
                if (f.is_zero() || !f.is_polynomial() || f.num().degree() != 0) return std::nullopt;
                lambda[i] = f.num().coeff(0) / f.den().coeff(0);
            } else if (!f.is_zero()) {
                return std::nullopt;
            }
        }
    }
    std::vector<RatFunc> c(m);
    for (std::size_t j = 0; j < m; ++j) {
        Rational scale = 1;
        for (std::size_t l = j; l + 1 < m; ++l) scale *= lambda[l];
        c[j] = a(m - 1, j) * RatFunc(scale);
    }
    return c;
}

}  // namespace

LocalExponents indicial_exponents(const DiffSystem& sys, const std::string& point)
{
    const RatFuncMatrix a = local_matrix(sys, point);
    const std::size_t m = a.rows();

    if (point != "inf") {
        if (const auto c = companion_coefficients(a)) {
            bool singular = false;
            for (std::size_t j = 0; j < m; ++j) {
                const int order = pole_order((*c)[j]);
                if (order > static_cast<int>(m - j)) {
                    throw Error(ErrorCode::IrregularSingularPoint, "irregular singular point at z = " + point);
                }
                singular = singular || order > 0;
            }
            if (!singular) return {};
            // rho(rho-1)...(rho-m+1) - sum_j gamma_j rho(rho-1)...(rho-j+1)
            auto falling = [](std::size_t k) {
                RatPoly f(Rational(1));
                for (std::size_t l = 0; l < k; ++l) {
                    f = f * RatPoly(std::vector<Rational>{Rational(-static_cast<long>(l)), Rational(1)});
                }
                return f;
            };
            RatPoly indicial = falling(m);
            for (std::size_t j = 0; j < m; ++j) {
                indicial -= falling(j) * leading_at_zero((*c)[j], static_cast<int>(m - j));
            }
            return exponents_of(indicial);
        }
    }

    bool singular = false;
    RatMatrix residue(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const int order = pole_order(a(i, j));
            if (order > 1) {
                throw Error(ErrorCode::IrregularSingularPoint,
                            "pole of order " + std::to_string(order) + " at " + (point == "inf" ? "infinity" : "z = " + point));
            }
            if (order == 1) {
                singular = true;
                residue(i, j) = leading_at_zero(a(i, j), 1);
            }
        }
    }
    if (!singular) return {};
    return exponents_of(characteristic_polynomial(residue));
}

ExponentData exponent_data(const DiffSystem& sys)
{
    const auto& bounds = sys.exponent_bounds();
    ExponentData out;
    out.bound = 0;

    auto take_user = [&](const std::string& point, PointExponents::Kind kind) {
        auto it = bounds.find(point);
        if (it == bounds.end() && point != "inf") it = bounds.find("*");
        if (it == bounds.end()) {
            throw Error(ErrorCode::MissingExponentBound,
                        "no exponent bound supplied for the singular point " + point);
        }
        PointExponents pe;
        pe.point = point;
        pe.kind = kind;
        pe.modulus_bound = it->second;
        return pe;
    };
    auto visit = [&](const std::string& point) {
        PointExponents pe;
        try {
            pe.point = point;
            pe.exponents = indicial_exponents(sys, point);
            pe.modulus_bound = pe.exponents.modulus_bound();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IrregularSingularPoint) throw;
            pe = take_user(point, PointExponents::Kind::Irregular);
        }
        out.bound = std::max(out.bound, pe.modulus_bound);
        out.points.push_back(std::move(pe));
    };

    auto [roots, rest] = rational_roots(to_rat(sys.denominator()));
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& r : roots) visit(to_string(r));
    if (rest.degree() > 0) {
        // non-rational singularities: only a user bound can cover them
        PointExponents pe = take_user("*", PointExponents::Kind::User);
        out.bound = std::max(out.bound, pe.modulus_bound);
        out.points.push_back(std::move(pe));
    }
    visit("inf");
    out.bound_ceil = ceil(out.bound);
    return out;
}

}  // namespace efm
