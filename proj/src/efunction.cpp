#include "efm/efunction.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

namespace efm {

const char* to_string(GrowthCertificate::Provenance p)
{
    return p == GrowthCertificate::Provenance::Catalog ? "catalog" : "user";
}

struct DiffSystem::Cache {
    std::mutex mutex;
    std::vector<std::vector<Rational>> y;  // y[k][i]
};

namespace {

IntMatrix coefficient_matrix(const IntPolyMatrix& m, std::size_t j)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).coeff(j);
    }
    return out;
}

std::string order_text(std::size_t k)
{
    return "order " + std::to_string(k);
}

}  // namespace

DiffSystem::DiffSystem(RatFuncMatrix a,
                       std::vector<std::vector<Rational>> seeds,
                       std::vector<std::string> labels,
                       std::optional<GrowthCertificate> growth,
                       ExponentBounds exponent_bounds,
                       std::optional<IntPoly> denominator)
    : a_(std::move(a)),
      seeds_(std::move(seeds)),
      labels_(std::move(labels)),
      growth_(std::move(growth)),
      exponent_bounds_(std::move(exponent_bounds)),
      cache_(std::make_shared<Cache>())
{
    const std::size_t m = a_.rows();
    if (m == 0 || !a_.square()) {
        throw Error(ErrorCode::InvalidArgument, "system matrix must be square and nonempty");
    }
    if (seeds_.size() != m) {
        throw Error(ErrorCode::InvalidArgument, "expected one seed list per component");
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < m; ++i) labels_.push_back("f" + std::to_string(i + 1));
    }
    if (labels_.size() != m) {
        throw Error(ErrorCode::InvalidArgument, "expected one label per component");
    }
    if (growth_ && (growth_->C < 1 || growth_->D < 1)) {
        throw Error(ErrorCode::InvalidArgument, "growth certificate needs C >= 1 and D >= 1");
    }

    RatPoly common(Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) common = lcm(common, a_(i, j).den());
    }
    if (denominator) {
        if (denominator->is_zero()) {
            throw Error(ErrorCode::InvalidArgument, "T must be nonzero");
        }
        if (!divmod(to_rat(*denominator), common).second.is_zero()) {
            throw Error(ErrorCode::InvalidArgument,
                        "T = " + to_string(*denominator) + " does not clear the denominators of A");
        }
        t_ = primitive_part(to_rat(*denominator));
    } else {
        t_ = primitive_part(common);
    }

    const RatPoly t_rat = to_rat(t_);
    ta_ = Matrix<RatPoly>(m, m);
    lambda_ = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto [quot, rem] = divmod(t_rat * a_(i, j).num(), a_(i, j).den());
            ta_(i, j) = quot;
            lambda_ = lcm(lambda_, coefficient_denominator(quot));
        }
    }
    t_int_ = t_ * lambda_;
    ta_int_ = IntPolyMatrix(m, m);
    int q = t_int_.degree();
    int v = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ta_int_(i, j) = to_int(ta_(i, j) * Rational(lambda_));
            q = std::max(q, ta_int_(i, j).degree());
            if (!ta_int_(i, j).is_zero()) v = std::min(v, ta_int_(i, j).valuation());
        }
    }
    const int s = t_int_.valuation();
    shift_ = std::min(s - 1, v);
    for (int j = 0; j <= q; ++j) ta_coeffs_.push_back(coefficient_matrix(ta_int_, static_cast<std::size_t>(j)));

    // Singular orders of the recurrence are the nonnegative integer roots of
    // det(lead*k*I - B); they are bounded by the spectral radius of B/lead.
    std::size_t max_seed = 0;
    for (const auto& s_i : seeds_) max_seed = std::max(max_seed, s_i.size());
    std::size_t horizon = max_seed + 1;
    const Integer lead = t_int_.coeff(static_cast<std::size_t>(shift_ + 1));
    if (lead != 0 && shift_ >= 0) {
        const IntMatrix& b = ta_coeffs_[static_cast<std::size_t>(shift_)];
        Integer row_max = 0;
        for (std::size_t i = 0; i < m; ++i) {
            Integer sum = 0;
            for (std::size_t j = 0; j < m; ++j) sum += ::abs(b(i, j));
            row_max = std::max(row_max, sum);
        }
        const Integer radius = floor(make_rational(row_max, ::abs(lead)));
        horizon = std::max(horizon, static_cast<std::size_t>(radius.get_ui()) + 2);
    }
    std::lock_guard lock(cache_->mutex);
    extend(*cache_, horizon);
}

void DiffSystem::extend(Cache& cache, std::size_t order) const
{
    const std::size_t m = dim();
    const auto& t = t_int_.coefficients();
    const int dt = t_int_.degree();
    const int q = static_cast<int>(ta_coeffs_.size()) - 1;
    while (cache.y.size() <= order) {
        const std::size_t k = cache.y.size();
        const long kl = static_cast<long>(k);
        // equation index e = k + shift; coefficient matrix of y_{k'} is
        // t_{e+1-k'} * k' * I - B_{e-k'}
        const long e = kl + shift_;
        std::vector<Rational> rhs(m, Rational(0));
        const long lo = std::max<long>(0, std::min<long>(e + 1 - dt, e - q));
        for (long kp = lo; kp < kl; ++kp) {
            const auto& yk = cache.y[static_cast<std::size_t>(kp)];
            const long jt = e + 1 - kp;
            const long jb = e - kp;
            for (std::size_t r = 0; r < m; ++r) {
                Rational acc = 0;
                if (jt >= 0 && jt <= dt && t[static_cast<std::size_t>(jt)] != 0) {
                    acc += Rational(t[static_cast<std::size_t>(jt)] * kp) * yk[r];
                }
                if (jb >= 0 && jb <= q) {
                    const IntMatrix& b = ta_coeffs_[static_cast<std::size_t>(jb)];
                    for (std::size_t c = 0; c < m; ++c) {
                        if (b(r, c) != 0) acc -= Rational(b(r, c)) * yk[c];
                    }
                }
                rhs[r] -= acc;
            }
        }
        RatMatrix lead(m, m);
        const long jt = e + 1 - kl;
        const long jb = e - kl;
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                Rational v = 0;
                if (r == c && jt >= 0 && jt <= dt) v += Rational(t[static_cast<std::size_t>(jt)] * kl);
                if (jb >= 0 && jb <= q) v -= Rational(ta_coeffs_[static_cast<std::size_t>(jb)](r, c));
                lead(r, c) = v;
            }
        }
        std::vector<std::size_t> unknown;
        std::vector<Rational> y(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (k < seeds_[i].size()) {
                y[i] = seeds_[i][k];
            } else {
                unknown.push_back(i);
            }
        }
        RatMatrix sub(m, unknown.size());
        std::vector<Rational> b = rhs;
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t u = 0; u < unknown.size(); ++u) sub(r, u) = lead(r, unknown[u]);
            for (std::size_t c = 0; c < m; ++c) {
                if (k < seeds_[c].size()) b[r] -= lead(r, c) * y[c];
            }
        }
        const LinearSolve sol = solve_linear(sub, b);
        if (sol.status == LinearSolve::Status::Inconsistent) {
            throw Error(ErrorCode::InconsistentSeeds, "seeds violate the coefficient recurrence at " + order_text(k));
        }
        if (sol.status == LinearSolve::Status::Underdetermined) {
            throw Error(ErrorCode::UnderdeterminedSeeds,
                        "coefficient recurrence leaves " + order_text(k) + " free; supply more seed terms");
        }
        for (std::size_t u = 0; u < unknown.size(); ++u) y[unknown[u]] = sol.x[u];
        cache.y.push_back(std::move(y));
    }
}

std::vector<RatSeries> DiffSystem::coefficients(std::size_t order) const
{
    std::lock_guard lock(cache_->mutex);
    extend(*cache_, order);
    std::vector<RatSeries> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::vector<Rational> c(order + 1);
        for (std::size_t k = 0; k <= order; ++k) c[k] = cache_->y[k][i];
        out.emplace_back(std::move(c));
    }
    return out;
}

const GrowthCertificate& DiffSystem::require_growth() const
{
    if (!growth_) {
        throw Error(ErrorCode::MissingGrowthCertificate, "the system has no growth certificate (C, D)");
    }
    return *growth_;
}

bool operator==(const DiffSystem& a, const DiffSystem& b)
{
    return a.a_ == b.a_ && a.t_ == b.t_ && a.seeds_ == b.seeds_ && a.labels_ == b.labels_ &&
           a.growth_ == b.growth_ && a.exponent_bounds_ == b.exponent_bounds_;
}

SystemParams extract_params(const DiffSystem& sys)
{
    SystemParams out;
    out.T = sys.denominator();
    out.q = out.T.degree();
    out.E = max_abs_coefficient(to_rat(out.T));
    const auto& ta = sys.denominator_times_matrix();
    for (std::size_t i = 0; i < sys.dim(); ++i) {
        for (std::size_t j = 0; j < sys.dim(); ++j) {
            out.q = std::max(out.q, ta(i, j).degree());
            out.E = std::max(out.E, max_abs_coefficient(ta(i, j)));
        }
    }
    // Below the longest seed list every coefficient is forced by earlier
    // ones, so a solution that is zero that far is identically zero.
    std::size_t limit = 0;
    for (const auto& s : sys.seeds()) limit = std::max(limit, s.size());
    const auto series = sys.coefficients(limit + 1);
    for (std::size_t k = 0; k <= limit + 1; ++k) {
        for (const auto& s : series) {
            if (s[k] != 0) {
                out.p = static_cast<int>(k);
                return out;
            }
        }
    }
    throw Error(ErrorCode::AllComponentsZero, "every component of the solution vanishes identically");
}

DiffSystem augment_exp(const DiffSystem& sys, const Rational& beta)
{
    const std::size_t m = sys.dim();
    RatFuncMatrix a(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = sys.matrix()(i, j);
    }
    a(m, m) = RatFunc(beta);
    auto seeds = sys.seeds();
    seeds.push_back({Rational(1)});
    auto labels = sys.labels();
    labels.push_back("exp(" + to_string(beta) + "*z)");
    std::optional<GrowthCertificate> growth = sys.growth();
    if (growth) {
        growth->C = std::max(growth->C, abs(beta));
        growth->D = growth->D * Rational(den(beta));
    }
    return DiffSystem(std::move(a), std::move(seeds), std::move(labels), growth, sys.exponent_bounds());
}

DiffSystem rescale(const DiffSystem& sys, const Rational& xi)
{
    if (xi == 0) {
        throw Error(ErrorCode::InvalidArgument, "rescaling by xi = 0");
    }
    const std::size_t m = sys.dim();
    RatFuncMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = sys.matrix()(i, j).dilate(xi) * RatFunc(xi);
    }
    auto seeds = sys.seeds();
    for (auto& s : seeds) {
        Rational power = 1;
        for (auto& c : s) {
            c *= power;
            power *= xi;
        }
    }
    std::optional<GrowthCertificate> growth = sys.growth();
    if (growth) {
        growth->C = growth->C * std::max(Rational(1), abs(xi));
        growth->D = growth->D * Rational(den(xi));
    }
    ExponentBounds bounds;
    for (const auto& [key, value] : sys.exponent_bounds()) {
        if (key == "inf" || key == "*") {
            bounds[key] = value;
        } else {
            bounds[to_string(Rational(parse_rational(key) / xi))] = value;
        }
    }
    return DiffSystem(std::move(a), std::move(seeds), sys.labels(), growth, std::move(bounds));
}

DiffSystem catalog_exp(const Rational& beta)
{
    // phi_k = beta^k, so |phi_k| <= max(1,|beta|)^{k+1} and the common
    // denominator is den(beta)^k.
    GrowthCertificate g{std::max(Rational(1), abs(beta)), Rational(den(beta)), GrowthCertificate::Provenance::Catalog};
    return DiffSystem(RatFuncMatrix{{RatFunc(beta)}}, {{Rational(1)}}, {"exp(" + to_string(beta) + "*z)"}, g,
                      {{"inf", Rational(0)}});
}

DiffSystem catalog_exp_pair()
{
    GrowthCertificate g{Rational(2), Rational(1), GrowthCertificate::Provenance::Catalog};
    return DiffSystem(RatFuncMatrix{{RatFunc(1), RatFunc(0)}, {RatFunc(0), RatFunc(2)}},
                      {{Rational(1)}, {Rational(1)}}, {"exp(z)", "exp(2*z)"}, g, {{"inf", Rational(0)}});
}

DiffSystem catalog_bessel_j0()
{
    // Y = (J0, J0') with z y'' + y' + z y = 0.
    // phi_{2n}(J0) = (-1)^n binom(2n,n)/4^n, so |phi_k| <= 1 and the common
    // denominator of phi_0..phi_k divides 2^k; J0' shifts the index by one,
    // giving C = 1, D = 2. The exponent bound 2 covers the exponents {0, 0}
    // at the origin and the generalized exponents (+-i, -1/2) at infinity.
    const RatFunc minus_inv_z = RatFunc(RatPoly(Rational(-1)), RatPoly::z());
    GrowthCertificate g{Rational(1), Rational(2), GrowthCertificate::Provenance::Catalog};
    return DiffSystem(RatFuncMatrix{{RatFunc(0), RatFunc(1)}, {RatFunc(-1), minus_inv_z}},
                      {{Rational(1)}, {Rational(0)}}, {"J0", "J0'"}, g, {{"inf", Rational(2)}});
}

namespace {

// sup_j |a+j| / |b+j|, or an upper bound for it.
Rational pochhammer_ratio_bound(const Rational& a, const Rational& b)
{
    if (a >= 0 && b >= a) return Rational(1);
    const Rational aa = abs(a);
    const Rational ab = abs(b);
    const Integer cut = floor(ab) + 1 + ceil(aa + ab);
    Rational best = 0;
    for (Integer j = 0; j < cut; ++j) {
        const Rational r = abs(Rational(a + j)) / abs(Rational(b + j));
        best = std::max(best, r);
    }
    // beyond the cut, (j+|a|)/(j-|b|) is decreasing in j
    best = std::max(best, Rational((Rational(cut) + aa) / (Rational(cut) - ab)));
    return best;
}

std::size_t distinct_primes_not_dividing(Integer n, const Integer& other)
{
    std::size_t count = 0;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        if (other % p != 0) ++count;
        while (n % p == 0) n /= p;
    }
    if (n > 1 && other % n != 0) ++count;
    return count;
}

}  // namespace

DiffSystem catalog_hyp1f1(const Rational& a, const Rational& b)
{
    if (b <= 0 && is_integer(b)) {
        throw Error(ErrorCode::UnsupportedCatalogEntry, "1F1 lower parameter must not be a nonpositive integer");
    }
    // Y = (y, y') with z y'' + (b - z) y' - a y = 0, phi_k = (a)_k/(b)_k.
    //
    // C: |phi_k| is a product of ratios |a+j|/|b+j|, bounded termwise.
    //
    // D: write a = a1/a2, b = b1/b2 and N = |b1| + b2*k. Primes p not
    // dividing a2*b2 contribute at most floor(log_p N) (consecutive terms of
    // the two progressions hit p^e equally often up to one), so together at
    // most lcm(1..N) < 3^N. A prime p | a2 with p not dividing b2 adds at
    // most k/(p-1) + log_p N <= k + log_2 N... bounded by 2^k * N. With w
    // such primes and N <= 2^N this gives
    //   den <= a2^k 2^{wk} (3*2^w)^N = base^k * g^{|b1|},
    // g = 3*2^w, base = a2*2^w*g^{b2}; D = base*g^{|b1|} also covers the
    // index shift of y'.
    const Rational c = std::max(Rational(1), pochhammer_ratio_bound(a, b));
    const Integer a2 = den(a);
    const Integer b1 = ::abs(num(b));
    const Integer b2 = den(b);
    const std::size_t w = distinct_primes_not_dividing(a2, b2);
    const Integer two_w = pow(Integer(2), w);
    const Integer g = 3 * two_w;
    const Integer base = a2 * two_w * pow(g, b2.get_ui());
    const Integer d = base * pow(g, b1.get_ui());

    const RatFunc a_over_z = RatFunc(RatPoly(a), RatPoly::z());
    const RatFunc shifted = RatFunc(RatPoly::z() - RatPoly(b), RatPoly::z());
    Rational e = std::max({abs(a), abs(b), abs(Rational(1 - b)), abs(Rational(a - b))});
    GrowthCertificate gc{c, Rational(d), GrowthCertificate::Provenance::Catalog};
    const std::string tag = "1F1(" + to_string(a) + ";" + to_string(b) + ")";
    return DiffSystem(RatFuncMatrix{{RatFunc(0), RatFunc(1)}, {a_over_z, shifted}},
                      {{Rational(1)}, {Rational(a / b)}}, {tag, tag + "'"}, gc,
                      {{"inf", Rational(ceil(e) + 1)}});
}

DiffSystem catalog(const std::string& name, const std::vector<Rational>& params)
{
    auto need = [&](std::size_t n) {
        if (params.size() != n) {
            throw Error(ErrorCode::UnsupportedCatalogEntry,
                        name + " expects " + std::to_string(n) + " parameter(s)");
        }
    };
    if (name == "exp") {
        need(1);
        return catalog_exp(params[0]);
    }
    if (name == "exp_pair") {
        need(0);
        return catalog_exp_pair();
    }
    if (name == "bessel_j0") {
        need(0);
        return catalog_bessel_j0();
    }
    if (name == "1F1") {
        need(2);
        return catalog_hyp1f1(params[0], params[1]);
    }
    throw Error(ErrorCode::UnsupportedCatalogEntry, "unknown catalog entry \"" + name + "\"");
}

}  // namespace efm
