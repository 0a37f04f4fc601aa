#include "efm/auxiliary.hpp"

#include "efm/matrix.hpp"

#include <algorithm>

namespace efm {

namespace {

constexpr unsigned kMajorantBits = 128;

void check_eps1(std::size_t m, const Rational& eps1)
{
    const Rational cap(1, 2 * static_cast<long>(m) - 1);
    if (eps1 <= 0 || eps1 >= cap) {
        throw Error(ErrorCode::InvalidArgument,
                    "eps1 = " + to_string(eps1) + " must lie strictly between 0 and 1/(2m-1)");
    }
}

bool better(const std::vector<Integer>& a, const Integer& norm_a, const std::vector<Integer>& b, const Integer& norm_b)
{
    if (norm_a != norm_b) return norm_a < norm_b;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

int vanishing_order_target(std::size_t m, int n, const Rational& eps1)
{
    check_eps1(m, eps1);
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "degree bound n must be nonnegative");
    const Integer drop = floor(eps1 * n);
    return static_cast<int>(m) * (n + 1) - static_cast<int>(drop.get_si()) - 1;
}

Rational default_eps1(std::size_t m)
{
    return Rational(1, 2 * static_cast<long>(m));
}

RatSeries combination_series(const DiffSystem& sys, const std::vector<IntPoly>& P, int order)
{
    if (order < 0) return RatSeries();
    const auto f = sys.coefficients(static_cast<std::size_t>(order));
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (std::size_t i = 0; i < P.size(); ++i) {
        const auto& b = P[i].coefficients();
        for (std::size_t nu = 0; nu < b.size(); ++nu) {
            if (b[nu] == 0) continue;
            const Rational bn(b[nu]);
            for (std::size_t e = nu; e <= static_cast<std::size_t>(order); ++e) {
                const Rational& c = f[i][e - nu];
                if (c != 0) out[e] += bn * c;
            }
        }
    }
    return RatSeries(std::move(out));
}

AuxiliaryBasis construct(const DiffSystem& sys, int n, const Rational& eps1)
{
    const std::size_t m = sys.dim();
    AuxiliaryBasis out;
    out.n = n;
    out.eps1 = eps1;
    out.tau = vanishing_order_target(m, n, eps1);
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    const std::size_t cols = m * width;
    const std::size_t rows = static_cast<std::size_t>(out.tau);

    // column i(n+1)+nu holds the coefficients of z^nu f_i
    const auto f = sys.coefficients(rows == 0 ? 0 : rows - 1);
    RatMatrix vanish(rows, cols);
    for (std::size_t e = 0; e < rows; ++e) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t nu = 0; nu < width && nu <= e; ++nu) vanish(e, i * width + nu) = f[i][e - nu];
        }
    }
    const auto kernel = kernel_basis(vanish);
    out.kernel_dimension = kernel.size();

    const std::vector<Integer>* best = nullptr;
    Integer best_norm;
    for (const auto& v : kernel) {
        Integer norm = 0;
        for (const auto& x : v) norm = std::max(norm, Integer(::abs(x)));
        if (!best || better(v, norm, *best, best_norm)) {
            best = &v;
            best_norm = norm;
        }
    }
    out.height = best_norm;
    for (std::size_t i = 0; i < m; ++i) {
        out.P.emplace_back(std::vector<Integer>(best->begin() + static_cast<std::ptrdiff_t>(i * width),
                                                best->begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
    }

    const int limit = out.tau + static_cast<int>(cols) + 8;
    const RatSeries r = combination_series(sys, out.P, limit - 1);
    const int v = r.valuation();
    if (v < 0) {
        out.achieved_order = limit;
        out.order_at_limit = true;
    } else {
        out.achieved_order = v;
    }
    if (out.achieved_order < out.tau) {
        throw std::logic_error("kernel vector does not vanish to the target order");
    }
    return out;
}

Rational TailMajorant::at(long nu) const
{
    if (nu < start || nu - shift < 0) {
        throw std::logic_error("tail majorant evaluated outside its range");
    }
    Rational v = K * Rational(pow(Integer(nu), power)) * pow(base, static_cast<unsigned long>(nu));
    return v / Rational(factorial(static_cast<unsigned long>(nu - shift)));
}

TailMajorant TailMajorant::derivative() const
{
    if (start < 2) {
        throw std::logic_error("tail majorant cannot be differentiated below index 2");
    }
    TailMajorant out = *this;
    const Rational step(start, start - 1);
    out.K = round_up(K * base * pow(step, power + 1), kMajorantBits);
    out.power = power + 1;
    out.shift = shift - 1;
    out.start = start - 1;
    return out;
}

TailMajorant TailMajorant::times(const IntPoly& t) const
{
    TailMajorant out = *this;
    if (t.is_zero()) {
        out.K = 0;
        return out;
    }
    // (nu-j-shift)! >= (nu-shift)! / (nu-shift)^j and nu-shift <= rho nu
    const Rational rho(start + std::max(0L, -shift), start);
    Rational factor = 0;
    Rational rho_j = 1;
    for (const auto& c : t.coefficients()) {
        factor += Rational(::abs(c)) * rho_j;
        rho_j *= rho;
    }
    out.K = round_up(K * factor, kMajorantBits);
    out.power = power + static_cast<unsigned>(t.degree());
    return out;
}

Rational TailMajorant::sum(const Rational& r) const
{
    if (K == 0 || r == 0) return 0;
    const Rational x = base * r;
    long nu = start;
    Rational term = round_up(at(nu) * pow(r, static_cast<unsigned long>(nu)), kMajorantBits);
    Rational total = 0;
    for (;;) {
        // successive ratios decrease, so once one is <= 1/2 the rest is geometric
        const Rational growth = pow(Rational(nu + 1, nu), power);
        const Rational ratio = growth * x / Rational(nu + 1 - shift);
        if (ratio <= Rational(1, 2)) {
            total += 2 * term;
            break;
        }
        total += term;
        term = round_up(term * ratio, kMajorantBits);
        ++nu;
    }
    return round_up(total, kMajorantBits);
}

RemainderSeries remainder(const AuxiliaryBasis& basis, const DiffSystem& sys, int cutoff)
{
    if (cutoff < basis.achieved_order) {
        throw Error(ErrorCode::InvalidArgument, "cutoff " + std::to_string(cutoff) +
                                                    " lies below the achieved vanishing order " +
                                                    std::to_string(basis.achieved_order));
    }
    if (cutoff < basis.n) {
        throw Error(ErrorCode::InvalidArgument, "cutoff must be at least the degree bound n");
    }
    const GrowthCertificate& g = sys.require_growth();
    const Rational c_hat = std::max(Rational(1), g.C);
    RemainderSeries out;
    out.cutoff = cutoff;
    out.head = combination_series(sys, basis.P, cutoff);
    const Integer terms = Integer(static_cast<unsigned long>(sys.dim())) * (basis.n + 1);
    out.tail.K = Rational(terms) * Rational(basis.height) * c_hat;
    out.tail.power = 0;
    out.tail.base = c_hat;
    out.tail.shift = basis.n;
    out.tail.start = cutoff + 1;
    return out;
}

}  // namespace efm
