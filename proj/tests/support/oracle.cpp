#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

Real::Real()
{
    mpfr_init2(v_, kPrec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const mpq_class& q, mpfr_rnd_t rnd)
{
    mpfr_init2(v_, kPrec);
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
}

Real::Real(long v)
{
    mpfr_init2(v_, kPrec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, kPrec);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real& Real::operator=(const Real& o)
{
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real operator+(const Real& a, const Real& b)
{
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const
{
    Real r;
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::log() const
{
    Real r;
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

double Real::to_double() const
{
    return mpfr_get_d(v_, MPFR_RNDN);
}

std::string Real::decimal(int digits) const
{
    // truncate |v| * 10^digits toward zero
    Real scaled;
    mpfr_ui_pow_ui(scaled.v_, 10, static_cast<unsigned long>(digits), MPFR_RNDN);
    mpfr_mul(scaled.v_, scaled.v_, v_, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), scaled.v_, MPFR_RNDZ);
    const bool negative = z < 0;
    if (negative) z = -z;
    std::string s = z.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (negative ? "-" : "") + s;
}

namespace {

// Direct summation. Past min_terms the terms shrink by at least a factor
// 2 each step (callers pick min_terms from |x|), so stopping once a term is
// 2^-(kPrec+40) below the running total leaves a negligible tail.
template <class Next>
Real sum_series(Real term, Next next, long min_terms)
{
    Real total;
    for (long k = 0; k < 1000000; ++k) {
        total = total + term;
        if (k >= min_terms && (mpfr_zero_p(term.get()) ||
                               mpfr_get_exp(term.get()) < mpfr_get_exp(total.get()) - static_cast<mpfr_exp_t>(kPrec + 40))) {
            return total;
        }
        term = next(term, k);
    }
    throw std::runtime_error("oracle series did not converge");
}

long min_terms(const mpq_class& x, long factor)
{
    return 4 * factor * static_cast<long>(std::ceil(mpq_class(abs(x)).get_d())) + 8;
}

}  // namespace

Real exp(const mpq_class& x)
{
    const Real rx(x);
    return sum_series(Real(1), [&](const Real& t, long k) { return t * rx / Real(k + 1); }, min_terms(x, 1));
}

Real bessel_j0(const mpq_class& x)
{
    // sum (-1)^n (x/2)^{2n} / (n!)^2
    const Real h2 = Real(mpq_class(x * x / 4));
    return sum_series(Real(1), [&](const Real& t, long n) {
        return Real(0) - t * h2 / Real((n + 1) * (n + 1));
    }, min_terms(x, 1));
}

Real bessel_j0_prime(const mpq_class& x)
{
    // -J1(x) = -sum (-1)^n (x/2)^{2n+1} / (n! (n+1)!)
    const Real h = Real(mpq_class(x / 2));
    const Real h2 = h * h;
    const Real first = Real(0) - h;
    return sum_series(first, [&](const Real& t, long n) { return Real(0) - t * h2 / Real((n + 1) * (n + 2)); }, min_terms(x, 1));
}

Real hyp1f1(const mpq_class& a, const mpq_class& b, const mpq_class& x)
{
    const Real rx(x);
    return sum_series(Real(1), [&](const Real& t, long k) {
        return t * Real(mpq_class(a + k)) / Real(mpq_class(b + k)) * rx / Real(k + 1);
    }, min_terms(x, 1) + 4 * static_cast<long>(std::ceil(mpq_class(abs(a) + abs(b)).get_d())));
}

Real component(const std::string& system, std::size_t i, const mpq_class& x)
{
    if (system == "exp_pair") return exp(i == 0 ? x : mpq_class(2 * x));
    if (system == "bessel_j0") return i == 0 ? bessel_j0(x) : bessel_j0_prime(x);
    if (system.rfind("1F1:", 0) == 0) {
        const auto second = system.find(':', 4);
        const mpq_class a(system.substr(4, second - 4));
        const mpq_class b(system.substr(second + 1));
        mpq_class ac = a, bc = b;
        ac.canonicalize();
        bc.canonicalize();
        if (i == 0) return hyp1f1(ac, bc, x);
        return Real(mpq_class(ac / bc)) * hyp1f1(mpq_class(ac + 1), mpq_class(bc + 1), x);
    }
    throw std::invalid_argument("oracle has no system " + system);
}

Real abs_combination(const std::string& system, const std::vector<long>& a, const mpq_class& x)
{
    Real total;
    for (std::size_t i = 0; i < a.size(); ++i) total = total + Real(a[i]) * component(system, i, x);
    return total.abs();
}

bool rational_le(const mpq_class& r, const Real& v)
{
    const Real up(r, MPFR_RNDU);
    return mpfr_lessequal_p(up.get(), v.get()) != 0;
}

}  // namespace oracle
