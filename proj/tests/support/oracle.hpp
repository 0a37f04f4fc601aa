#pragma once

// Independent high-precision reference values for the tests. Everything here
// is computed with MPFR by direct summation of textbook series, sharing no
// code with the library beyond the GMP rational type used for inputs.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

namespace oracle {

// 100 decimal digits plus guard bits
constexpr mpfr_prec_t kPrec = 400;

class Real {
public:
    Real();
    explicit Real(const mpq_class& q, mpfr_rnd_t rnd = MPFR_RNDN);
    explicit Real(long v);
    Real(const Real& o);
    Real& operator=(const Real& o);
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    Real abs() const;
    Real log() const;
    double to_double() const;
    /// Fixed-point decimal with `digits` digits after the point (truncated).
    std::string decimal(int digits) const;

private:
    mpfr_t v_;
};

Real exp(const mpq_class& x);
Real bessel_j0(const mpq_class& x);
Real bessel_j0_prime(const mpq_class& x);
Real hyp1f1(const mpq_class& a, const mpq_class& b, const mpq_class& x);

/// Value of component i of a named catalog system at x:
/// "exp_pair" (e^x, e^{2x}), "bessel_j0" (J0, J0'), "1F1:a:b" (1F1, 1F1').
Real component(const std::string& system, std::size_t i, const mpq_class& x);

/// |sum a_i f_i(x)| for a catalog system.
Real abs_combination(const std::string& system, const std::vector<long>& a, const mpq_class& x);

/// r <= v, with r rounded upward before the comparison. Any error in v is
/// far below 10^-100 for the magnitudes used in the tests.
bool rational_le(const mpq_class& r, const Real& v);

}  // namespace oracle
