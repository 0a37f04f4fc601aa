#pragma once

#include "efm/matrix.hpp"
#include "efm/ratfunc.hpp"
#include "efm/series.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace efm {

/// Certified growth of the Taylor data f_i = sum phi_{k,i} z^k / k!:
/// |phi_{k,i}| <= C^{k+1}, and the common denominator of
/// phi_{0,i}, ..., phi_{k,i} is at most D^{k+1}, for every k and i.
struct GrowthCertificate {
    enum class Provenance { Catalog, User };

    Rational C;
    Rational D;
    Provenance provenance = Provenance::User;

    friend bool operator==(const GrowthCertificate&, const GrowthCertificate&) = default;
};

const char* to_string(GrowthCertificate::Provenance p);

/// Upper bounds on the moduli of generalized local exponents, keyed by
/// singular point: "inf", a rational point such as "0" or "-1/2", or "*"
/// for any finite singularity without its own entry.
using ExponentBounds = std::map<std::string, Rational>;

using RatFuncMatrix = Matrix<RatFunc>;
using IntPolyMatrix = Matrix<IntPoly>;

/// Y' = A Y with A in M_m(Q(z)), together with Taylor seeds that pin a
/// unique formal solution. Immutable; Taylor coefficients are memoized in a
/// cache shared between copies (the system never changes, so sharing is
/// safe) and guarded by a mutex.
///
/// T is the primitive integer common denominator of minimal degree of the
/// entries of A (positive leading coefficient). Since T*A may still have
/// rational coefficients, the ladder works with lambda*T where lambda is
/// the least positive integer making lambda*T*A integral.
class DiffSystem {
public:
    /// seeds[i][k] is the k-th ordinary Taylor coefficient of component i
    /// (phi_{k,i}/k!). Throws UnderdeterminedSeeds / InconsistentSeeds when
    /// the seeds do not extend to exactly one formal solution. When
    /// `denominator` is given it must clear every denominator of A.
    DiffSystem(RatFuncMatrix a,
               std::vector<std::vector<Rational>> seeds,
               std::vector<std::string> labels = {},
               std::optional<GrowthCertificate> growth = std::nullopt,
               ExponentBounds exponent_bounds = {},
               std::optional<IntPoly> denominator = std::nullopt);

    std::size_t dim() const { return a_.rows(); }
    const RatFuncMatrix& matrix() const { return a_; }
    const IntPoly& denominator() const { return t_; }
    const Integer& ladder_scale() const { return lambda_; }
    const IntPoly& ladder_multiplier() const { return t_int_; }
    /// lambda * T * A, entrywise in Z[z].
    const IntPolyMatrix& cleared_matrix() const { return ta_int_; }
    /// T * A over Q (before the lambda scaling).
    const Matrix<RatPoly>& denominator_times_matrix() const { return ta_; }

    const std::vector<std::vector<Rational>>& seeds() const { return seeds_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<GrowthCertificate>& growth() const { return growth_; }
    const ExponentBounds& exponent_bounds() const { return exponent_bounds_; }

    /// Exact Taylor coefficients c_0..c_order of every component.
    std::vector<RatSeries> coefficients(std::size_t order) const;

    /// Growth certificate or MissingGrowthCertificate.
    const GrowthCertificate& require_growth() const;

    friend bool operator==(const DiffSystem& a, const DiffSystem& b);

private:
    struct Cache;

    void extend(Cache& cache, std::size_t order) const;

    RatFuncMatrix a_;
    std::vector<std::vector<Rational>> seeds_;
    std::vector<std::string> labels_;
    std::optional<GrowthCertificate> growth_;
    ExponentBounds exponent_bounds_;

    IntPoly t_;
    Integer lambda_;
    IntPoly t_int_;
    Matrix<RatPoly> ta_;
    IntPolyMatrix ta_int_;

    // recurrence data: the coefficient of z^{k+shift_} in
    // t_int*Y' - ta_int*Y is the equation that pins y_k
    int shift_ = 0;
    std::vector<IntMatrix> ta_coeffs_;  // z^j coefficient matrices of ta_int

    std::shared_ptr<Cache> cache_;
};

struct SystemParams {
    int p = 0;      // min order of vanishing at 0 over the components
    int q = 0;      // max(deg T, max deg T*A_ij)
    Rational E;     // max modulus of the coefficients of T and all T*A_ij
    IntPoly T;
};

/// Throws AllComponentsZero when every component is the zero series.
SystemParams extract_params(const DiffSystem& sys);

/// Block-diagonal system (A, beta) with exp(beta z) appended (seed 1).
/// The growth certificate becomes C' = max(C, |beta|), D' = D*den(beta).
DiffSystem augment_exp(const DiffSystem& sys, const Rational& beta);

/// The system satisfied by z -> Y(xi z): A(z) -> xi*A(xi z). With
/// xi = s/t the certificate becomes C*max(1,|xi|), D*t.
DiffSystem rescale(const DiffSystem& sys, const Rational& xi);

// Catalog. Each entry ships a certified (C, D) and exponent bounds.
DiffSystem catalog_exp(const Rational& beta);
DiffSystem catalog_exp_pair();
DiffSystem catalog_bessel_j0();
DiffSystem catalog_hyp1f1(const Rational& a, const Rational& b);

/// Dispatch by name: "exp" (beta), "exp_pair", "bessel_j0", "1F1" (a, b).
DiffSystem catalog(const std::string& name, const std::vector<Rational>& params = {});

}  // namespace efm
