#pragma once

#include "efm/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace efm {

struct LogConfig {
    BoundConfig bound;
    int n_start = 1;
    std::optional<int> n_max;  // default 4 n0 of the augmented system
    unsigned jobs = 1;         // scan only
};

struct LogBoundResult {
    enum class Status { Certified, NotCertified };

    Rational xi;
    Rational beta;
    Status status = Status::NotCertified;
    std::string path;  // "forms" or "interval"

    // forms path
    std::optional<BoundCertificate> forms;
    std::vector<Attempt> attempts;
    std::string forms_failure;
    Rational forms_bound;  // L0 lower bound / omega, 0 without a certificate

    // direct path and the mean value step
    RatInterval f_value;    // f_1(xi)
    RatInterval exp_value;  // exp(beta)
    Rational omega_upper;
    Rational direct_bound;
    bool guard_holds = false;  // |f_1(1) - exp(beta)| < f_1(1)/2, certified
    Rational bound;
    std::string oracle_distance;  // |ln f_1(xi) - beta|, decimal, diagnostic only

    // quantities of the augmented system that move with beta
    Rational E;
    Rational C;
    Rational D;
    // and those that do not
    std::size_t m = 0;
    int p = 0;
    int q = 0;
    IntPoly T;
    std::optional<Integer> n0;

    int n_used() const { return forms ? forms->n : 0; }
};

const char* to_string(LogBoundResult::Status s);

/// Certified lower bound on |ln f_1(xi) - beta| for the first component of
/// f_sys. Throws NonPositiveValue when f_1(xi) is not certified positive,
/// SingularEvaluationPoint when xi T(xi) = 0, and ExhaustedN only when
/// neither the forms path nor the direct interval path certifies.
LogBoundResult log_lower_bound(const DiffSystem& f_sys, const Rational& xi, const Rational& beta,
                               const LogConfig& config = {});

/// One row per reduced a/b with 1 <= b <= b_max and |a/b - ln f_1(xi)| <=
/// window, sorted by b then a. Rows are computed on config.jobs threads;
/// the output does not depend on the job count.
std::vector<LogBoundResult> measure_scan(const DiffSystem& f_sys, const Rational& xi, long b_max,
                                         const Rational& window, const LogConfig& config = {});

struct ExponentFit {
    double c = 0;
    double d = 0;
    std::size_t points = 0;
};

/// Least squares of ln(-ln bound) against ln b over samples (b, bound)
/// with 0 < bound < 1: bound ~ exp(-c b^d). Throws DegenerateFit with
/// fewer than three distinct b.
ExponentFit exponent_fit(const std::vector<std::pair<long, Rational>>& samples);
ExponentFit exponent_fit(const std::vector<LogBoundResult>& table);

}  // namespace efm
