#pragma once

#include "efm/auxiliary.hpp"
#include "efm/evalcert.hpp"

#include <string>
#include <vector>

namespace efm {

/// m + t1 with t1 = q(m-1)m/2 + floor(eps1 n) + p.
int ladder_length(std::size_t m, int q, int p, int n, const Rational& eps1);

/// R_1 = R and R_{k+1} = T R_k', written as R_k = sum_i P_{k,i} f_i.
/// T here is the ladder multiplier of the system (T scaled so that T*A
/// has integer coefficients).
struct FormsLadder {
    int n = 0;
    int q = 0;
    IntPoly T;
    std::vector<std::vector<IntPoly>> P;  // P[k-1][i]
    std::vector<int> degree_bounds;      // n + (k-1) q
    /// deg P_{k,i} < n + (k-1)q held for every k >= 2 and every i
    bool strict_degree_bound = true;
    int verified_order = 0;

    int length() const { return static_cast<int>(P.size()); }
};

/// Builds K rows with P_{k+1,j} = T P_{k,j}' + sum_i P_{k,i} (T A)_{ij} and
/// checks sum P_{k+1,i} f_i = T (sum P_{k,i} f_i)' on exact series; a
/// mismatch is an internal error (std::logic_error).
FormsLadder build_ladder(const AuxiliaryBasis& basis, const DiffSystem& sys, int K);

/// Rows a_{k,i} = s_k P_{k,i}(xi) with s_k = den(xi)^{n+(k-1)q}.
struct IntegerForms {
    IntMatrix rows;
    std::vector<Integer> scales;
    Rational xi;
};

/// Throws SingularEvaluationPoint when xi T(xi) = 0.
IntegerForms evaluate_forms(const FormsLadder& ladder, const Rational& xi);

struct BoundConfig {
    std::optional<Rational> eps1;  // default 1/(2m)
    unsigned precision = 256;      // interval width target 2^-precision
};

struct BoundCertificate {
    enum class Status { Certified, NotCertified };

    Status status = Status::NotCertified;
    std::string reason;  // why not certified
    int n = 0;
    Rational eps1;
    int tau = 0;
    int achieved_order = 0;
    bool order_at_limit = false;
    Integer height;
    int ladder_length = 0;
    bool strict_degree_bound = true;
    std::vector<Integer> target;
    std::vector<int> selected_rows;  // 1-based ladder indices, in matrix order
    IntMatrix matrix;                // selected rows on top, target last
    std::size_t ell = 0;             // 1-based
    Integer delta;
    std::vector<Integer> cofactors;  // Delta_{j,ell}, j = 1..m
    std::vector<Rational> form_bounds;  // upper bounds on |s_k R_k(xi)| per selected row
    RatInterval f_ell;
    Rational lower_bound;  // on |sum a_i f_i(xi)|, meaningful when Certified
};

const char* to_string(BoundCertificate::Status s);

/// One attempt at a fixed n. Throws RankDeficientLadder or
/// TargetInSpanFailure when no nonzero determinant can be formed.
BoundCertificate certified_lower_bound(const DiffSystem& sys, const Rational& xi, const std::vector<Integer>& target,
                                       int n, const BoundConfig& config = {});

struct Attempt {
    int n = 0;
    std::string outcome;  // "certified", "not-certified", or an error code name
    std::string detail;
};

struct AdaptiveResult {
    BoundCertificate certificate;
    std::vector<Attempt> attempts;
};

/// Raised by adaptive_bound when no n in [n_start, n_max] certifies.
class ExhaustedError : public Error {
public:
    ExhaustedError(const std::string& what, std::vector<Attempt> attempts);
    const std::vector<Attempt>& attempts() const { return attempts_; }

private:
    std::vector<Attempt> attempts_;
};

AdaptiveResult adaptive_bound(const DiffSystem& sys, const Rational& xi, const std::vector<Integer>& target,
                              int n_start, int n_max, const BoundConfig& config = {});

}  // namespace efm
