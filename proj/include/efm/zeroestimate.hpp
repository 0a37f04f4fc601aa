#pragma once

#include "efm/efunction.hpp"

#include <string>
#include <vector>

namespace efm {

/// Roots of an indicial polynomial: the rational ones exactly (with
/// multiplicity) and the rest summarized by a modulus bound.
struct LocalExponents {
    std::vector<Rational> rational;
    std::size_t other_count = 0;
    Rational other_bound = 0;  // bound on |root| for the non-rational roots

    Rational modulus_bound() const;
};

/// Exponents at z = point (a rational) or at infinity (point == "inf").
/// An empty result means the point is ordinary. Throws
/// IrregularSingularPoint when the point is not visibly regular.
LocalExponents indicial_exponents(const DiffSystem& sys, const std::string& point);

/// exp(beta z) has null generalized exponents everywhere.
std::vector<Rational> exponent_for_exp_block(const Rational& beta);

struct PointExponents {
    enum class Kind { Regular, Irregular, User };
    std::string point;
    Kind kind = Kind::Regular;
    LocalExponents exponents;  // empty unless kind == Regular
    Rational modulus_bound;
};

const char* to_string(PointExponents::Kind k);

struct ExponentData {
    std::vector<PointExponents> points;
    Rational bound;     // max modulus over all points
    Integer bound_ceil;
};

/// Walks every singularity of the system (the roots of T and infinity).
/// Regular points are computed; the others take the system's exponent
/// bounds ("*" covers finite points without their own key, including roots
/// of T that are not rational). Throws MissingExponentBound otherwise.
ExponentData exponent_data(const DiffSystem& sys);

struct N0Bound {
    Integer value;
    std::size_t m = 0;
    int q = 0;
    Integer exponent_ceil;
};

/// 2(q+1) m^2 (E + (q+1) m + 1).
N0Bound n0_bound(std::size_t m, int q, const Integer& exponent_ceil);

/// Rational roots of a polynomial with their multiplicities (as repeated
/// entries, ascending), plus the cofactor carrying the remaining roots.
std::pair<std::vector<Rational>, RatPoly> rational_roots(const RatPoly& p);

/// Characteristic polynomial det(x I - M), monic.
RatPoly characteristic_polynomial(const RatMatrix& m);

}  // namespace efm
