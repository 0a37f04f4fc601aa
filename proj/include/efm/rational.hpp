#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace efm {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
    InvalidArgument,
    Parse,
    UnderdeterminedSeeds,
    InconsistentSeeds,
    AllComponentsZero,
    IrregularSingularPoint,
    MissingExponentBound,
    MissingGrowthCertificate,
    SingularEvaluationPoint,
    RankDeficientLadder,
    TargetInSpanFailure,
    ExhaustedN,
    NonPositiveValue,
    DegenerateFit,
    UnsupportedCatalogEntry,
};

const char* to_string(ErrorCode code);

/// Base exception for every recoverable failure in the library. The code
/// lets callers (and the CLI exit-status mapping) branch without parsing
/// messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Builds p/q in lowest terms with a positive denominator. Throws on q == 0.
Rational make_rational(const Integer& p, const Integer& q);

/// The positive denominator of r written in reduced form.
inline Integer den(const Rational& r) { return r.get_den(); }
inline Integer num(const Rational& r) { return r.get_num(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Rational abs(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);
Integer factorial(unsigned long n);

/// Parses "p", "p/q", or a plain decimal such as "-0.125" exactly.
/// Throws Error(Parse) with the offending text.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Decimal expansion rounded to nearest with `digits` fractional digits.
std::string to_decimal(const Rational& r, int digits);

/// Natural log of |r| as a double, usable for values far outside the double
/// exponent range. r must be nonzero.
double log_abs(const Rational& r);
double log_abs(const Integer& z);

/// Smallest dyadic rational >= x whose numerator has at most `bits` bits
/// (or x itself when it is already that short). Used to cap the size of
/// upper bounds without losing rigor.
Rational round_up(const Rational& x, unsigned bits);
/// Largest dyadic rational <= x with the same size cap.
Rational round_down(const Rational& x, unsigned bits);

}  // namespace efm
