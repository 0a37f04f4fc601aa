#include "efm/rational.hpp"

#include <cctype>
#include <cmath>

namespace efm {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnderdeterminedSeeds: return "UnderdeterminedSeeds";
    case ErrorCode::InconsistentSeeds: return "InconsistentSeeds";
    case ErrorCode::AllComponentsZero: return "AllComponentsZero";
    case ErrorCode::IrregularSingularPoint: return "IrregularSingularPoint";
    case ErrorCode::MissingExponentBound: return "MissingExponentBound";
    case ErrorCode::MissingGrowthCertificate: return "MissingGrowthCertificate";
    case ErrorCode::SingularEvaluationPoint: return "SingularEvaluationPoint";
    case ErrorCode::RankDeficientLadder: return "RankDeficientLadder";
    case ErrorCode::TargetInSpanFailure: return "TargetInSpanFailure";
    case ErrorCode::ExhaustedN: return "ExhaustedN";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::UnsupportedCatalogEntry: return "UnsupportedCatalogEntry";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

Rational make_rational(const Integer& p, const Integer& q)
{
    if (q == 0) {
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer floor(const Rational& r)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& r)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Rational abs(const Rational& r)
{
    return r < 0 ? Rational(-r) : r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer pow(const Integer& base, unsigned long exp)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow(const Rational& base, unsigned long exp)
{
    return make_rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw Error(ErrorCode::Parse, "malformed rational \"" + std::string(whole) + "\"");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw Error(ErrorCode::Parse, "malformed rational \"" + std::string(whole) + "\"");
        }
    }
    Integer z(std::string(text.substr(i)), 10);
    return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const Integer p = parse_integer(trim(s.substr(0, slash)), text);
        const Integer q = parse_integer(trim(s.substr(slash + 1)), text);
        if (q == 0) {
            throw Error(ErrorCode::Parse, "zero denominator in \"" + std::string(text) + "\"");
        }
        return make_rational(p, q);
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        bool negative = false;
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            negative = whole.front() == '-';
            whole.remove_prefix(1);
        }
        if ((whole.empty() && frac.empty()) || frac.find_first_of("+-") != std::string_view::npos) {
            throw Error(ErrorCode::Parse, "malformed rational \"" + std::string(text) + "\"");
        }
        const Integer ip = whole.empty() ? Integer(0) : parse_integer(whole, text);
        const Integer fp = frac.empty() ? Integer(0) : parse_integer(frac, text);
        const Integer scale = pow(Integer(10), frac.size());
        Rational r = make_rational(ip * scale + fp, scale);
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(s, text));
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits)
{
    const Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
    const Rational scaled = abs(r) * scale;
    // round half up on the magnitude
    Integer q = floor(scaled + Rational(1, 2));
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (r < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

double log_abs(const Integer& z)
{
    if (z == 0) {
        throw Error(ErrorCode::InvalidArgument, "log of zero");
    }
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& r)
{
    return log_abs(r.get_num()) - log_abs(r.get_den());
}

namespace {

// floor/ceil of x * 2^shift (shift may be negative)
Integer scaled_round(const Rational& x, long shift, bool up)
{
    Integer n = x.get_num();
    Integer d = x.get_den();
    if (shift >= 0) {
        n <<= static_cast<mp_bitcnt_t>(shift);
    } else {
        d <<= static_cast<mp_bitcnt_t>(-shift);
    }
    Integer out;
    if (up) {
        mpz_cdiv_q(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    } else {
        mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

Rational dyadic(const Integer& m, long shift)
{
    if (shift >= 0) {
        Integer d = 1;
        d <<= static_cast<mp_bitcnt_t>(shift);
        return make_rational(m, d);
    }
    Integer n = m;
    n <<= static_cast<mp_bitcnt_t>(-shift);
    return Rational(n);
}

Rational round_dir(const Rational& x, unsigned bits, bool up)
{
    if (x == 0) {
        return x;
    }
    const std::size_t nb = mpz_sizeinbase(x.get_num_mpz_t(), 2);
    const std::size_t db = mpz_sizeinbase(x.get_den_mpz_t(), 2);
    if (nb + db <= bits) {
        return x;
    }
    // pick shift so that |x| * 2^shift has about `bits` bits
    const long shift = static_cast<long>(bits) - (static_cast<long>(nb) - static_cast<long>(db));
    return dyadic(scaled_round(x, shift, up), shift);
}

}  // namespace

Rational round_up(const Rational& x, unsigned bits)
{
    return round_dir(x, bits, true);
}

Rational round_down(const Rational& x, unsigned bits)
{
    return round_dir(x, bits, false);
}

}  // namespace efm
