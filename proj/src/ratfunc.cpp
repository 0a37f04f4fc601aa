#include "efm/ratfunc.hpp"

#include <cctype>

namespace efm {

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "rational function with zero denominator");
    }
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = RatPoly(Rational(1));
        return;
    }
    const RatPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::dilate(const Rational& c) const
{
    return RatFunc(num_.dilate(c), den_.dilate(c));
}

Rational RatFunc::evaluate(const Rational& x) const
{
    const Rational d = den_.evaluate(x);
    if (d == 0) {
        throw Error(ErrorCode::InvalidArgument, "evaluation at a pole " + to_string(x));
    }
    return num_.evaluate(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
    } else {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "division by the zero rational function");
    }
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

namespace {

bool single_term(const RatPoly& p)
{
    int nonzero = 0;
    for (const auto& c : p.coefficients()) {
        if (c != 0) ++nonzero;
    }
    if (nonzero != 1) return false;
    // a lone negative or fractional constant still needs grouping
    const Rational lead = p.leading();
    return lead > 0 && (p.degree() == 0 ? is_integer(lead) : lead == 1);
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse()
    {
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::Parse, what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr()
    {
        RatFunc v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    RatFunc term()
    {
        RatFunc v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power()
    {
        RatFunc base = primary();
        if (!accept('^')) return base;
        skip();
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
        RatFunc out(Rational(1));
        for (unsigned long i = 0; i < e; ++i) out *= base;
        if (negative) {
            if (out.is_zero()) fail("zero raised to a negative power");
            out = RatFunc(Rational(1)) / out;
        }
        return out;
    }

    RatFunc primary()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return RatFunc(RatPoly::z());
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            try {
                return RatFunc(parse_rational(s_.substr(start, pos_ - start)));
            } catch (const Error&) {
                pos_ = start;
                fail("malformed number");
            }
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const RatFunc& f)
{
    const std::string n = to_string(f.num());
    if (f.is_polynomial()) return n;
    const std::string d = to_string(f.den());
    const bool nsimple = single_term(f.num()) || (f.num().degree() == 0 && f.num().leading() < 0 && is_integer(f.num().leading()));
    const std::string ns = nsimple ? n : "(" + n + ")";
    const std::string ds = single_term(f.den()) ? d : "(" + d + ")";
    return ns + "/" + ds;
}

}  // namespace efm
