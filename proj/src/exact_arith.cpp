#include "derivpoly/exact_arith.hpp"

#include <cctype>

namespace derivpoly {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& v) : value_(v)
{
    if (value_.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_decimal_integer(num))
        throw UsageError("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const std::string_view den = text.substr(slash + 1);
    if (den.empty() || den.front() == '+' || den.front() == '-' || !is_decimal_integer(den))
        throw UsageError("malformed rational '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0)
        throw UsageError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational pow(const Rational& x, int e)
{
    if (e < 0) {
        if (x.is_zero())
            throw std::domain_error("zero raised to a negative power");
        return Rational(1) / pow(x, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

Integer binomial(long n, long k)
{
    if (n < 0)
        throw UsageError("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n)
{
    if (n < 0)
        throw UsageError("factorial: negative n");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

std::string to_string(const Integer& v) { return v.get_str(); }

} // namespace derivpoly
