#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace derivpoly {

/// Raised for caller mistakes: out-of-domain indices, malformed parameters.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Integer = mpz_class;

/// Arbitrary-precision fraction, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v);

    /// Accepts "p", "p/q", with an optional leading sign on p. Throws
    /// UsageError on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class value_;
};

/// x^e for any integer e; negative exponents require x != 0.
Rational pow(const Rational& x, int e);

/// C(n, k); zero when k < 0 or k > n. Negative n is a usage error.
Integer binomial(long n, long k);

Integer factorial(long n);

std::string to_string(const Integer& v);

} // namespace derivpoly
