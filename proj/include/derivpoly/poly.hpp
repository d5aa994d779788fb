#pragma once

#include "derivpoly/exact_arith.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace derivpoly {

/// Dense univariate polynomial over Rational, lowest degree first. The
/// coefficient vector never carries a trailing zero; the zero polynomial is
/// the empty vector with degree -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coefficients);

    /// c * var^degree
    static Poly monomial(const Rational& c, int degree);
    /// var - root
    static Poly linear_root(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of var^i; zero outside the stored range.
    Rational coeff(int i) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form, highest degree first, e.g. "2u^3 - 3u^2 + u".
    std::string to_string(char var = 'u') const;
    /// Coefficient strings, lowest degree first.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, int e);

Rational poly_eval(const Poly& p, const Rational& x);

/// Exact signed integral of p over [a, b]; swapping a and b negates it.
Rational poly_definite_integral(const Poly& p, const Rational& a, const Rational& b);

/// Quotient of p / q when the Euclidean remainder is exactly zero, otherwise
/// nullopt. Throws std::domain_error when q is the zero polynomial.
std::optional<Poly> poly_exact_div(const Poly& p, const Poly& q);

/// True when every coefficient is an integer.
bool has_integer_coefficients(const Poly& p);

} // namespace derivpoly
