#include "derivpoly/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace derivpoly {

Poly::Poly(const Rational& c)
{
    if (!c.is_zero())
        coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree)
{
    if (degree < 0)
        throw UsageError("monomial with negative degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& root) { return Poly({-root, Rational(1)}); }

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return {};
    return coeffs_[static_cast<size_t>(i)];
}

Rational Poly::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const
{
    if (coeffs_.empty())
        return {};
    std::vector<Rational> v(coeffs_.size() + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

std::string Poly::to_string(char var) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit)
            out += mag.to_string();
        if (i >= 1)
            out += var;
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<std::string> Poly::coefficient_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.to_string());
    if (out.empty())
        out.emplace_back("0");
    return out;
}

Poly pow(const Poly& p, int e)
{
    if (e < 0)
        throw UsageError("polynomial power with negative exponent");
    Poly result(1);
    Poly base = p;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }

Rational poly_definite_integral(const Poly& p, const Rational& a, const Rational& b)
{
    const Poly anti = p.antiderivative();
    return anti.eval(b) - anti.eval(a);
}

std::optional<Poly> poly_exact_div(const Poly& p, const Poly& q)
{
    if (q.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (p.is_zero())
        return Poly{};
    if (p.degree() < q.degree())
        return std::nullopt;

    std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
    const auto qc = q.coefficients();
    const int dq = q.degree();
    const Rational lead = qc.back();
    std::vector<Rational> quot(static_cast<size_t>(p.degree() - dq) + 1);

    for (int k = p.degree() - dq; k >= 0; --k) {
        const Rational t = rem[static_cast<size_t>(k + dq)] / lead;
        quot[static_cast<size_t>(k)] = t;
        if (t.is_zero())
            continue;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<size_t>(k + j)] -= t * qc[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            return std::nullopt;
    return Poly(std::move(quot));
}

bool has_integer_coefficients(const Poly& p)
{
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational& c) { return c.is_integer(); });
}

} // namespace derivpoly
