#pragma once

#include "derivpoly/exact_arith.hpp"
#include "derivpoly/kernels.hpp"
#include "derivpoly/poly.hpp"

#include <concepts>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace derivpoly {

/// The two coefficient rings a Series may carry.
template <class R>
concept CoefficientRing = std::same_as<R, Rational> || std::same_as<R, Poly>;

/// Raised when series of different truncation orders are combined.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truncated power series c_0 + c_1 t + ... + c_N t^N. Exactly N+1
/// coefficients are stored; products drop everything above t^N.
template <CoefficientRing Ring>
class Series {
public:
    explicit Series(int order) : order_(order), coeffs_(checked_size(order)) {}

    Series(int order, std::vector<Ring> coefficients) : order_(order), coeffs_(std::move(coefficients))
    {
        if (coeffs_.size() > checked_size(order))
            throw UsageError("series: more coefficients than order + 1");
        coeffs_.resize(checked_size(order));
    }

    static Series constant(const Ring& c, int order)
    {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    int order() const { return order_; }
    const Ring& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
    Ring& operator[](int n) { return coeffs_.at(static_cast<size_t>(n)); }
    std::span<const Ring> coefficients() const { return coeffs_; }

    Series& operator+=(const Series& o)
    {
        require_same_order(o);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    Series& operator-=(const Series& o)
    {
        require_same_order(o);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    Series& operator*=(const Rational& c)
    {
        for (auto& x : coeffs_)
            x *= c;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b)
    {
        a.require_same_order(b);
        return Series(a.order_, kernels::convolve_truncated<Ring>(a.coeffs_, b.coeffs_));
    }

    /// Serial reference for operator*.
    friend Series mul_serial(const Series& a, const Series& b)
    {
        a.require_same_order(b);
        return Series(a.order_, kernels::convolve_truncated_serial<Ring>(a.coeffs_, b.coeffs_));
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    static size_t checked_size(int order)
    {
        if (order < 0)
            throw UsageError("series order must be >= 0");
        return static_cast<size_t>(order) + 1;
    }

    void require_same_order(const Series& o) const
    {
        if (o.order_ != order_)
            throw OrderMismatch("series orders differ: " + std::to_string(order_) + " vs " +
                                std::to_string(o.order_));
    }

    int order_;
    std::vector<Ring> coeffs_;
};

template <CoefficientRing Ring>
Series<Ring> series_add(const Series<Ring>& a, const Series<Ring>& b)
{
    return a + b;
}

template <CoefficientRing Ring>
Series<Ring> series_mul(const Series<Ring>& a, const Series<Ring>& b)
{
    return a * b;
}

/// Coefficient-wise product with a ring element: (c s)_n = s_n * c.
template <CoefficientRing Ring>
Series<Ring> scaled(Series<Ring> s, const Ring& c)
{
    for (int n = 0; n <= s.order(); ++n)
        s[n] = s[n] * c;
    return s;
}

/// exp(l * t) truncated at t^order: coefficient n is l^n / n!.
template <CoefficientRing Ring>
Series<Ring> series_exp_linear(const Ring& l, int order)
{
    Series<Ring> s(order);
    Ring power = Ring(1);
    Integer fact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            power = power * l;
            fact *= n;
        }
        s[n] = power * Rational(Integer(1), fact);
    }
    return s;
}

/// Exponential generating series sum_{n<=order} values[n] t^n / n!.
template <CoefficientRing Ring>
Series<Ring> egf_series(std::span<const Ring> values, int order)
{
    if (static_cast<int>(values.size()) < order + 1)
        throw UsageError("egf_series: fewer values than order + 1");
    Series<Ring> s(order);
    Integer fact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            fact *= n;
        s[n] = values[static_cast<size_t>(n)] * Rational(Integer(1), fact);
    }
    return s;
}

} // namespace derivpoly
