#pragma once

#include "derivpoly/exact_arith.hpp"
#include "derivpoly/poly.hpp"

#include <string_view>
#include <vector>

namespace derivpoly {

enum class TriangleKind { Eulerian, MacMahon };

std::string_view to_string(TriangleKind kind);

/// Exact integer triangle. Eulerian rows are indexed k = 0..n-1, MacMahon
/// rows k = 1..n; lookups outside the support return 0.
class Triangle {
public:
    Triangle(TriangleKind kind, std::vector<std::vector<Integer>> rows);

    TriangleKind kind() const { return kind_; }
    /// Number of stored rows (rows 1..n_max).
    int n_max() const { return static_cast<int>(rows_.size()); }
    /// Row n as stored, n in 1..n_max.
    const std::vector<Integer>& row(int n) const;
    Integer at(int n, int k) const;

private:
    TriangleKind kind_;
    std::vector<std::vector<Integer>> rows_;
};

/// Eulerian numbers <n,k> for n = 1..n_max by the ascent recurrence.
Triangle build_eulerian_triangle(int n_max);

/// MacMahon numbers M_{n,k} for n = 1..n_max.
Triangle build_macmahon_triangle(int n_max);

/// <n,k> from a shared memoized triangle; 0 outside 0 <= k <= n-1.
Integer eulerian(int n, int k);

/// Alternating binomial sum sum_{j<=k} (-1)^j C(n+1,j) (k-j+1)^n.
Integer eulerian_explicit(int n, int k);

/// M_{n,k} from a shared memoized triangle; 0 outside 1 <= k <= n.
Integer macmahon(int n, int k);

/// B_0..B_N with the B_1 = -1/2 convention.
class BernoulliCache {
public:
    explicit BernoulliCache(std::vector<Rational> values) : values_(std::move(values)) {}
    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    const Rational& operator[](int n) const { return values_.at(static_cast<size_t>(n)); }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
};

/// Inverts (sum B_n t^n/n!) * ((e^t - 1)/t) = 1 term by term.
BernoulliCache bernoulli_numbers(int n_max);

/// B_n from a shared memoized cache.
Rational bernoulli(int n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Poly bernoulli_poly(int n);

Rational bernoulli_value(int n, const Rational& x);

} // namespace derivpoly
