#include "derivpoly/special_numbers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace derivpoly;

namespace {
Rational q(long p, long r) { return Rational(Integer(p), Integer(r)); }
} // namespace

TEST_CASE("Eulerian numbers against permutation ascent counts")
{
    CHECK(eulerian(3, 0) == 1);
    CHECK(eulerian(3, 1) == 4);
    CHECK(eulerian(3, 2) == 1);
    CHECK(eulerian(5, 2) == 66);
    for (int n = 1; n <= 8; ++n) {
        const auto brute = oracle::eulerian_row_brute(n);
        for (int k = 0; k < n; ++k)
            CHECK(eulerian(n, k) == brute[k]);
    }
    for (int n = 1; n <= 12; ++n)
        CHECK(eulerian(n, n - 1) == 1);
}

TEST_CASE("Eulerian explicit formula")
{
    CHECK(eulerian_explicit(3, 1) == 4);
    CHECK(eulerian_explicit(6, 3) == 302);
    CHECK(eulerian_explicit(7, 3) == 2416);
    for (int n = 1; n <= 15; ++n) {
        CHECK(eulerian_explicit(n, 0) == 1);
        for (int k = 0; k < n; ++k)
            CHECK(eulerian_explicit(n, k) == eulerian(n, k));
    }
}

TEST_CASE("Eulerian triangle invariants")
{
    const Triangle t = build_eulerian_triangle(14);
    CHECK(t.kind() == TriangleKind::Eulerian);
    CHECK(t.n_max() == 14);
    for (int n = 1; n <= 14; ++n) {
        Integer sum = 0;
        for (int k = 0; k < n; ++k) {
            CHECK(t.at(n, k) == t.at(n, n - 1 - k));
            sum += t.at(n, k);
        }
        CHECK(sum == factorial(n));
        CHECK(t.at(n, -1) == 0);
        CHECK(t.at(n, n) == 0);
    }
}

TEST_CASE("MacMahon numbers against signed-permutation descents")
{
    CHECK(build_macmahon_triangle(4).row(1) == std::vector<Integer>{1});
    CHECK(build_macmahon_triangle(4).row(2) == std::vector<Integer>{1, 1});
    CHECK(build_macmahon_triangle(4).row(3) == std::vector<Integer>{1, 6, 1});
    CHECK(build_macmahon_triangle(4).row(4) == std::vector<Integer>{1, 23, 23, 1});
    for (int m = 0; m <= 6; ++m) {
        const auto brute = oracle::macmahon_row_brute(m);
        for (int k = 1; k <= m + 1; ++k)
            CHECK(macmahon(m + 1, k) == brute[k - 1]);
    }
}

TEST_CASE("MacMahon triangle invariants")
{
    const Triangle t = build_macmahon_triangle(14);
    for (int n = 1; n <= 14; ++n) {
        CHECK(macmahon(n, 1) == 1);
        Integer sum = 0;
        for (int k = 1; k <= n; ++k) {
            CHECK(t.at(n, k) == t.at(n, n + 1 - k));
            sum += t.at(n, k);
        }
        // Row n counts the signed permutations of n-1 letters.
        CHECK(sum == factorial(n - 1) * (Integer(1) << (n - 1)));
    }
}

TEST_CASE("Bernoulli numbers against Akiyama-Tanigawa")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == q(-1, 2));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == q(-691, 2730));
    const auto reference = oracle::bernoulli_akiyama_tanigawa(30);
    const BernoulliCache cache = bernoulli_numbers(30);
    CHECK(cache.max_index() == 30);
    for (int n = 0; n <= 30; ++n) {
        CHECK(cache[n] == reference[n]);
        CHECK(bernoulli(n) == reference[n]);
        if (n >= 3 && n % 2 == 1)
            CHECK(cache[n] == 0);
    }
}

TEST_CASE("Bernoulli polynomials")
{
    CHECK(bernoulli_poly(0) == Poly(1));
    CHECK(bernoulli_poly(1) == Poly(std::vector<Rational>{q(-1, 2), 1}));
    CHECK(bernoulli_value(2, q(1, 2)) == q(-1, 12));
    for (int n = 0; n <= 16; ++n) {
        CHECK(bernoulli_value(n, 0) == bernoulli(n));
        // B_n'(x) = n B_{n-1}(x) and B_n(1-x) = (-1)^n B_n(x)
        if (n >= 1) {
            CHECK(bernoulli_poly(n).derivative() == bernoulli_poly(n - 1) * Rational(n));
        }
        Rational sign = n % 2 == 0 ? 1 : -1;
        CHECK(bernoulli_value(n, q(2, 7)) * sign == bernoulli_value(n, Rational(1) - q(2, 7)));
    }
}

TEST_CASE("Bernoulli addition formula on random arguments")
{
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = iter % 10;
        const Rational x = oracle::random_rational(rng), h = oracle::random_rational(rng);
        Rational rhs;
        for (int k = 0; k <= n; ++k)
            rhs += Rational(binomial(n, k)) * bernoulli_value(k, x) * pow(h, n - k);
        CHECK(bernoulli_value(n, x + h) == rhs);
    }
}

TEST_CASE("usage errors")
{
    CHECK_THROWS_AS(bernoulli(-1), UsageError);
    CHECK_THROWS_AS(bernoulli_poly(-1), UsageError);
    CHECK_THROWS_AS(build_eulerian_triangle(0), UsageError);
}
