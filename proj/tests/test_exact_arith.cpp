#include "derivpoly/exact_arith.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace derivpoly;

TEST_CASE("binomial matches Pascal's triangle")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 3) == 35);
    for (int n = 0; n <= 30; ++n) {
        CHECK(binomial(n, 0) == 1);
        for (int k = -1; k <= n + 1; ++k)
            CHECK(binomial(n, k) == oracle::pascal_binomial(n, k));
    }
    CHECK_THROWS_AS(binomial(-1, 0), UsageError);
}

TEST_CASE("factorial matches iterated multiplication")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == Integer("479001600"));
    for (int n = 0; n <= 40; ++n)
        CHECK(factorial(n) == oracle::iterated_factorial(n));
    CHECK_THROWS_AS(factorial(-3), UsageError);
}

TEST_CASE("rational arithmetic examples")
{
    CHECK(Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(3)) == Rational(Integer(5), Integer(6)));
    const Rational half(Integer(2), Integer(4));
    CHECK(half.numerator() == 1);
    CHECK(half.denominator() == 2);
    CHECK(pow(Rational(Integer(-1), Integer(6)), 2) == Rational(Integer(1), Integer(36)));
    CHECK(pow(Rational(Integer(2), Integer(3)), -2) == Rational(Integer(9), Integer(4)));
    CHECK(pow(Rational(5), 0) == 1);
    CHECK(Rational(Integer(3), Integer(-6)).to_string() == "-1/2");
    CHECK(Rational(Integer(0), Integer(-7)).to_string() == "0");
    CHECK(Rational(Integer(8), Integer(4)).to_string() == "2");
}

TEST_CASE("rational errors")
{
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("parse accepts canonical and uncanonical input")
{
    CHECK(Rational::parse("3") == 3);
    CHECK(Rational::parse("-1/2") == Rational(Integer(-1), Integer(2)));
    CHECK(Rational::parse("+4/6") == Rational(Integer(2), Integer(3)));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed input")
{
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "1//2", "a", "1.5", " 1", "1/2/3", "--1", "-"})
        CHECK_THROWS_AS(Rational::parse(bad), UsageError);
}

TEST_CASE("field axioms and ordering hold on random rationals")
{
    std::mt19937_64 rng(20261017);
    for (int iter = 0; iter < 500; ++iter) {
        const Rational x = oracle::random_rational(rng), y = oracle::random_rational(rng),
                       z = oracle::random_rational(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == 0);
        CHECK(-(-x) == x);
        if (!y.is_zero())
            CHECK((x / y) * y == x);
        CHECK(Rational::parse(x.to_string()) == x);
        CHECK(x.denominator() > 0);
        CHECK(gcd(x.numerator(), x.denominator()) == 1);
        CHECK(((x < y) == (x.to_double() < y.to_double()) || x.to_double() == y.to_double()));
        CHECK((x <=> y) == (0 <=> (y - x).sign()));
    }
}
