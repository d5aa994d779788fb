#include "derivpoly/derivative_polys.hpp"

#include "derivpoly/special_numbers.hpp"

#include <vector>

namespace derivpoly {

namespace {

std::vector<Poly> powers(const Poly& base, int max_exp)
{
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(max_exp) + 1);
    out.emplace_back(1);
    for (int e = 1; e <= max_exp; ++e)
        out.push_back(out.back() * base);
    return out;
}

void require_non_negative(int n, const char* what)
{
    if (n < 0)
        throw UsageError(std::string(what) + ": n must be >= 0");
}

} // namespace

RiccatiParams::RiccatiParams(Rational r, Rational a, Rational b)
    : r_(std::move(r)), a_(std::move(a)), b_(std::move(b))
{
    if (r_.is_zero())
        throw UsageError("Riccati parameter r must be nonzero");
    if (a_ == b_)
        throw UsageError("Riccati parameters a and b must differ");
}

LogisticInstance logistic_instance(const Rational& q, const Rational& p, const Rational& s)
{
    if (!(p > Rational(1)) || !(q > Rational(0)) || !(s > Rational(0)))
        throw UsageError("logistic instance needs p > 1, q > 0, s > 0");
    // u' = (s/q)(q - u)u = -(s/q)(u - q)(u - 0)
    RiccatiParams params(-s / q, q, Rational(0));
    const Rational at_zero = q / (Rational(1) + p);
    return {params, at_zero, at_zero};
}

Poly build_P(int n, const RiccatiParams& params)
{
    if (n < 1)
        throw UsageError("build_P: n must be >= 1");
    const Poly ua = Poly::linear_root(params.a());
    if (n == 1)
        return ua;
    const Poly ub = Poly::linear_root(params.b());
    const auto pa = powers(ua, n);
    const auto pb = powers(ub, n);
    Poly sum;
    for (int k = 0; k <= n - 2; ++k) {
        const Rational coefficient(eulerian(n - 1, k));
        sum += (pa[static_cast<size_t>(k + 1)] * pb[static_cast<size_t>(n - 1 - k)]) * coefficient;
    }
    return sum;
}

Poly build_Q(int n, const RiccatiParams& params)
{
    require_non_negative(n, "build_Q");
    const auto pa = powers(Poly::linear_root(params.a()), n);
    const auto pb = powers(Poly::linear_root(params.b()), n);
    Poly sum;
    for (int k = 1; k <= n + 1; ++k) {
        const Rational coefficient(macmahon(n + 1, k));
        sum += (pa[static_cast<size_t>(n + 1 - k)] * pb[static_cast<size_t>(k - 1)]) * coefficient;
    }
    return sum;
}

Poly build_S(int n, const ShiftedParams& params)
{
    require_non_negative(n, "build_S");
    const Rational two_d = Rational(2) * params.d;
    Poly sum;
    Rational shift_power(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            shift_power *= two_d;
        if (shift_power.is_zero())
            break;
        sum += build_Q(n - k, params.base) * (Rational(binomial(n, k)) * shift_power);
    }
    return sum;
}

Poly build_E(int n)
{
    require_non_negative(n, "build_E");
    if (n == 0)
        return Poly(1);
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n - 1; ++k)
        c[static_cast<size_t>(k + 1)] = Rational(eulerian(n, k));
    return Poly(std::move(c));
}

Poly build_A(int n)
{
    require_non_negative(n, "build_A");
    if (n == 0)
        return Poly(1);
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int k = 0; k <= n - 1; ++k)
        c[static_cast<size_t>(k)] = Rational(eulerian(n, k));
    return Poly(std::move(c));
}

Poly build_M(int n)
{
    require_non_negative(n, "build_M");
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 1; k <= n + 1; ++k)
        c[static_cast<size_t>(k - 1)] = Rational(macmahon(n + 1, k));
    return Poly(std::move(c));
}

} // namespace derivpoly
