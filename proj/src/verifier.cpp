#include "derivpoly/verifier.hpp"

#include "derivpoly/quadrature.hpp"
#include "derivpoly/special_numbers.hpp"

#include <cmath>
#include <cstdio>

namespace derivpoly {

namespace {

const Rational kHalf(Integer(1), Integer(2));

std::string str(const Rational& q) { return q.to_string(); }
std::string str(const Poly& p) { return p.to_string(); }

std::string str(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class VerdictBuilder {
public:
    VerdictBuilder(std::string identity, std::vector<VerdictParam> params)
    {
        v_.identity = std::move(identity);
        v_.params = std::move(params);
    }

    template <class T>
    void compare(int index, const T& lhs, const T& rhs)
    {
        if (!(lhs == rhs))
            fail(index, str(lhs), str(rhs));
    }

    void fail(int index, std::string lhs, std::string rhs)
    {
        if (v_.status != Status::Pass)
            return;
        v_.status = Status::Fail;
        v_.first_failure = index;
        v_.witness = Witness{std::move(lhs), std::move(rhs)};
    }

    void inconclusive(std::string lhs, std::string rhs)
    {
        v_.status = Status::Inconclusive;
        v_.witness = Witness{std::move(lhs), std::move(rhs)};
    }

    Verdict finish() { return std::move(v_); }

private:
    Verdict v_;
};

RiccatiParams unit_params() { return RiccatiParams(1, 0, 1); }

RiccatiParams interval(const Rational& a, const Rational& b) { return RiccatiParams(1, a, b); }

Rational fact(int n) { return Rational(factorial(n)); }

Rational two_pow(int e) { return pow(Rational(2), e); }

std::vector<VerdictParam> instance_params(const OracleInstance& inst, int n_max, bool with_v, bool with_d)
{
    const auto& base = inst.params.base;
    std::vector<VerdictParam> p{VerdictParam::of("r", base.r()), VerdictParam::of("a", base.a()),
                                VerdictParam::of("b", base.b())};
    if (with_d)
        p.push_back(VerdictParam::of("d", inst.params.d));
    p.push_back(VerdictParam::of("u0", inst.u0));
    if (with_v)
        p.push_back(VerdictParam::of("v0", inst.v0));
    p.push_back(VerdictParam::of("N", n_max));
    return p;
}

void require_within_order(const OracleInstance& inst, int n_max)
{
    inst.validate();
    if (n_max < 1 || n_max > inst.order)
        throw UsageError("check bound N must satisfy 1 <= N <= order");
}

void require_unit_interior(const Rational& u0)
{
    if (!(u0 > Rational(0)) || !(u0 < Rational(1)))
        throw UsageError("closed-form checks need 0 < u0 < 1");
}

Series<Poly> egf_of(std::vector<Poly> values, int order) { return egf_series<Poly>(values, order); }

Series<Rational> egf_of(std::vector<Rational> values, int order) { return egf_series<Rational>(values, order); }

template <CoefficientRing Ring>
void compare_through(VerdictBuilder& vb, const Series<Ring>& lhs, const Series<Ring>& rhs, int last)
{
    for (int n = 0; n <= last; ++n)
        vb.compare(n, lhs[n], rhs[n]);
}

const Poly kX = Poly::monomial(1, 1);
const Poly kOneMinusX({Rational(1), Rational(-1)});
const Poly kXMinusOne({Rational(-1), Rational(1)});

} // namespace

void OracleInstance::validate() const
{
    if (v0.is_zero())
        throw UsageError("oracle instance needs v0 != 0");
    if (order < 1)
        throw UsageError("oracle instance needs order >= 1");
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Inconclusive:
        return "inconclusive";
    }
    return "fail";
}

bool verdict_less(const Verdict& a, const Verdict& b)
{
    if (a.identity != b.identity)
        return a.identity < b.identity;
    const size_t n = std::min(a.params.size(), b.params.size());
    for (size_t i = 0; i < n; ++i) {
        const auto& pa = a.params[i];
        const auto& pb = b.params[i];
        if (pa.key != pb.key)
            return pa.key < pb.key;
        if (pa.numeric && pb.numeric) {
            if (*pa.numeric != *pb.numeric)
                return *pa.numeric < *pb.numeric;
        } else if (pa.value != pb.value) {
            return pa.value < pb.value;
        }
    }
    return a.params.size() < b.params.size();
}

Series<Rational> riccati_series(const OracleInstance& inst)
{
    inst.validate();
    const auto& p = inst.params.base;
    const int order = inst.order;
    Series<Rational> c(order);
    // Coefficients of (u - a) and (u - b) share everything but the constant term.
    std::vector<Rational> ua(static_cast<size_t>(order) + 1), ub(ua.size());
    c[0] = inst.u0;
    ua[0] = inst.u0 - p.a();
    ub[0] = inst.u0 - p.b();
    for (int n = 0; n < order; ++n) {
        Rational conv;
        for (int i = 0; i <= n; ++i)
            conv += ua[static_cast<size_t>(i)] * ub[static_cast<size_t>(n - i)];
        const Rational next = p.r() * conv / Rational(n + 1);
        c[n + 1] = next;
        ua[static_cast<size_t>(n + 1)] = next;
        ub[static_cast<size_t>(n + 1)] = next;
    }
    return c;
}

Series<Rational> v_series(const OracleInstance& inst)
{
    const Series<Rational> u = riccati_series(inst);
    const auto& p = inst.params.base;
    const int order = inst.order;
    std::vector<Rational> shift(u.coefficients().begin(), u.coefficients().end());
    shift[0] = inst.u0 - p.midpoint() + inst.params.d;
    Series<Rational> w(order);
    w[0] = inst.v0;
    for (int n = 0; n < order; ++n) {
        Rational conv;
        for (int i = 0; i <= n; ++i)
            conv += w[i] * shift[static_cast<size_t>(n - i)];
        w[n + 1] = p.r() * conv / Rational(n + 1);
    }
    return w;
}

Verdict check_theorem1(const OracleInstance& inst, int n_max)
{
    require_within_order(inst, n_max);
    VerdictBuilder vb("theorem1", instance_params(inst, n_max, false, false));
    const auto c = riccati_series(inst);
    const auto& p = inst.params.base;
    for (int n = 1; n <= n_max; ++n)
        vb.compare(n, fact(n) * c[n], pow(p.r(), n) * build_P(n + 1, p).eval(inst.u0));
    return vb.finish();
}

Verdict check_theorem2(const OracleInstance& inst, int n_max)
{
    require_within_order(inst, n_max);
    if (!inst.params.d.is_zero())
        throw UsageError("theorem2 applies to d = 0; use theorem3 for shifted instances");
    VerdictBuilder vb("theorem2", instance_params(inst, n_max, true, false));
    const auto w = v_series(inst);
    const auto& p = inst.params.base;
    const Rational half_r = p.r() * kHalf;
    for (int n = 1; n <= n_max; ++n)
        vb.compare(n, fact(n) * w[n], inst.v0 * pow(half_r, n) * build_Q(n, p).eval(inst.u0));
    return vb.finish();
}

Verdict check_theorem3(const OracleInstance& inst, int n_max)
{
    require_within_order(inst, n_max);
    VerdictBuilder vb("theorem3", instance_params(inst, n_max, true, true));
    const auto w = v_series(inst);
    const Rational half_r = inst.params.base.r() * kHalf;
    for (int n = 1; n <= n_max; ++n)
        vb.compare(n, fact(n) * w[n], inst.v0 * pow(half_r, n) * build_S(n, inst.params).eval(inst.u0));
    return vb.finish();
}

Verdict check_egf_eulerian(int n_max)
{
    if (n_max < 1)
        throw UsageError("egf checks need N >= 1");
    VerdictBuilder vb("egf_eulerian", {VerdictParam::of("N", n_max)});
    std::vector<Poly> e;
    for (int n = 0; n <= n_max; ++n)
        e.push_back(build_E(n));
    const auto lhs = egf_of(std::move(e), n_max) *
                     (Series<Poly>::constant(Poly(1), n_max) - scaled(series_exp_linear(kOneMinusX, n_max), kX));
    compare_through(vb, lhs, Series<Poly>::constant(kOneMinusX, n_max), n_max - 1);
    return vb.finish();
}

Verdict check_egf_A(int n_max)
{
    if (n_max < 1)
        throw UsageError("egf checks need N >= 1");
    VerdictBuilder vb("egf_A", {VerdictParam::of("N", n_max)});
    std::vector<Poly> a;
    for (int n = 0; n <= n_max; ++n)
        a.push_back(build_A(n));
    const auto lhs = egf_of(std::move(a), n_max) *
                     (Series<Poly>::constant(kX, n_max) - series_exp_linear(kXMinusOne, n_max));
    compare_through(vb, lhs, Series<Poly>::constant(kXMinusOne, n_max), n_max - 1);
    return vb.finish();
}

namespace {

// (sum M_n (sy)^n/n!) (1 - x e^{denom_rate (1-x) y}) = (1 - x) e^{s (1-x) y}
Verdict macmahon_egf(const char* identity, int n_max, const Rational& y_scale, const Rational& denom_rate)
{
    if (n_max < 1)
        throw UsageError("egf checks need N >= 1");
    VerdictBuilder vb(identity, {VerdictParam::of("N", n_max)});
    std::vector<Poly> m;
    Rational scale(1);
    for (int n = 0; n <= n_max; ++n) {
        m.push_back(build_M(n) * scale);
        scale *= y_scale;
    }
    const auto growth = series_exp_linear(kOneMinusX * y_scale, n_max);
    const auto denom = Series<Poly>::constant(Poly(1), n_max) -
                       scaled(series_exp_linear(kOneMinusX * denom_rate, n_max), kX);
    const auto lhs = egf_of(std::move(m), n_max) * denom;
    compare_through(vb, lhs, scaled(growth, kOneMinusX), n_max - 1);
    return vb.finish();
}

} // namespace

Verdict check_egf_macmahon(int n_max) { return macmahon_egf("egf_macmahon", n_max, Rational(1), Rational(2)); }

Verdict check_egf_macmahon_halved(int n_max) { return macmahon_egf("egf_macmahon_halved", n_max, kHalf, Rational(1)); }

Verdict check_egf_macmahon_equal_rate(int n_max)
{
    return macmahon_egf("egf_macmahon_equal_rate", n_max, Rational(1), Rational(1));
}

Verdict check_egf_macmahon_halved_equal_rate(int n_max)
{
    return macmahon_egf("egf_macmahon_halved_equal_rate", n_max, kHalf, kHalf);
}

Verdict check_F_closed_form(const Rational& u0, int n_max)
{
    require_unit_interior(u0);
    if (n_max < 1)
        throw UsageError("closed-form checks need N >= 1");
    VerdictBuilder vb("F_closed_form", {VerdictParam::of("u0", u0), VerdictParam::of("N", n_max)});
    const auto p = unit_params();
    std::vector<Rational> vals;
    for (int n = 0; n <= n_max; ++n)
        vals.push_back(build_P(n + 1, p).eval(u0));
    const auto denom = Series<Rational>::constant(u0, n_max) + series_exp_linear(Rational(1), n_max) * (Rational(1) - u0);
    const auto lhs = egf_of(std::move(vals), n_max) * denom;
    compare_through(vb, lhs, Series<Rational>::constant(u0, n_max), n_max - 1);
    return vb.finish();
}

Verdict check_H_closed_form(const Rational& u0, const Rational& d, int n_max)
{
    require_unit_interior(u0);
    if (n_max < 1)
        throw UsageError("closed-form checks need N >= 1");
    VerdictBuilder vb("H_closed_form",
                      {VerdictParam::of("u0", u0), VerdictParam::of("d", d), VerdictParam::of("N", n_max)});
    const ShiftedParams sp{unit_params(), d};
    std::vector<Rational> vals;
    for (int n = 0; n <= n_max; ++n)
        vals.push_back(build_S(n, sp).eval(u0) / two_pow(n));
    const auto denom = Series<Rational>::constant(u0, n_max) + series_exp_linear(Rational(1), n_max) * (Rational(1) - u0);
    const auto lhs = egf_of(std::move(vals), n_max) * denom;
    compare_through(vb, lhs, series_exp_linear(kHalf + d, n_max), n_max - 1);
    return vb.finish();
}

Verdict check_F_H_relation(const Rational& u0, int n_max)
{
    require_unit_interior(u0);
    VerdictBuilder vb("F_H_relation", {VerdictParam::of("u0", u0), VerdictParam::of("N", n_max)});
    const auto p = unit_params();
    const ShiftedParams sp{p, -kHalf};
    for (int n = 0; n < n_max; ++n)
        vb.compare(n, build_S(n, sp).eval(u0) / two_pow(n), build_P(n + 1, p).eval(u0) / u0);
    return vb.finish();
}

Verdict check_lemma1(int n)
{
    if (n < 1)
        throw UsageError("lemma1 needs n >= 1");
    VerdictBuilder vb("lemma1", {VerdictParam::of("n", n)});
    const auto p = unit_params();
    Poly sum;
    for (int k = 0; k <= n - 1; ++k)
        sum += build_P(k + 1, p) * Rational(binomial(n, k));
    vb.compare(n, build_P(n + 1, p), Poly::linear_root(1) * sum);
    return vb.finish();
}

Verdict check_classical(int n)
{
    if (n < 1)
        throw UsageError("classical needs n >= 1");
    VerdictBuilder vb("classical", {VerdictParam::of("n", n)});
    Poly e_rhs = build_E(1) * pow(kXMinusOne, n - 1);
    for (int k = 1; k <= n - 1; ++k)
        e_rhs += build_E(k) * pow(kXMinusOne, n - 1 - k) * Rational(binomial(n, k));
    vb.compare(n, build_E(n), e_rhs);

    Poly a_rhs;
    for (int k = 0; k <= n - 1; ++k)
        a_rhs += build_A(k) * pow(kXMinusOne, n - 1 - k) * Rational(binomial(n, k));
    vb.compare(n, build_A(n), a_rhs);
    return vb.finish();
}

Verdict check_eulerian_explicit(int n)
{
    if (n < 1)
        throw UsageError("eulerian_explicit needs n >= 1");
    VerdictBuilder vb("eulerian_explicit", {VerdictParam::of("n", n)});
    for (int k = 0; k <= n - 1; ++k)
        vb.compare(k, Rational(eulerian(n, k)), Rational(eulerian_explicit(n, k)));
    return vb.finish();
}

Verdict check_substitution_E(int n, const RiccatiParams& params, const std::vector<Rational>& samples)
{
    // At n = 0 the right side is (u-a)/(u-b) while E_0 = 1.
    if (n < 1)
        throw UsageError("substitution_E needs n >= 1");
    VerdictBuilder vb("substitution_E", {VerdictParam::of("n", n), VerdictParam::of("a", params.a()),
                                         VerdictParam::of("b", params.b())});
    const Poly e = build_E(n);
    const Poly p = build_P(n + 1, params);
    for (size_t i = 0; i < samples.size(); ++i) {
        const Rational& u = samples[i];
        if (u == params.b())
            throw UsageError("substitution sample must differ from b");
        const Rational denom = u - params.b();
        vb.compare(static_cast<int>(i), e.eval((u - params.a()) / denom), p.eval(u) / pow(denom, n + 1));
    }
    return vb.finish();
}

Verdict check_substitution_M(int n, const RiccatiParams& params, const std::vector<Rational>& samples)
{
    VerdictBuilder vb("substitution_M", {VerdictParam::of("n", n), VerdictParam::of("a", params.a()),
                                         VerdictParam::of("b", params.b())});
    const Poly m = build_M(n);
    const Poly q = build_Q(n, params);
    for (size_t i = 0; i < samples.size(); ++i) {
        const Rational& u = samples[i];
        if (u == params.b())
            throw UsageError("substitution sample must differ from b");
        const Rational denom = u - params.b();
        vb.compare(static_cast<int>(i), m.eval((u - params.a()) / denom), q.eval(u) / pow(denom, n));
    }
    return vb.finish();
}

Verdict check_homogeneity_Q(int n, const RiccatiParams& params, const Rational& lambda,
                            const std::vector<Rational>& samples)
{
    if (lambda.is_zero())
        throw UsageError("homogeneity needs lambda != 0");
    VerdictBuilder vb("homogeneity_Q", {VerdictParam::of("n", n), VerdictParam::of("a", params.a()),
                                        VerdictParam::of("b", params.b()), VerdictParam::of("lambda", lambda)});
    const Poly q = build_Q(n, params);
    const Poly q_scaled = build_Q(n, RiccatiParams(params.r(), lambda * params.a(), lambda * params.b()));
    for (size_t i = 0; i < samples.size(); ++i)
        vb.compare(static_cast<int>(i), q_scaled.eval(lambda * samples[i]), pow(lambda, n) * q.eval(samples[i]));
    return vb.finish();
}

Verdict check_integrality(int n)
{
    if (n < 0)
        throw UsageError("integrality needs n >= 0");
    VerdictBuilder vb("integrality", {VerdictParam::of("n", n)});
    const auto p = unit_params();
    const Poly s = build_S(n, ShiftedParams{p, -kHalf});
    const auto quotient = poly_exact_div(build_P(n + 1, p), Poly::monomial(1, 1));
    if (!quotient) {
        vb.fail(n, "P_{n+1}(u;0,1) mod u", "0");
        return vb.finish();
    }
    vb.compare(n, s, *quotient * two_pow(n));
    const Poly reduced = s * (Rational(1) / two_pow(n));
    if (!has_integer_coefficients(reduced))
        vb.fail(n, reduced.to_string(), "integer coefficients");
    return vb.finish();
}

Verdict check_integral_P(int n, const Rational& a, const Rational& b)
{
    VerdictBuilder vb("integral_P", {VerdictParam::of("n", n), VerdictParam::of("a", a), VerdictParam::of("b", b)});
    const Poly p = build_P(n, interval(a, b));
    vb.compare(n, poly_definite_integral(p, a, b), -pow(b - a, n + 1) * bernoulli(n));
    return vb.finish();
}

Verdict check_integral_Q(int n, const Rational& a, const Rational& b)
{
    VerdictBuilder vb("integral_Q", {VerdictParam::of("n", n), VerdictParam::of("a", a), VerdictParam::of("b", b)});
    const Poly q = build_Q(n, interval(a, b));
    vb.compare(n, poly_definite_integral(q, a, b), two_pow(n) * bernoulli_value(n, kHalf) * pow(b - a, n + 1));
    return vb.finish();
}

Verdict check_integral_S(int n, const Rational& a, const Rational& b, const Rational& d)
{
    if (n < 1)
        throw UsageError("integral_S needs n >= 1");
    VerdictBuilder vb("integral_S", {VerdictParam::of("n", n), VerdictParam::of("a", a), VerdictParam::of("b", b),
                                     VerdictParam::of("d", d)});
    const Poly s = build_S(n, ShiftedParams{interval(a, b), d});
    const Rational width = b - a;
    vb.compare(n, poly_definite_integral(s, a, b),
               two_pow(n) * pow(width, n + 1) * bernoulli_value(n, kHalf + d / width));
    return vb.finish();
}

Verdict check_integral_i3(int n)
{
    if (n < 1)
        throw UsageError("integral_i3 needs n >= 1");
    VerdictBuilder vb("integral_i3", {VerdictParam::of("n", n)});
    const Poly p = build_P(n, interval(-1, 1));
    const Rational sign_lhs = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational sign_rhs = n % 2 == 0 ? Rational(1) : Rational(-1);
    vb.compare(n, sign_lhs * poly_definite_integral(p, -1, 1), sign_rhs * two_pow(n + 1) * bernoulli(n));
    return vb.finish();
}

std::optional<Poly> grosset_veselov_reduced_integrand(int m)
{
    if (m < 1)
        throw UsageError("Grosset-Veselov needs m >= 1");
    const Poly p = build_P(m + 1, interval(-1, 1));
    return poly_exact_div(p * p, Poly({Rational(1), Rational(0), Rational(-1)}));
}

Verdict grosset_veselov_exact(int m)
{
    VerdictBuilder vb("grosset_veselov_exact", {VerdictParam::of("m", m)});
    const auto reduced = grosset_veselov_reduced_integrand(m);
    if (!reduced) {
        vb.fail(m, "P_{m+1}(u;-1,1)^2 mod (1-u^2)", "0");
        return vb.finish();
    }
    const Rational sign = (m - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    vb.compare(m, bernoulli(2 * m), sign * poly_definite_integral(*reduced, -1, 1) / two_pow(2 * m + 1));
    return vb.finish();
}

Verdict grosset_veselov_numeric(int m, double tol)
{
    if (m < 1 || m > 3)
        throw UsageError("numeric Grosset-Veselov supports 1 <= m <= 3");
    if (!(tol > 0.0))
        throw UsageError("numeric Grosset-Veselov needs tol > 0");
    char tol_text[32];
    std::snprintf(tol_text, sizeof tol_text, "%g", tol);
    VerdictBuilder vb("grosset_veselov_numeric", {VerdictParam::of("m", m), VerdictParam::text("tol", tol_text)});

    const Poly p = build_P(m + 1, interval(-1, 1));
    std::vector<double> c;
    for (const auto& q : p.coefficients())
        c.push_back(q.to_double());
    auto integrand = [&c](double x) {
        const double t = std::tanh(x);
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * t + *it;
        return acc * acc;
    };
    const Rational sign = (m - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    const double target = (sign * two_pow(2 * m + 1) * bernoulli(2 * m)).to_double();

    const QuadratureResult q = integrate_adaptive(integrand, -20.0, 20.0, tol / 10.0);
    if (!q.converged) {
        vb.inconclusive(str(q.value) + " (error estimate " + str(q.error_estimate) + ")", str(target));
        return vb.finish();
    }
    if (!(std::fabs(q.value - target) < tol))
        vb.fail(m, str(q.value), str(target));
    return vb.finish();
}

} // namespace derivpoly
