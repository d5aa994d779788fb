#pragma once

#include "derivpoly/derivative_polys.hpp"
#include "derivpoly/exact_arith.hpp"
#include "derivpoly/poly.hpp"
#include "derivpoly/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace derivpoly {

/// Initial data for the Riccati pair at z = 0, expanded to t^order.
struct OracleInstance {
    ShiftedParams params;
    Rational u0;
    Rational v0{1};
    int order = 16;

    /// Throws UsageError when v0 = 0 or order < 1.
    void validate() const;
};

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

/// One named parameter of a verdict. `numeric` drives canonical ordering;
/// parameters without a numeric value order by their text.
struct VerdictParam {
    std::string key;
    std::string value;
    std::optional<Rational> numeric;

    static VerdictParam of(std::string key, const Rational& v) { return {std::move(key), v.to_string(), v}; }
    static VerdictParam of(std::string key, int v) { return of(std::move(key), Rational(v)); }
    static VerdictParam text(std::string key, std::string v) { return {std::move(key), std::move(v), std::nullopt}; }
};

struct Witness {
    std::string lhs;
    std::string rhs;
};

/// Outcome of one identity instance. A failing verdict always carries a witness.
struct Verdict {
    std::string identity;
    std::vector<VerdictParam> params;
    Status status = Status::Pass;
    std::optional<int> first_failure;
    std::optional<Witness> witness;

    bool passed() const { return status == Status::Pass; }
};

/// Canonical order: identity name, then parameters pairwise.
bool verdict_less(const Verdict& a, const Verdict& b);

// -- power-series oracle ----------------------------------------------------

/// Taylor coefficients of u(z) at 0 from (n+1) c_{n+1} = r [z^n](u-a)(u-b).
Series<Rational> riccati_series(const OracleInstance& inst);

/// Taylor coefficients of v(z) at 0 from
/// (n+1) w_{n+1} = r [z^n] v (u - (a+b)/2 + d).
Series<Rational> v_series(const OracleInstance& inst);

// -- derivative formulas ----------------------------------------------------

/// n! c_n = r^n P_{n+1}(u0) for 1 <= n <= N.
Verdict check_theorem1(const OracleInstance& inst, int n_max);
/// n! w_n = v0 (r/2)^n Q_n(u0) for 1 <= n <= N; the instance must have d = 0.
Verdict check_theorem2(const OracleInstance& inst, int n_max);
/// n! w_n = v0 (r/2)^n S_n(u0) for 1 <= n <= N.
Verdict check_theorem3(const OracleInstance& inst, int n_max);

// -- generating functions (cross-multiplied, coefficients 0..N-1) -----------

/// (sum E_n y^n/n!) (1 - x e^{(1-x)y}) = 1 - x
Verdict check_egf_eulerian(int n_max);
/// (sum A_n y^n/n!) (x - e^{(x-1)y}) = x - 1
Verdict check_egf_A(int n_max);
/// (sum M_n y^n/n!) (1 - x e^{2(1-x)y}) = (1 - x) e^{(1-x)y}
Verdict check_egf_macmahon(int n_max);
/// (sum M_n (y/2)^n/n!) (1 - x e^{(1-x)y}) = (1 - x) e^{(1-x)y/2}, the form
/// obtained directly from the Q-family generating function.
Verdict check_egf_macmahon_halved(int n_max);
/// The variants with the denominator exponential at the numerator's rate,
///   (sum M_n y^n/n!) (1 - x e^{(1-x)y}) = (1 - x) e^{(1-x)y}
///   (sum M_n (y/2)^n/n!) (1 - x e^{(1-x)y/2}) = (1 - x) e^{(1-x)y/2}.
/// Both are false from the y^1 coefficient on (M_1 = 1 + x); kept so the
/// refutation stays reproducible. Not part of any default suite.
Verdict check_egf_macmahon_equal_rate(int n_max);
Verdict check_egf_macmahon_halved_equal_rate(int n_max);
/// (sum P_{n+1}(u0) t^n/n!) (u0 + (1-u0)e^t) = u0, with a = 0, b = 1, r = 1.
Verdict check_F_closed_form(const Rational& u0, int n_max);
/// (sum 2^{-n} S_n(u0) t^n/n!) (u0 + (1-u0)e^t) = e^{(1/2+d)t}.
/// d = 0 is the Q-family generating function.
Verdict check_H_closed_form(const Rational& u0, const Rational& d, int n_max);
/// 2^{-n} S_n(u0; 0, 1, -1/2) = P_{n+1}(u0; 0, 1)/u0 for 0 <= n <= N-1.
Verdict check_F_H_relation(const Rational& u0, int n_max);

// -- exact polynomial identities --------------------------------------------

/// P_{n+1}(u;0,1) = (u-1) sum_{k<n} C(n,k) P_{k+1}(u;0,1)
Verdict check_lemma1(int n);
/// E_n = sum_{k=1}^{n-1} C(n,k) E_k (x-1)^{n-1-k} + E_1 (x-1)^{n-1}, and the
/// A_n form sum_{k<n} C(n,k) A_k (x-1)^{n-1-k}.
Verdict check_classical(int n);

/// <n,k> from the recurrence equals the alternating binomial sum, all k.
Verdict check_eulerian_explicit(int n);
/// E_n((u-a)/(u-b)) = P_{n+1}(u)/(u-b)^{n+1} at each sample u != b, n >= 1.
Verdict check_substitution_E(int n, const RiccatiParams& params, const std::vector<Rational>& samples);
/// M_n((u-a)/(u-b)) = Q_n(u)/(u-b)^n at each sample u != b.
Verdict check_substitution_M(int n, const RiccatiParams& params, const std::vector<Rational>& samples);
/// Q_n(lambda u; lambda a, lambda b) = lambda^n Q_n(u; a, b) at each sample.
Verdict check_homogeneity_Q(int n, const RiccatiParams& params, const Rational& lambda,
                            const std::vector<Rational>& samples);
/// S_n(u;0,1,-1/2) = 2^n P_{n+1}(u;0,1)/u, and 2^{-n} S_n has integer coefficients.
Verdict check_integrality(int n);

// -- integral representations -----------------------------------------------

/// int_a^b P_n = -(b-a)^{n+1} B_n
Verdict check_integral_P(int n, const Rational& a, const Rational& b);
/// int_a^b Q_n = 2^n B_n(1/2) (b-a)^{n+1}
Verdict check_integral_Q(int n, const Rational& a, const Rational& b);
/// int_a^b S_n = 2^n (b-a)^{n+1} B_n(1/2 + d/(b-a))
Verdict check_integral_S(int n, const Rational& a, const Rational& b, const Rational& d);
/// (-1)^{n-1} int_{-1}^{1} P_n(u;-1,1) du = (-1)^n 2^{n+1} B_n
Verdict check_integral_i3(int n);

/// P_{m+1}(u;-1,1)^2 divided exactly by 1 - u^2.
std::optional<Poly> grosset_veselov_reduced_integrand(int m);

/// B_{2m} = (-1)^{m-1} 2^{-(2m+1)} int_{-1}^{1} P_{m+1}(u;-1,1)^2/(1-u^2) du, exactly.
Verdict grosset_veselov_exact(int m);

/// Floating-point quadrature of (P_{m+1}(tanh x;-1,1))^2 over [-20, 20],
/// compared to (-1)^{m-1} 2^{2m+1} B_{2m} within tol. Requires 1 <= m <= 3.
Verdict grosset_veselov_numeric(int m, double tol);

} // namespace derivpoly
