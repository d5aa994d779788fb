#pragma once

#include "derivpoly/exact_arith.hpp"
#include "derivpoly/poly.hpp"

namespace derivpoly {

/// Coefficients of u' = r (u - a)(u - b). Construction enforces r != 0 and a != b.
class RiccatiParams {
public:
    RiccatiParams(Rational r, Rational a, Rational b);

    const Rational& r() const { return r_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational midpoint() const { return (a_ + b_) * Rational(Integer(1), Integer(2)); }

    friend bool operator==(const RiccatiParams&, const RiccatiParams&) = default;

private:
    Rational r_, a_, b_;
};

/// Companion v' = r v (u - (a+b)/2 + d).
struct ShiftedParams {
    RiccatiParams base;
    Rational d;

    friend bool operator==(const ShiftedParams&, const ShiftedParams&) = default;
};

/// Logistic u = q/(1 + p e^{-sz}) written as a Riccati instance, together
/// with the values of u and v = q e^{-sz/2}/(1 + p e^{-sz}) at z = 0.
struct LogisticInstance {
    RiccatiParams params;
    Rational u0;
    Rational v0;
};

/// Requires p > 1, q > 0, s > 0. Maps to r = -s/q, a = q, b = 0.
LogisticInstance logistic_instance(const Rational& q, const Rational& p, const Rational& s);

/// P_n(u; a, b). P_1 = u - a; for n >= 2 the Eulerian row n-1 expansion
/// sum_k <n-1,k> (u-a)^{k+1} (u-b)^{n-1-k}. Independent of r.
/// u^{(n)} = r^n P_{n+1}(u).
Poly build_P(int n, const RiccatiParams& params);

/// Q_n(u; a, b) = sum_{k=1}^{n+1} M_{n+1,k} (u-a)^{n+1-k} (u-b)^{k-1}.
/// For d = 0, v^{(n)} = v (r/2)^n Q_n(u).
Poly build_Q(int n, const RiccatiParams& params);

/// S_n(u; a, b, d) = sum_k C(n,k) (2d)^k Q_{n-k}(u; a, b), so that
/// v^{(n)} = v (r/2)^n S_n(u) for the shifted companion.
Poly build_S(int n, const ShiftedParams& params);

/// Eulerian polynomial E_n(x) = sum_k <n,k> x^{k+1}; E_0 = 1.
Poly build_E(int n);

/// Eulerian polynomial A_n(x) = sum_k <n,k> x^k; A_0 = 1.
Poly build_A(int n);

/// MacMahon polynomial M_n(x) = sum_{k=1}^{n+1} M_{n+1,k} x^{k-1}.
Poly build_M(int n);

} // namespace derivpoly
