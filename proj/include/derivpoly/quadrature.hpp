#pragma once

#include <functional>

namespace derivpoly {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) over the finite interval [lo, hi].
/// `converged` is set when the error estimate is at most abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, unsigned max_depth = 15);

} // namespace derivpoly
