// specfun.hpp — polygamma functions of order 1 and 3 and adaptive
// Gauss-Kronrod quadrature on finite and semi-infinite intervals.

#pragma once

#include <functional>

namespace qslbath {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive quadrature of f over (0, inf). The domain is split at the scale
// point and the tail is mapped back to a finite interval; endpoints are
// never evaluated. A non-converged result is flagged, never silently wrong.
QuadratureResult quad_semiinf(const std::function<double(double)>& f, double tolerance,
                              double scale = 1.0);

QuadratureResult quad_finite(const std::function<double(double)>& f, double a, double b,
                             double tolerance);

// psi^(order)(z) for order 1 or 3 and z > 0, via upward recurrence past a
// fixed threshold followed by the asymptotic series.
double polygamma(int order, double z);

}  // namespace qslbath
