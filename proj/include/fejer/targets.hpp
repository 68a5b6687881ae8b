#pragma once

#include "fejer/core.hpp"
#include "fejer/expr.hpp"
#include "fejer/quadrature.hpp"

/// Direct evaluation of the quantities each inequality brackets. Integrals
/// come from adaptive quadrature; nothing here uses curvature bounds, so these
/// values serve as the independent side of every containment check.
namespace fejer::target {

struct TargetValue {
    double value = 0.0;
    bool converged = true;
};

/// (1 / (b - a)) * integral of f over I. Requires a nondegenerate interval.
TargetValue integral_mean(const FunctionSpec& f, const Interval& I, double tol);

/// Integral of f * g over I.
TargetValue weighted_integral(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                              double tol);

/// lambda f(a) + (1 - lambda) f(b) - f(lambda a + (1 - lambda) b).
double chord_gap(const FunctionSpec& f, const Interval& I, Lambda lambda);

/// (f(lambda a + (1 - lambda) b) + f((1 - lambda) a + lambda b)) / 2 - f((a + b) / 2).
double symmetric_pair_gap(const FunctionSpec& f, const Interval& I, Lambda lambda);

/// Integral mean minus the midpoint value; 0 on a degenerate interval.
TargetValue midpoint_gap(const FunctionSpec& f, const Interval& I, double tol);

/// Endpoint average minus the integral mean; 0 on a degenerate interval.
TargetValue trapezoid_gap(const FunctionSpec& f, const Interval& I, double tol);

/// ((f(a) + f(b)) / 2) * int g - int f g.
TargetValue weighted_trapezoid_gap(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                                   double tol);

/// int f g - f((a + b) / 2) * int g.
TargetValue weighted_midpoint_gap(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                                  double tol);

/// (1/2)((f(a) + f(b)) / 2 + f((a + b) / 2)) - integral mean.
TargetValue bisection_trapezoid_gap(const FunctionSpec& f, const Interval& I, double tol);

/// Integral mean - (1/2)(f((3a + b) / 4) + f((a + 3b) / 4)).
TargetValue bisection_midpoint_gap(const FunctionSpec& f, const Interval& I, double tol);

}  // namespace fejer::target
