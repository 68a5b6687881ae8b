#pragma once

#include <cstdint>
#include <functional>

#include "fejer/core.hpp"
#include "fejer/expr.hpp"

namespace fejer {

using Integrand = std::function<double(double)>;

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = true;
};

struct QuadOptions {
    int max_depth = 50;
    std::int64_t max_evaluations = 4'000'000;
};

inline constexpr double kDefaultTolerance = 1e-10;

/// Adaptive Simpson quadrature. A panel of width w is accepted when
/// |S(left) + S(right) - S(whole)| / 15 <= tol * w / (b - a); the accepted value
/// carries the Richardson correction. A panel still failing at max_depth, or
/// any panel left when the evaluation budget runs out, is accepted as is and
/// the result is marked unconverged. Domain errors from f propagate.
QuadResult integrate(const Integrand& f, const Interval& I, double tol = kDefaultTolerance,
                     const QuadOptions& options = {});

/// Nonnegative weight g with its declared properties.
struct WeightSpec {
    Expr function = Expr::constant(0.0);
    CompiledExpr compiled;
    double center = 0.0;
    bool symmetric = false;
    Monotonicity monotone = Monotonicity::Neither;
    bool range01 = false;

    double operator()(double x) const { return compiled(x); }
};

inline constexpr int kDefaultCheckPoints = 101;
inline constexpr double kSymmetryTolerance = 1e-9;

/// Samples g on I and records symmetry about the midpoint, monotonicity and
/// whether all values lie in [0, 1]. Throws NegativeWeight when a sample is
/// negative and DomainError when g is undefined at a sample.
WeightSpec describe_weight(const Expr& g, const Interval& I, int points = kDefaultCheckPoints);
WeightSpec describe_weight(std::string_view text, const Interval& I,
                           int points = kDefaultCheckPoints);

/// Integral of g over I.
QuadResult integrate_weight(const WeightSpec& g, const Interval& I, double tol = kDefaultTolerance);

/// Integral of (t - a)(b - t) g(t) over I.
QuadResult moment_ab(const WeightSpec& g, const Interval& I, double tol = kDefaultTolerance);

/// Integral of (2t - a - b)^2 g(t) over I.
QuadResult moment_center(const WeightSpec& g, const Interval& I, double tol = kDefaultTolerance);

/// |g(x) - g(a + b - x)| <= tol (1 + |g(x)|) at `points` uniform samples.
bool check_symmetry(const WeightSpec& g, const Interval& I, int points = kDefaultCheckPoints,
                    double tol = kSymmetryTolerance);

/// Classifies g from consecutive differences at `points` uniform samples;
/// differences within 1e-12 (relative to the sample magnitude) count as ties.
Monotonicity check_monotone(const WeightSpec& g, const Interval& I,
                            int points = kDefaultCheckPoints);

/// Smallest sampled value of g at `points` uniform samples.
double sampled_minimum(const WeightSpec& g, const Interval& I, int points = kDefaultCheckPoints);

/// Largest sampled value of g at `points` uniform samples.
double sampled_maximum(const WeightSpec& g, const Interval& I, int points = kDefaultCheckPoints);

}  // namespace fejer
