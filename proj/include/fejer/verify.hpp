#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fejer/core.hpp"
#include "fejer/expr.hpp"
#include "fejer/quadrature.hpp"

namespace fejer {

/// Coefficients of f(x) = c1 x^2 + c2 exp(c3 x) - c4 log(x + s) + c5 x + c6.
struct ConvexFamily {
    double quadratic = 0.0;   // c1 >= 0
    double exp_scale = 0.0;   // c2 >= 0
    double exp_rate = 0.0;    // c3
    double log_scale = 0.0;   // c4 >= 0
    double log_shift = 0.0;   // s, with x + s > 0 on the interval
    double linear = 0.0;      // c5
    double constant = 0.0;    // c6
};

struct ConvexInstance {
    FunctionSpec f;
    Interval interval;
    CurvatureBounds curvature;
    ConvexFamily family;
    std::string recipe;
};

/// Builds the instance with curvature bounds from the closed-form f''. Each
/// summand of f'' = 2 c1 + c2 c3^2 exp(c3 x) + c4 / (x + s)^2 is monotone,
/// so summing the summands' endpoint minima and maxima bounds f'' exactly
/// (provenance Exact).
ConvexInstance make_convex_instance(const ConvexFamily& family, const Interval& I);

/// The same instance with the linear coefficient raised so that f'(a) >= 0,
/// i.e. f nondecreasing on the interval; curvature is unchanged.
ConvexInstance nondecreasing_variant(const ConvexInstance& inst);

/// Deterministic draw: c1, c2, c4 in [0, 3] (each zeroed with probability
/// 0.3), c3, c5, c6 in [-2, 2], a in [-1, 1], width in [0.1, 5].
ConvexInstance random_convex_instance(std::uint64_t seed);

/// w(t) = sum_k c_k |t|^k with t = (x - a)/(b - a) and c_k in [0, 1], returned
/// symmetrized as (w(t) + w(1 - t)) / 2. With range01, the coefficients are
/// rescaled so that 0 <= g <= 1.
WeightSpec random_symmetric_weight(std::uint64_t seed, const Interval& I, bool range01 = false);

/// The symmetrized weight for explicit base coefficients c_0 + c_1 t + ...
WeightSpec symmetrized_polynomial_weight(const std::vector<double>& coefficients,
                                         const Interval& I, bool range01 = false);

/// sum_k c_k t^k (Increasing) or sum_k c_k (1 - t)^k (Decreasing).
WeightSpec random_monotone_weight(std::uint64_t seed, const Interval& I, Monotonicity direction);

struct Failure {
    int trial;
    std::string operation;
    std::string recipe;
    std::string details;
};

/// Outcome of a falsification run. Every trial performs the same number of
/// checks, so passed + failed + inconclusive = trials * kChecksPerTrial.
struct TrialReport {
    std::uint64_t seed = 0;
    int trials = 0;
    double tol = 0.0;
    long passed = 0;
    long failed = 0;
    long inconclusive = 0;
    /// Largest excursion outside an enclosure, relative to the trial's scale.
    double worst_violation = 0.0;
    std::vector<Failure> failures;
    /// Executions per operation, in a fixed order.
    std::vector<std::pair<std::string, long>> operation_counts;
    /// Checks of the bisection midpoint enclosure with m on both sides.
    long as_printed_checks = 0;
    long as_printed_violations = 0;

    /// Merges another partial report; associative, failures kept sorted by trial.
    void merge(const TrialReport& other);
};

inline constexpr int kChecksPerTrial = 45;

/// Runs every bounds and means operation on `trials` generated instances,
/// comparing each against the quadrature oracle with slack 10 * tol * scale.
/// A pure function of its arguments.
TrialReport falsify(int trials, std::uint64_t seed, double tol = kDefaultTolerance);

/// Seed of trial `index` derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

}  // namespace fejer
