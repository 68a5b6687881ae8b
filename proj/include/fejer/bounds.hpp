#pragma once

#include "fejer/core.hpp"
#include "fejer/expr.hpp"
#include "fejer/quadrature.hpp"

namespace fejer {

/// Names of the gap quantities bracketed by the curvature-based enclosures.
enum class GapKind {
    TrapezoidGap,
    MidpointGap,
    ChordGap,
    SymmetricPairGap,
    WeightedTrapezoidGap,
    WeightedMidpointGap,
};

inline constexpr double kConvexitySlack = 1e-9;

/// Throws ConvexityViolated when f'' < -1e-9 at any of 101 uniform samples.
void require_convex(const FunctionSpec& f, const Interval& I);

/// f((a+b)/2) <= (1/(b-a)) int f <= (f(a)+f(b))/2 for convex f; needs a < b.
Enclosure hermite_hadamard(const FunctionSpec& f, const Interval& I);

/// f((a+b)/2) int g <= int f g <= ((f(a)+f(b))/2) int g for convex f and a
/// nonnegative weight symmetric about the midpoint. int g comes from the
/// quadrature oracle at `tol`.
Enclosure fejer(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                double tol = kDefaultTolerance);

/// (m, M) * lambda (1 - lambda) (a - b)^2 / 2 around the chord gap at lambda.
Enclosure chord_gap_bounds(const CurvatureBounds& c, const Interval& I, Lambda lambda);

/// (m, M) * (1 - 2 lambda)^2 (a - b)^2 / 8 around the symmetric-pair gap.
Enclosure symmetric_pair_gap_bounds(const CurvatureBounds& c, const Interval& I, Lambda lambda);

/// (m, M) * (b - a)^2 / 24 around the midpoint gap.
Enclosure hh_midpoint_gap_bounds(const CurvatureBounds& c, const Interval& I);

/// (m, M) * (b - a)^2 / 12 around the trapezoid gap.
Enclosure hh_trapezoid_gap_bounds(const CurvatureBounds& c, const Interval& I);

/// (m/2, M/2) * int (t-a)(b-t) g(t) dt around ((f(a)+f(b))/2) int g - int f g.
Enclosure fejer_trapezoid_gap_bounds(const WeightSpec& g, const CurvatureBounds& c,
                                     const Interval& I, double tol = kDefaultTolerance);

/// (m/8, M/8) * int (2t-a-b)^2 g(t) dt around int f g - f((a+b)/2) int g.
Enclosure fejer_midpoint_gap_bounds(const WeightSpec& g, const CurvatureBounds& c,
                                    const Interval& I, double tol = kDefaultTolerance);

/// Sandwich chains obtained by applying the weighted trapezoid estimate to
/// the complementary weight 1 - g. `lower` carries the m-side slack,
/// `upper` the M-side slack; both have right = 0.
struct ComplementChains {
    Chain lower;
    Chain upper;
};

/// Requires g symmetric with sampled values in [0, 1] (RangeViolated otherwise).
ComplementChains complement_weight_chains(const FunctionSpec& f, const WeightSpec& g,
                                          const CurvatureBounds& c, const Interval& I,
                                          double tol = kDefaultTolerance);

/// Enclosures from the midpoint and trapezoid estimates applied to both halves.
/// `midpoint_as_printed` keeps m on the upper side, as the source statement
/// prints it; it is only valid when m = M and is kept for reporting.
struct BisectionBounds {
    Enclosure trapezoid;
    Enclosure midpoint;
    Enclosure midpoint_as_printed;
};

BisectionBounds bisection_bounds(const CurvatureBounds& c, const Interval& I);

/// h1(x) = ((f(a) + f(x)) / 2) int_a^x g - int_a^x f g for a decreasing weight.
/// Nondecreasing in x, with h1(a) = 0, when f is also nondecreasing (f'(a) >= 0).
/// Without that, f = g = (1-x)^2 on [0, 1] gives h1(1) = 1/6 - 1/5 < 0.
/// Throws MonotonicityViolated when g is not decreasing or f'(a) < 0.
double h1_functional(const FunctionSpec& f, const WeightSpec& g, const Interval& I, double x,
                     double tol = kDefaultTolerance);

/// h2(x) = int_a^x f g - f((a + x) / 2) int_a^x g for an increasing weight.
/// Nondecreasing in x, with h2(a) = 0, when f'(a) >= 0 as for h1.
double h2_functional(const FunctionSpec& f, const WeightSpec& g, const Interval& I, double x,
                     double tol = kDefaultTolerance);

/// Trapezoid and midpoint gaps on [a, b] against their (x-a)/(b-a)-scaled
/// counterparts on [a, x], for a < x < b.
struct GapMonotonePairs {
    OrderedPair trapezoid;
    OrderedPair midpoint;
};

GapMonotonePairs hh_gap_monotone(const FunctionSpec& f, const Interval& I, double x,
                                 double tol = kDefaultTolerance);

/// The subinterval comparison applied to f - m x^2 / 2 (`lower`) and the
/// M-side version (`upper`, with the (.)^2 / 8 constant). Both use the
/// curvature bounds of the whole interval.
struct RefinedChains {
    OrderedPair lower;
    OrderedPair upper;
};

RefinedChains refined_gap_chains(const FunctionSpec& f, const CurvatureBounds& c,
                                 const Interval& I, double x, double tol = kDefaultTolerance);

/// Largest admissible half-width (b - a) min(p, q) / (p + q).
double vasic_lackovic_radius(NodeWeights pq, const Interval& I);

/// Window [A - y, A + y] around A = (p a + q b) / (p + q). Throws
/// AdmissibilityViolated, before any function evaluation, when y exceeds
/// vasic_lackovic_radius, and InvalidArgument when y <= 0.
Interval vasic_lackovic_window(NodeWeights pq, const Interval& I, double y);

/// f(A) int_W g <= int_W f g <= ((p f(a) + q f(b)) / (p + q)) int_W g over the
/// window W, for convex f and g symmetric about A and nonnegative on W.
Enclosure vasic_lackovic(const FunctionSpec& f, const WeightSpec& g, NodeWeights pq,
                         const Interval& I, double y, double tol = kDefaultTolerance);

}  // namespace fejer
