#pragma once

#include <string>
#include <string_view>

#include "fejer/error.hpp"

namespace fejer {

/// Closed real interval [a, b] with finite endpoints and a <= b.
/// Degenerate intervals (a == b) are allowed.
class Interval {
public:
    Interval(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double width() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return 0.5 * (a_ + b_); }
    bool degenerate() const noexcept { return a_ == b_; }
    bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

    /// Reflection through the midpoint, x -> a + b - x.
    double reflect(double x) const noexcept { return (a_ + b_) - x; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
};

struct NormalizedInterval {
    Interval interval;
    bool swapped;
};

/// Orders the endpoints ascending. Throws InvalidInterval on non-finite input.
NormalizedInterval make_interval(double a, double b);

enum class Provenance { Exact, UserSupplied, SampledHeuristic };

std::string_view to_string(Provenance p);

/// Bounds lower <= f'' <= upper on some interval.
struct CurvatureBounds {
    CurvatureBounds(double lower, double upper, Provenance provenance);

    double lower;
    double upper;
    Provenance provenance;
};

/// Which inequality produced an enclosure.
enum class Rule {
    HermiteHadamard,
    Fejer,
    ChordGap,
    SymmetricPairGap,
    MidpointGap,
    TrapezoidGap,
    WeightedTrapezoidGap,
    WeightedMidpointGap,
    BisectionTrapezoidGap,
    BisectionMidpointGap,
    BisectionMidpointGapAsPrinted,
    VasicLackovic,
    YoungRatio,
    YoungDifference,
};

/// Stable kebab-case identifier, used by the CLI and in JSON output.
std::string_view to_string(Rule rule);

/// A pair lower <= upper bracketing a named target quantity.
class Enclosure {
public:
    Enclosure(double lower, double upper, Rule rule, std::string target);

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double width() const noexcept { return upper_ - lower_; }
    Rule rule() const noexcept { return rule_; }
    const std::string& target() const noexcept { return target_; }

private:
    double lower_;
    double upper_;
    Rule rule_;
    std::string target_;
};

/// Builds an enclosure from the two sides of an inequality whose sides are
/// mathematically ordered but may cross by a rounding error (for instance the
/// Hermite-Hadamard sides of an affine function). Sides crossing by more than
/// a few ulps of their magnitude indicate a violated hypothesis and throw
/// ConvexityViolated.
Enclosure ordered_enclosure(double lower, double upper, Rule rule, std::string target);

/// True iff e.lower - tol <= v <= e.upper + tol.
bool enclosure_contains(const Enclosure& e, double v, double tol);

/// Convex-combination parameter in [0, 1].
class Lambda {
public:
    explicit Lambda(double value);

    double value() const noexcept { return value_; }
    double complement() const noexcept { return 1.0 - value_; }

private:
    double value_;
};

/// Positive node weights (p, q) placing the node at (p a + q b) / (p + q).
class NodeWeights {
public:
    NodeWeights(double p, double q);

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

private:
    double p_;
    double q_;
};

/// Three terms with left >= middle >= right.
struct Chain {
    double left;
    double middle;
    double right;
};

/// Two terms with first >= second >= 0.
struct OrderedPair {
    double first;
    double second;
};

enum class Monotonicity { Increasing, Decreasing, Constant, Neither };

std::string_view to_string(Monotonicity m);

}  // namespace fejer
