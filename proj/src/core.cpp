#include "fejer/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fejer {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInterval: return "InvalidInterval";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Syntax: return "SyntaxError";
        case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorCode::Domain: return "DomainError";
        case ErrorCode::NonConstantExponent: return "NonConstantExponent";
        case ErrorCode::NotDifferentiable: return "NotDifferentiable";
        case ErrorCode::ConvexityViolated: return "ConvexityViolated";
        case ErrorCode::SymmetryViolated: return "SymmetryViolated";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::RangeViolated: return "RangeViolated";
        case ErrorCode::MonotonicityViolated: return "MonotonicityViolated";
        case ErrorCode::AdmissibilityViolated: return "AdmissibilityViolated";
        case ErrorCode::NonpositiveInput: return "NonpositiveInput";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::OracleNotConverged: return "OracleNotConverged";
    }
    return "Unknown";
}

Interval::Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidInterval, "interval endpoints must be finite");
    }
    if (a > b) {
        std::ostringstream msg;
        msg << "interval endpoints out of order: a = " << a << " > b = " << b;
        throw Error(ErrorCode::InvalidInterval, msg.str());
    }
}

NormalizedInterval make_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidInterval, "interval endpoints must be finite");
    }
    if (a > b) return {Interval(b, a), true};
    return {Interval(a, b), false};
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::Exact: return "exact";
        case Provenance::UserSupplied: return "user-supplied";
        case Provenance::SampledHeuristic: return "sampled-heuristic";
    }
    return "unknown";
}

CurvatureBounds::CurvatureBounds(double lo, double hi, Provenance prov)
    : lower(lo), upper(hi), provenance(prov) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        std::ostringstream msg;
        msg << "curvature bounds require m <= M, got m = " << lo << ", M = " << hi;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::HermiteHadamard: return "hermite-hadamard";
        case Rule::Fejer: return "fejer";
        case Rule::ChordGap: return "chord-gap";
        case Rule::SymmetricPairGap: return "symmetric-pair-gap";
        case Rule::MidpointGap: return "midpoint-gap";
        case Rule::TrapezoidGap: return "trapezoid-gap";
        case Rule::WeightedTrapezoidGap: return "fejer-trapezoid-gap";
        case Rule::WeightedMidpointGap: return "fejer-midpoint-gap";
        case Rule::BisectionTrapezoidGap: return "bisection-trapezoid-gap";
        case Rule::BisectionMidpointGap: return "bisection-midpoint-gap";
        case Rule::BisectionMidpointGapAsPrinted: return "bisection-midpoint-gap-as-printed";
        case Rule::VasicLackovic: return "vasic-lackovic";
        case Rule::YoungRatio: return "young-ratio";
        case Rule::YoungDifference: return "young-difference";
    }
    return "unknown";
}

Enclosure::Enclosure(double lower, double upper, Rule rule, std::string target)
    : lower_(lower), upper_(upper), rule_(rule), target_(std::move(target)) {
    if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
        std::ostringstream msg;
        msg << to_string(rule) << ": enclosure requires lower <= upper, got (" << lower << ", "
            << upper << ")";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

Enclosure ordered_enclosure(double lower, double upper, Rule rule, std::string target) {
    if (lower <= upper) return Enclosure(lower, upper, rule, std::move(target));
    const double scale = std::max({1.0, std::abs(lower), std::abs(upper)});
    if (lower - upper <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        return Enclosure(upper, lower, rule, std::move(target));
    }
    std::ostringstream msg;
    msg << to_string(rule) << ": sides out of order (" << lower << " > " << upper
        << "); the function is not convex on the interval";
    throw Error(ErrorCode::ConvexityViolated, msg.str());
}

bool enclosure_contains(const Enclosure& e, double v, double tol) {
    return e.lower() - tol <= v && v <= e.upper() + tol;
}

Lambda::Lambda(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << "lambda must lie in [0, 1], got " << value;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

NodeWeights::NodeWeights(double p, double q) : p_(p), q_(q) {
    if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
        std::ostringstream msg;
        msg << "node weights must be positive, got p = " << p << ", q = " << q;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

std::string_view to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "increasing";
        case Monotonicity::Decreasing: return "decreasing";
        case Monotonicity::Constant: return "constant";
        case Monotonicity::Neither: return "neither";
    }
    return "unknown";
}

}  // namespace fejer
