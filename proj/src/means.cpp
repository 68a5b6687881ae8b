#include "fejer/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fejer {

namespace {

void require_positive(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream msg;
        msg << "means need positive finite arguments, got a = " << a << ", b = " << b;
        throw Error(ErrorCode::NonpositiveInput, msg.str());
    }
}

void require_ordered(double a, double x, double b) {
    if (!(a <= x && x <= b)) {
        std::ostringstream msg;
        msg << "need a <= x <= b, got a = " << a << ", x = " << x << ", b = " << b;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

// log A(a,b) - log I(a,b) = sum_k r^(2k) / (2k (2k+1)) with r = (b-a)/(b+a).
double log_arith_over_identric(double a, double b) {
    const double r = (b - a) / (b + a);
    const double u = r * r;
    if (u < 0.1) {
        double sum = 0.0;
        double term = u;
        for (int k = 1; k < 40 && term > 1e-18 * sum; ++k) {
            sum += term / (2.0 * k * (2.0 * k + 1.0));
            term *= u;
        }
        return sum;
    }
    const double ar = std::abs(r);
    return 1.0 - std::atanh(ar) / ar - 0.5 * std::log1p(-u);
}

double arithmetic(double a, double b) { return 0.5 * (a + b); }

double logarithmic(double a, double b) {
    const double r = (b - a) / (b + a);
    if (r == 0.0) return a;
    return arithmetic(a, b) * r / std::atanh(r);
}

double identric(double a, double b) {
    if (a == b) return a;
    return arithmetic(a, b) * std::exp(-log_arith_over_identric(a, b));
}

double power_mean(double a, double b, double p) {
    if (std::abs(p) < kLimitThreshold) return std::sqrt(a) * std::sqrt(b);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    // Factor out the argument that keeps the inner power in (0, 1].
    if (p > 0.0) return hi * std::pow(0.5 * (1.0 + std::pow(lo / hi, p)), 1.0 / p);
    return lo * std::pow(0.5 * (1.0 + std::pow(hi / lo, p)), 1.0 / p);
}

double p_logarithmic(double a, double b, double p) {
    if (std::abs(p + 1.0) < kLimitThreshold) return logarithmic(a, b);
    if (std::abs(p) < kLimitThreshold) return identric(a, b);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double s = lo / hi;
    const double q = p + 1.0;
    // (1 - s^q) / (q (1 - s)) is the mean of t^p over [s, 1].
    const double base = -std::expm1(q * std::log(s)) / (q * (1.0 - s));
    return hi * std::exp(std::log(base) / p);
}

}  // namespace

std::string describe(MeanKind kind, double p) {
    std::ostringstream s;
    switch (kind) {
        case MeanKind::Arithmetic: return "A";
        case MeanKind::Geometric: return "G";
        case MeanKind::Harmonic: return "H";
        case MeanKind::Logarithmic: return "L";
        case MeanKind::Identric: return "I";
        case MeanKind::Power: s << "A_" << p; return s.str();
        case MeanKind::PLog: s << "L_" << p; return s.str();
    }
    return "?";
}

MeanValue mean(MeanKind kind, double a, double b, double p) {
    require_positive(a, b);
    const double order = (kind == MeanKind::Power || kind == MeanKind::PLog) ? p : 0.0;
    if (a == b) return {kind, order, a};
    double v = 0.0;
    switch (kind) {
        case MeanKind::Arithmetic: v = arithmetic(a, b); break;
        case MeanKind::Geometric: v = std::sqrt(a) * std::sqrt(b); break;
        case MeanKind::Harmonic: v = 2.0 * a * b / (a + b); break;
        case MeanKind::Logarithmic: v = logarithmic(a, b); break;
        case MeanKind::Identric: v = identric(a, b); break;
        case MeanKind::Power: v = power_mean(a, b, p); break;
        case MeanKind::PLog: v = p_logarithmic(a, b, p); break;
    }
    return {kind, order, v};
}

namespace {

// (b - a) times the trapezoid gap of t^p on [a, b].
double scaled_power_gap(double p, double a, double b) {
    if (a == b) return 0.0;
    const double endpoint_mean = 0.5 * (std::pow(a, p) + std::pow(b, p));
    const double integral_mean = (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / ((p + 1.0) * (b - a));
    return (b - a) * (endpoint_mean - integral_mean);
}

double scaled_reciprocal_gap(double a, double b) {
    if (a == b) return 0.0;
    // (b-a)/H = (b-a)(a+b)/(2ab) and (b-a)/L = log(b/a).
    return (b - a) * (a + b) / (2.0 * a * b) - std::log(b / a);
}

double powered_identric_ratio(double a, double b) {
    if (a == b) return 1.0;
    return std::exp((b - a) * log_arith_over_identric(a, b));
}

}  // namespace

OrderedPair al_gap_check(double p, double a, double b, double x) {
    require_positive(a, b);
    require_positive(a, x);
    require_ordered(a, x, b);
    if (!std::isfinite(p) || (p >= 0.0 && p < 1.0) || std::abs(p + 1.0) < kLimitThreshold) {
        std::ostringstream msg;
        msg << "p = " << p
            << " is outside (-inf, 0) U [1, inf) without -1, where t^p is convex; use the "
               "harmonic-logarithmic check for p = -1";
        throw Error(ErrorCode::ParameterOutOfRange, msg.str());
    }
    return {scaled_power_gap(p, a, b), scaled_power_gap(p, a, x)};
}

OrderedPair harmonic_log_gap_check(double a, double b, double x) {
    require_positive(a, b);
    require_positive(a, x);
    require_ordered(a, x, b);
    return {scaled_reciprocal_gap(a, b), scaled_reciprocal_gap(a, x)};
}

OrderedPair identric_ratio_check(double a, double b, double x) {
    require_positive(a, b);
    require_positive(a, x);
    require_ordered(a, x, b);
    return {powered_identric_ratio(a, b), powered_identric_ratio(a, x)};
}

namespace {

struct Normalized {
    double alpha;   // min(a, b)
    double beta;    // max(a, b)
    double weight;  // lambda' (1 - lambda'), lambda' the weight attached to alpha
};

// The weight is symmetric in lambda', so it is built from the larger of
// lambda, 1 - lambda: 1 - l is exact for l >= 1/2, which makes (a, b, lambda)
// and (b, a, 1 - lambda) agree bit for bit.
Normalized normalize(double a, double b, Lambda lambda) {
    require_positive(a, b);
    const double big = std::max(lambda.value(), lambda.complement());
    const double weight = big * (1.0 - big);
    return a <= b ? Normalized{a, b, weight} : Normalized{b, a, weight};
}

}  // namespace

Enclosure young_ratio_bounds(double a, double b, Lambda lambda) {
    const Normalized n = normalize(a, b, lambda);
    const double d2 = (n.alpha - n.beta) * (n.alpha - n.beta);
    return Enclosure(std::exp(n.weight * d2 / (2.0 * n.beta * n.beta)),
                     std::exp(n.weight * d2 / (2.0 * n.alpha * n.alpha)), Rule::YoungRatio,
                     "(lambda a + (1-lambda) b) / (a^lambda b^(1-lambda))");
}

Enclosure young_difference_bounds(double a, double b, Lambda lambda) {
    const Normalized n = normalize(a, b, lambda);
    const double log_ratio = std::log(n.alpha / n.beta);
    const double factor = n.weight * log_ratio * log_ratio / 2.0;
    return Enclosure(factor * n.alpha, factor * n.beta, Rule::YoungDifference,
                     "lambda a + (1-lambda) b - a^lambda b^(1-lambda)");
}

double young_ratio(double a, double b, Lambda lambda) {
    require_positive(a, b);
    const double l = lambda.value();
    const double k = lambda.complement();
    return (l * a + k * b) / (std::pow(a, l) * std::pow(b, k));
}

double young_difference(double a, double b, Lambda lambda) {
    require_positive(a, b);
    const double l = lambda.value();
    const double k = lambda.complement();
    return l * a + k * b - std::pow(a, l) * std::pow(b, k);
}

}  // namespace fejer
