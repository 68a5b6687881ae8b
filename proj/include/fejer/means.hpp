#pragma once

#include <string>

#include "fejer/core.hpp"

namespace fejer {

enum class MeanKind { Arithmetic, Geometric, Harmonic, Logarithmic, Identric, Power, PLog };

struct MeanValue {
    MeanKind kind;
    double p;  // order for Power and PLog, 0 otherwise
    double value;
};

std::string describe(MeanKind kind, double p = 0.0);

/// |p| below this is treated as the p -> 0 (or p -> -1) limit.
inline constexpr double kLimitThreshold = 1e-12;

/// Two-argument means of a, b > 0. Every kind returns a when a == b.
///   Arithmetic (a+b)/2, Geometric sqrt(ab), Harmonic 2ab/(a+b),
///   Logarithmic (b-a)/(log b - log a), Identric (1/e)(b^b/a^a)^(1/(b-a)),
///   Power ((a^p+b^p)/2)^(1/p) (Geometric at p = 0),
///   PLog ((b^(p+1)-a^(p+1))/((p+1)(b-a)))^(1/p) (Logarithmic at p = -1,
///   Identric at p = 0).
/// Throws NonpositiveInput.
MeanValue mean(MeanKind kind, double a, double b, double p = 0.0);

/// (b-a)(A_p(a,b)^p - L_p(a,b)^p) against (x-a)(A_p(a,x)^p - L_p(a,x)^p) for
/// 0 < a <= x <= b and p in (-inf, 0) U [1, inf) without -1, where t^p is
/// convex. Throws ParameterOutOfRange for other p.
OrderedPair al_gap_check(double p, double a, double b, double x);

/// (b-a)(1/H(a,b) - 1/L(a,b)) against (x-a)(1/H(a,x) - 1/L(a,x)).
OrderedPair harmonic_log_gap_check(double a, double b, double x);

/// (A(a,b)/I(a,b))^(b-a) against (A(a,x)/I(a,x))^(x-a); both are >= 1.
OrderedPair identric_ratio_check(double a, double b, double x);

/// Enclosure of (lambda a + (1-lambda) b) / (a^lambda b^(1-lambda)). The
/// arguments are ordered as alpha <= beta with lambda following its
/// argument, so the lower side exp(w (alpha-beta)^2 / (2 beta^2)) >= 1.
Enclosure young_ratio_bounds(double a, double b, Lambda lambda);

/// Enclosure of lambda a + (1-lambda) b - a^lambda b^(1-lambda), ordered as
/// in young_ratio_bounds: w alpha/2 log^2(alpha/beta) .. w beta/2 log^2(alpha/beta).
Enclosure young_difference_bounds(double a, double b, Lambda lambda);

/// Closed-form targets of the two Young enclosures.
double young_ratio(double a, double b, Lambda lambda);
double young_difference(double a, double b, Lambda lambda);

}  // namespace fejer
