#include "fejer/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fejer/targets.hpp"

namespace fejer {

namespace {

std::string interval_text(const Interval& I) {
    std::ostringstream s;
    s << "[" << I.a() << ", " << I.b() << "]";
    return s.str();
}

void require_nondegenerate(const Interval& I, const char* what) {
    if (I.degenerate()) {
        throw Error(ErrorCode::InvalidInterval,
                    std::string(what) + " needs a < b, got " + interval_text(I));
    }
}

void require_symmetric(const WeightSpec& g, const Interval& I) {
    if (!check_symmetry(g, I)) {
        throw Error(ErrorCode::SymmetryViolated, "weight '" + to_string(g.function) +
                                                     "' is not symmetric about the midpoint of " +
                                                     interval_text(I));
    }
}

void require_nonnegative(const WeightSpec& g, const Interval& I) {
    const double lo = sampled_minimum(g, I);
    if (lo < 0.0) {
        std::ostringstream msg;
        msg << "weight '" << to_string(g.function) << "' takes the negative value " << lo << " on "
            << interval_text(I);
        throw Error(ErrorCode::NegativeWeight, msg.str());
    }
}

double require_converged(const QuadResult& r, const char* what) {
    if (!r.converged) {
        throw Error(ErrorCode::OracleNotConverged,
                    std::string("quadrature for ") + what + " did not converge");
    }
    return r.value;
}

double require_converged(const target::TargetValue& r, const char* what) {
    if (!r.converged) {
        throw Error(ErrorCode::OracleNotConverged,
                    std::string("quadrature for ") + what + " did not converge");
    }
    return r.value;
}

double square(double v) { return v * v; }

// Tolerance for an integral that is later multiplied by `factor`.
double product_tol(double tol, double factor) { return tol / std::max(1.0, std::abs(factor)); }

Enclosure scaled(const CurvatureBounds& c, double factor, Rule rule, std::string target) {
    // factor >= 0, so rounding keeps m * factor <= M * factor.
    return Enclosure(c.lower * factor, c.upper * factor, rule, std::move(target));
}

void require_in_interval(double x, const Interval& I, bool strict) {
    const bool ok = strict ? (I.a() < x && x < I.b()) : I.contains(x);
    if (!ok) {
        std::ostringstream msg;
        msg << "x = " << x << " must lie " << (strict ? "strictly inside " : "in ") << interval_text(I);
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

// For convex f this is f' >= 0 on all of I.
void require_nondecreasing(const FunctionSpec& f, const Interval& I, const char* what) {
    const double slope = f.first(I.a());
    if (slope < -kConvexitySlack) {
        std::ostringstream msg;
        msg << what << " needs f nondecreasing on " << interval_text(I) << ", but f'(" << I.a()
            << ") = " << slope;
        throw Error(ErrorCode::MonotonicityViolated, msg.str());
    }
}

}  // namespace

void require_convex(const FunctionSpec& f, const Interval& I) {
    constexpr int kPoints = 101;
    for (int i = 0; i < kPoints; ++i) {
        const double x = i == kPoints - 1 ? I.b() : I.a() + I.width() * i / (kPoints - 1);
        const double d2 = f.second(x);
        if (d2 < -kConvexitySlack) {
            std::ostringstream msg;
            msg << "f = '" << f.text() << "' is not convex on " << interval_text(I)
                << ": f''(" << x << ") = " << d2;
            throw Error(ErrorCode::ConvexityViolated, msg.str());
        }
    }
}

Enclosure hermite_hadamard(const FunctionSpec& f, const Interval& I) {
    require_nondegenerate(I, "the Hermite-Hadamard enclosure");
    require_convex(f, I);
    return ordered_enclosure(f(I.midpoint()), 0.5 * (f(I.a()) + f(I.b())), Rule::HermiteHadamard,
                             "(1/(b-a)) int_a^b f");
}

Enclosure fejer(const FunctionSpec& f, const WeightSpec& g, const Interval& I, double tol) {
    require_symmetric(g, I);
    require_nonnegative(g, I);
    require_convex(f, I);
    const double mid = f(I.midpoint());
    const double ends = 0.5 * (f(I.a()) + f(I.b()));
    const double mass_tol = product_tol(tol, std::max(std::abs(mid), std::abs(ends)));
    const double mass = std::max(0.0, require_converged(integrate_weight(g, I, mass_tol), "int g"));
    return ordered_enclosure(mid * mass, ends * mass, Rule::Fejer,
                             "int_a^b f g");
}

Enclosure chord_gap_bounds(const CurvatureBounds& c, const Interval& I, Lambda lambda) {
    const double factor = lambda.value() * lambda.complement() * square(I.a() - I.b()) / 2.0;
    return scaled(c, factor, Rule::ChordGap, "lambda f(a) + (1-lambda) f(b) - f(lambda a + (1-lambda) b)");
}

Enclosure symmetric_pair_gap_bounds(const CurvatureBounds& c, const Interval& I, Lambda lambda) {
    const double factor = square(1.0 - 2.0 * lambda.value()) * square(I.a() - I.b()) / 8.0;
    return scaled(c, factor, Rule::SymmetricPairGap,
                  "(f(lambda a + (1-lambda) b) + f((1-lambda) a + lambda b))/2 - f((a+b)/2)");
}

Enclosure hh_midpoint_gap_bounds(const CurvatureBounds& c, const Interval& I) {
    return scaled(c, square(I.width()) / 24.0, Rule::MidpointGap, "(1/(b-a)) int f - f((a+b)/2)");
}

Enclosure hh_trapezoid_gap_bounds(const CurvatureBounds& c, const Interval& I) {
    return scaled(c, square(I.width()) / 12.0, Rule::TrapezoidGap, "(f(a)+f(b))/2 - (1/(b-a)) int f");
}

Enclosure fejer_trapezoid_gap_bounds(const WeightSpec& g, const CurvatureBounds& c,
                                     const Interval& I, double tol) {
    require_symmetric(g, I);
    require_nonnegative(g, I);
    const double moment_tol = product_tol(tol, std::max(std::abs(c.lower), std::abs(c.upper)) / 2.0);
    const double moment =
        std::max(0.0, require_converged(moment_ab(g, I, moment_tol), "int (t-a)(b-t) g"));
    return scaled(c, moment / 2.0, Rule::WeightedTrapezoidGap, "((f(a)+f(b))/2) int g - int f g");
}

Enclosure fejer_midpoint_gap_bounds(const WeightSpec& g, const CurvatureBounds& c,
                                    const Interval& I, double tol) {
    require_symmetric(g, I);
    require_nonnegative(g, I);
    const double moment_tol = product_tol(tol, std::max(std::abs(c.lower), std::abs(c.upper)) / 8.0);
    const double moment =
        std::max(0.0, require_converged(moment_center(g, I, moment_tol), "int (2t-a-b)^2 g"));
    return scaled(c, moment / 8.0, Rule::WeightedMidpointGap, "int f g - f((a+b)/2) int g");
}

ComplementChains complement_weight_chains(const FunctionSpec& f, const WeightSpec& g,
                                          const CurvatureBounds& c, const Interval& I, double tol) {
    require_symmetric(g, I);
    const double lo = sampled_minimum(g, I);
    const double hi = sampled_maximum(g, I);
    if (lo < 0.0 || hi > 1.0) {
        std::ostringstream msg;
        msg << "weight '" << to_string(g.function) << "' leaves [0, 1] on " << interval_text(I)
            << " (sampled range [" << lo << ", " << hi << "])";
        throw Error(ErrorCode::RangeViolated, msg.str());
    }
    if (I.degenerate()) return {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};

    const double w = I.width();
    const double trapezoid = require_converged(target::trapezoid_gap(f, I, tol), "int f");
    const double weighted =
        require_converged(target::weighted_trapezoid_gap(f, g, I, tol), "int g and int f g");
    const double moment_tol = product_tol(tol, std::max(std::abs(c.lower), std::abs(c.upper)) / 2.0);
    const double moment = require_converged(moment_ab(g, I, moment_tol), "int (t-a)(b-t) g");

    ComplementChains out{};
    out.lower = {w * (trapezoid - c.lower * w * w / 12.0), weighted - c.lower / 2.0 * moment, 0.0};
    out.upper = {w * (c.upper * w * w / 12.0 - trapezoid), c.upper / 2.0 * moment - weighted, 0.0};
    return out;
}

BisectionBounds bisection_bounds(const CurvatureBounds& c, const Interval& I) {
    const double w2 = square(I.width());
    const char* midpoint_target = "(1/(b-a)) int f - (f((3a+b)/4) + f((a+3b)/4))/2";
    return BisectionBounds{
        scaled(c, w2 / 48.0, Rule::BisectionTrapezoidGap,
               "((f(a)+f(b))/2 + f((a+b)/2))/2 - (1/(b-a)) int f"),
        scaled(c, w2 / 96.0, Rule::BisectionMidpointGap, midpoint_target),
        Enclosure(c.lower * w2 / 96.0, c.lower * w2 / 96.0, Rule::BisectionMidpointGapAsPrinted,
                  midpoint_target),
    };
}

double h1_functional(const FunctionSpec& f, const WeightSpec& g, const Interval& I, double x,
                     double tol) {
    require_in_interval(x, I, false);
    const Monotonicity mono = check_monotone(g, I);
    if (mono != Monotonicity::Decreasing && mono != Monotonicity::Constant) {
        throw Error(ErrorCode::MonotonicityViolated,
                    "h1 needs a decreasing weight; '" + to_string(g.function) + "' is " +
                        std::string(to_string(mono)) + " on " + interval_text(I));
    }
    require_nonnegative(g, I);
    require_convex(f, I);
    require_nondecreasing(f, I, "h1");
    if (x == I.a()) return 0.0;
    const Interval J(I.a(), x);
    const double ends = 0.5 * (f(I.a()) + f(x));
    const double mass = require_converged(integrate_weight(g, J, product_tol(tol, ends)), "int_a^x g");
    const double fg = require_converged(target::weighted_integral(f, g, J, tol), "int_a^x f g");
    return ends * mass - fg;
}

double h2_functional(const FunctionSpec& f, const WeightSpec& g, const Interval& I, double x,
                     double tol) {
    require_in_interval(x, I, false);
    const Monotonicity mono = check_monotone(g, I);
    if (mono != Monotonicity::Increasing && mono != Monotonicity::Constant) {
        throw Error(ErrorCode::MonotonicityViolated,
                    "h2 needs an increasing weight; '" + to_string(g.function) + "' is " +
                        std::string(to_string(mono)) + " on " + interval_text(I));
    }
    require_nonnegative(g, I);
    require_convex(f, I);
    require_nondecreasing(f, I, "h2");
    if (x == I.a()) return 0.0;
    const Interval J(I.a(), x);
    const double mid = f(J.midpoint());
    const double mass = require_converged(integrate_weight(g, J, product_tol(tol, mid)), "int_a^x g");
    const double fg = require_converged(target::weighted_integral(f, g, J, tol), "int_a^x f g");
    return fg - mid * mass;
}

GapMonotonePairs hh_gap_monotone(const FunctionSpec& f, const Interval& I, double x, double tol) {
    require_in_interval(x, I, true);
    require_convex(f, I);
    const Interval J(I.a(), x);
    const double ratio = J.width() / I.width();
    const double t_full = require_converged(target::trapezoid_gap(f, I, tol), "int_a^b f");
    const double t_sub = require_converged(target::trapezoid_gap(f, J, tol), "int_a^x f");
    const double m_full = require_converged(target::midpoint_gap(f, I, tol), "int_a^b f");
    const double m_sub = require_converged(target::midpoint_gap(f, J, tol), "int_a^x f");
    return {{t_full, ratio * t_sub}, {m_full, ratio * m_sub}};
}

RefinedChains refined_gap_chains(const FunctionSpec& f, const CurvatureBounds& c,
                                 const Interval& I, double x, double tol) {
    require_in_interval(x, I, true);
    require_convex(f, I);
    const Interval J(I.a(), x);
    const double ratio = J.width() / I.width();
    const double w2 = square(I.width());
    const double v2 = square(J.width());
    const double m_full = require_converged(target::midpoint_gap(f, I, tol), "int_a^b f");
    const double m_sub = require_converged(target::midpoint_gap(f, J, tol), "int_a^x f");
    RefinedChains out{};
    out.lower = {m_full - c.lower * w2 / 24.0, ratio * (m_sub - c.lower * v2 / 24.0)};
    out.upper = {c.upper / 8.0 * w2 - m_full, ratio * (c.upper / 8.0 * v2 - m_sub)};
    return out;
}

double vasic_lackovic_radius(NodeWeights pq, const Interval& I) {
    return I.width() * std::min(pq.p(), pq.q()) / (pq.p() + pq.q());
}

Interval vasic_lackovic_window(NodeWeights pq, const Interval& I, double y) {
    if (!(y > 0.0) || !std::isfinite(y)) {
        std::ostringstream msg;
        msg << "window half-width y must be positive, got " << y;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    const double radius = vasic_lackovic_radius(pq, I);
    if (y > radius * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
        std::ostringstream msg;
        msg << "y = " << y << " exceeds the admissible half-width (b-a) min(p,q)/(p+q) = " << radius
            << "; the enclosure holds for all convex f if and only if y is at most this value";
        throw Error(ErrorCode::AdmissibilityViolated, msg.str());
    }
    const double node = (pq.p() * I.a() + pq.q() * I.b()) / (pq.p() + pq.q());
    return Interval(std::max(I.a(), node - y), std::min(I.b(), node + y));
}

Enclosure vasic_lackovic(const FunctionSpec& f, const WeightSpec& g, NodeWeights pq,
                         const Interval& I, double y, double tol) {
    const Interval W = vasic_lackovic_window(pq, I, y);
    require_symmetric(g, W);
    require_nonnegative(g, W);
    require_convex(f, I);
    const double node = (pq.p() * I.a() + pq.q() * I.b()) / (pq.p() + pq.q());
    const double at_node = f(node);
    const double weighted_end = (pq.p() * f(I.a()) + pq.q() * f(I.b())) / (pq.p() + pq.q());
    const double mass_tol = product_tol(tol, std::max(std::abs(at_node), std::abs(weighted_end)));
    const double mass = std::max(0.0, require_converged(integrate_weight(g, W, mass_tol), "int_W g"));
    return ordered_enclosure(at_node * mass, weighted_end * mass, Rule::VasicLackovic,
                             "int_{A-y}^{A+y} f g");
}

}  // namespace fejer
