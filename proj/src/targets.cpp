#include "fejer/targets.hpp"

#include <algorithm>
#include <cmath>

namespace fejer::target {

namespace {

QuadResult integral(const FunctionSpec& f, const Interval& I, double tol) {
    return integrate([&f](double t) { return f(t); }, I, tol);
}

// Tolerance for an integral that is later multiplied by `factor`.
double product_tol(double tol, double factor) { return tol / std::max(1.0, std::abs(factor)); }

}  // namespace

TargetValue integral_mean(const FunctionSpec& f, const Interval& I, double tol) {
    if (I.degenerate()) {
        throw Error(ErrorCode::InvalidInterval, "the integral mean needs a nondegenerate interval");
    }
    // Scale the tolerance so the mean, not the integral, meets tol.
    const QuadResult r = integral(f, I, tol * I.width());
    return {r.value / I.width(), r.converged};
}

TargetValue weighted_integral(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                              double tol) {
    const QuadResult r = integrate([&](double t) { return f(t) * g(t); }, I, tol);
    return {r.value, r.converged};
}

double chord_gap(const FunctionSpec& f, const Interval& I, Lambda lambda) {
    const double l = lambda.value();
    const double k = lambda.complement();
    return l * f(I.a()) + k * f(I.b()) - f(l * I.a() + k * I.b());
}

double symmetric_pair_gap(const FunctionSpec& f, const Interval& I, Lambda lambda) {
    const double l = lambda.value();
    const double k = lambda.complement();
    return 0.5 * (f(l * I.a() + k * I.b()) + f(k * I.a() + l * I.b())) - f(I.midpoint());
}

TargetValue midpoint_gap(const FunctionSpec& f, const Interval& I, double tol) {
    if (I.degenerate()) return {};
    const TargetValue mean = integral_mean(f, I, tol);
    return {mean.value - f(I.midpoint()), mean.converged};
}

TargetValue trapezoid_gap(const FunctionSpec& f, const Interval& I, double tol) {
    if (I.degenerate()) return {};
    const TargetValue mean = integral_mean(f, I, tol);
    return {0.5 * (f(I.a()) + f(I.b())) - mean.value, mean.converged};
}

TargetValue weighted_trapezoid_gap(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                                   double tol) {
    const double ends = 0.5 * (f(I.a()) + f(I.b()));
    const QuadResult mass = integrate_weight(g, I, product_tol(tol, ends));
    const TargetValue fg = weighted_integral(f, g, I, tol);
    return {ends * mass.value - fg.value, mass.converged && fg.converged};
}

TargetValue weighted_midpoint_gap(const FunctionSpec& f, const WeightSpec& g, const Interval& I,
                                  double tol) {
    const double mid = f(I.midpoint());
    const QuadResult mass = integrate_weight(g, I, product_tol(tol, mid));
    const TargetValue fg = weighted_integral(f, g, I, tol);
    return {fg.value - mid * mass.value, mass.converged && fg.converged};
}

TargetValue bisection_trapezoid_gap(const FunctionSpec& f, const Interval& I, double tol) {
    const TargetValue mean = integral_mean(f, I, tol);
    const double nodes = 0.5 * (0.5 * (f(I.a()) + f(I.b())) + f(I.midpoint()));
    return {nodes - mean.value, mean.converged};
}

TargetValue bisection_midpoint_gap(const FunctionSpec& f, const Interval& I, double tol) {
    const TargetValue mean = integral_mean(f, I, tol);
    const double q1 = 0.25 * (3.0 * I.a() + I.b());
    const double q3 = 0.25 * (I.a() + 3.0 * I.b());
    return {mean.value - 0.5 * (f(q1) + f(q3)), mean.converged};
}

}  // namespace fejer::target
