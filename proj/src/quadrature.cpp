#include "fejer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fejer {

namespace {

struct SimpsonState {
    const Integrand& f;
    double tol_per_width;
    QuadOptions options;
    std::int64_t evaluations = 0;
    double error = 0.0;
    bool converged = true;
};

double simpson(double w, double fa, double fm, double fb) { return w / 6.0 * (fa + 4.0 * fm + fb); }

double refine(SimpsonState& s, double a, double b, double fa, double fm, double fb, double whole,
              int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    if (s.evaluations + 2 > s.options.max_evaluations || !(a < lm && lm < m && m < rm && rm < b)) {
        s.converged = false;
        return whole;
    }
    const double flm = s.f(lm);
    const double frm = s.f(rm);
    s.evaluations += 2;
    const double left = simpson(m - a, fa, flm, fm);
    const double right = simpson(b - m, fm, frm, fb);
    const double delta = left + right - whole;
    const double local_error = std::abs(delta) / 15.0;
    if (local_error <= s.tol_per_width * (b - a)) {
        s.error += local_error;
        return left + right + delta / 15.0;
    }
    if (depth >= s.options.max_depth) {
        s.error += local_error;
        s.converged = false;
        return left + right + delta / 15.0;
    }
    return refine(s, a, m, fa, flm, fm, left, depth + 1) +
           refine(s, m, b, fm, frm, fb, right, depth + 1);
}

}  // namespace

QuadResult integrate(const Integrand& f, const Interval& I, double tol, const QuadOptions& options) {
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
    }
    if (I.degenerate()) return {};
    SimpsonState s{f, tol / I.width(), options};
    const double fa = f(I.a());
    const double fm = f(I.midpoint());
    const double fb = f(I.b());
    s.evaluations = 3;
    const double whole = simpson(I.width(), fa, fm, fb);
    QuadResult r;
    r.value = refine(s, I.a(), I.b(), fa, fm, fb, whole, 1);
    r.error_estimate = s.error;
    r.evaluations = s.evaluations;
    r.converged = s.converged;
    return r;
}

namespace {

double sample_point(const Interval& I, int i, int points) {
    if (points == 1) return I.midpoint();
    const double t = static_cast<double>(i) / (points - 1);
    return i == points - 1 ? I.b() : I.a() + t * I.width();
}

void require_points(int points, int minimum) {
    if (points < minimum) {
        std::ostringstream msg;
        msg << "need at least " << minimum << " sample points, got " << points;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

}  // namespace

WeightSpec describe_weight(const Expr& g, const Interval& I, int points) {
    require_points(points, 2);
    WeightSpec w;
    w.function = g;
    w.compiled = CompiledExpr(g);
    w.center = I.midpoint();
    const double lo = sampled_minimum(w, I, points);
    if (lo < 0.0) {
        std::ostringstream msg;
        msg << "weight '" << to_string(g) << "' takes the negative value " << lo << " on [" << I.a()
            << ", " << I.b() << "]";
        throw Error(ErrorCode::NegativeWeight, msg.str());
    }
    w.symmetric = check_symmetry(w, I, points);
    w.monotone = check_monotone(w, I, points);
    w.range01 = sampled_maximum(w, I, points) <= 1.0;
    return w;
}

WeightSpec describe_weight(std::string_view text, const Interval& I, int points) {
    return describe_weight(parse(text), I, points);
}

QuadResult integrate_weight(const WeightSpec& g, const Interval& I, double tol) {
    return integrate([&g](double t) { return g(t); }, I, tol);
}

QuadResult moment_ab(const WeightSpec& g, const Interval& I, double tol) {
    const double a = I.a();
    const double b = I.b();
    return integrate([&](double t) { return (t - a) * (b - t) * g(t); }, I, tol);
}

QuadResult moment_center(const WeightSpec& g, const Interval& I, double tol) {
    const double s = I.a() + I.b();
    return integrate(
        [&](double t) {
            const double d = 2.0 * t - s;
            return d * d * g(t);
        },
        I, tol);
}

bool check_symmetry(const WeightSpec& g, const Interval& I, int points, double tol) {
    require_points(points, 1);
    for (int i = 0; i < points; ++i) {
        const double x = sample_point(I, i, points);
        const double gx = g(x);
        if (std::abs(gx - g(I.reflect(x))) > tol * (1.0 + std::abs(gx))) return false;
    }
    return true;
}

Monotonicity check_monotone(const WeightSpec& g, const Interval& I, int points) {
    require_points(points, 2);
    bool up = false;
    bool down = false;
    double prev = g(sample_point(I, 0, points));
    for (int i = 1; i < points; ++i) {
        const double cur = g(sample_point(I, i, points));
        const double tie = 1e-12 * std::max({1.0, std::abs(prev), std::abs(cur)});
        if (cur - prev > tie) up = true;
        if (prev - cur > tie) down = true;
        prev = cur;
    }
    if (up && down) return Monotonicity::Neither;
    if (up) return Monotonicity::Increasing;
    if (down) return Monotonicity::Decreasing;
    return Monotonicity::Constant;
}

double sampled_minimum(const WeightSpec& g, const Interval& I, int points) {
    require_points(points, 1);
    double lo = g(sample_point(I, 0, points));
    for (int i = 1; i < points; ++i) lo = std::min(lo, g(sample_point(I, i, points)));
    return lo;
}

double sampled_maximum(const WeightSpec& g, const Interval& I, int points) {
    require_points(points, 1);
    double hi = g(sample_point(I, 0, points));
    for (int i = 1; i < points; ++i) hi = std::max(hi, g(sample_point(I, i, points)));
    return hi;
}

}  // namespace fejer
