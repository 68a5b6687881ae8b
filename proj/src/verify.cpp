#include "fejer/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "fejer/bounds.hpp"
#include "fejer/means.hpp"
#include "fejer/targets.hpp"

namespace fejer {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// std::uniform_real_distribution is implementation-defined; this is not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : gen_(seed) {}

    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 gen_;
};

std::string fmt_real(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

Expr num(double v) { return Expr::constant(v); }

// (x - a) / (b - a), or (b - x) / (b - a) when `reflected`.
Expr unit_coordinate(const Interval& I, bool reflected) {
    const Expr x = Expr::variable();
    const Expr offset = reflected ? ops::sub(num(I.b()), x) : ops::sub(x, num(I.a()));
    return ops::div(offset, num(I.width()));
}

Expr polynomial(const std::vector<double>& c, const Expr& t) {
    Expr sum = num(0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Expr power = k == 0 ? num(1.0) : k == 1 ? t : ops::pow(t, num(static_cast<double>(k)));
        sum = ops::add(sum, ops::mul(num(c[k]), power));
    }
    return sum;
}

std::vector<double> draw_coefficients(Draw& d, int count) {
    std::vector<double> c(static_cast<std::size_t>(count));
    for (double& v : c) v = d.uniform(0.0, 1.0);
    // Keep a positive constant term so the weight has mass.
    c[0] = std::max(c[0], 0.05);
    return c;
}

WeightSpec finish_weight(const Expr& g, const Interval& I) {
    if (I.degenerate()) {
        WeightSpec w;
        w.function = g;
        w.compiled = CompiledExpr(g);
        w.center = I.a();
        w.symmetric = true;
        w.monotone = Monotonicity::Constant;
        return w;
    }
    return describe_weight(g, I);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

ConvexInstance make_convex_instance(const ConvexFamily& c, const Interval& I) {
    if (c.log_scale != 0.0 && !(I.a() + c.log_shift > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "log shift must keep x + s positive on the interval");
    }
    const Expr x = Expr::variable();
    Expr f = ops::mul(num(c.quadratic), ops::pow(x, num(2.0)));
    f = ops::add(f, ops::mul(num(c.exp_scale), ops::exp(ops::mul(num(c.exp_rate), x))));
    if (c.log_scale != 0.0) {
        f = ops::sub(f, ops::mul(num(c.log_scale), ops::log(ops::add(x, num(c.log_shift)))));
    }
    f = ops::add(f, ops::mul(num(c.linear), x));
    f = ops::add(f, num(c.constant));

    double lower = 2.0 * c.quadratic;
    double upper = lower;
    const auto add_summand = [&](double at_a, double at_b) {
        lower += std::min(at_a, at_b);
        upper += std::max(at_a, at_b);
    };
    if (c.exp_scale != 0.0 && c.exp_rate != 0.0) {
        const double k = c.exp_scale * c.exp_rate * c.exp_rate;
        add_summand(k * std::exp(c.exp_rate * I.a()), k * std::exp(c.exp_rate * I.b()));
    }
    if (c.log_scale != 0.0) {
        const double ua = I.a() + c.log_shift;
        const double ub = I.b() + c.log_shift;
        add_summand(c.log_scale / (ua * ua), c.log_scale / (ub * ub));
    }

    std::string recipe = "f = " + to_string(f) + " on [" + fmt_real(I.a()) + ", " + fmt_real(I.b()) + "]";
    return ConvexInstance{FunctionSpec::from(f), I, CurvatureBounds(lower, upper, Provenance::Exact), c,
                          std::move(recipe)};
}

ConvexInstance random_convex_instance(std::uint64_t seed) {
    Draw d(seed);
    ConvexFamily c;
    c.quadratic = d.uniform(0.0, 3.0);
    c.exp_scale = d.uniform(0.0, 3.0);
    c.exp_rate = d.uniform(-2.0, 2.0);
    c.log_scale = d.uniform(0.0, 3.0);
    c.linear = d.uniform(-2.0, 2.0);
    c.constant = d.uniform(-2.0, 2.0);
    if (d.chance(0.3)) c.quadratic = 0.0;
    if (d.chance(0.3)) c.exp_scale = 0.0;
    if (d.chance(0.3)) c.log_scale = 0.0;
    const double a = d.uniform(-1.0, 1.0);
    const double width = d.uniform(0.1, 5.0);
    c.log_shift = -a + d.uniform(0.2, 2.0);
    if (c.log_scale == 0.0) c.log_shift = 0.0;
    ConvexInstance inst = make_convex_instance(c, Interval(a, a + width));
    inst.recipe = "seed=" + std::to_string(seed) + ": " + inst.recipe;
    return inst;
}

ConvexInstance nondecreasing_variant(const ConvexInstance& inst) {
    const double slope = inst.f.first(inst.interval.a());
    if (slope >= 0.0) return inst;
    ConvexFamily c = inst.family;
    // A little over -slope so rounding cannot leave f'(a) negative.
    c.linear -= slope * (1.0 + 1e-9);
    ConvexInstance out = make_convex_instance(c, inst.interval);
    out.recipe = inst.recipe + "; linear term raised to " + fmt_real(c.linear);
    return out;
}

WeightSpec symmetrized_polynomial_weight(const std::vector<double>& coefficients, const Interval& I,
                                         bool range01) {
    if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "weight needs coefficients");
    std::vector<double> c = coefficients;
    if (range01) {
        double total = 0.0;
        for (double v : c) total += std::abs(v);
        // On t in [0, 1] the base polynomial is at most the sum of its coefficients.
        if (total > 1.0) {
            for (double& v : c) v /= total;
        }
    }
    if (I.degenerate()) return finish_weight(num(c[0]), I);
    const Expr t = Expr::unary(NodeKind::Abs, unit_coordinate(I, false));
    const Expr s = Expr::unary(NodeKind::Abs, unit_coordinate(I, true));
    const Expr g = ops::mul(num(0.5), ops::add(polynomial(c, t), polynomial(c, s)));
    return finish_weight(g, I);
}

WeightSpec random_symmetric_weight(std::uint64_t seed, const Interval& I, bool range01) {
    Draw d(seed);
    return symmetrized_polynomial_weight(draw_coefficients(d, 4), I, range01);
}

WeightSpec random_monotone_weight(std::uint64_t seed, const Interval& I, Monotonicity direction) {
    if (direction != Monotonicity::Increasing && direction != Monotonicity::Decreasing) {
        throw Error(ErrorCode::InvalidArgument, "monotone weight must be increasing or decreasing");
    }
    Draw d(seed);
    std::vector<double> c = draw_coefficients(d, 4);
    c[1] = std::max(c[1], 0.1);
    if (I.degenerate()) return finish_weight(num(c[0]), I);
    const Expr t = Expr::unary(NodeKind::Abs, unit_coordinate(I, direction == Monotonicity::Decreasing));
    return finish_weight(polynomial(c, t), I);
}

void TrialReport::merge(const TrialReport& other) {
    passed += other.passed;
    failed += other.failed;
    inconclusive += other.inconclusive;
    worst_violation = std::max(worst_violation, other.worst_violation);
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    std::stable_sort(failures.begin(), failures.end(),
                     [](const Failure& l, const Failure& r) { return l.trial < r.trial; });
    if (operation_counts.empty()) {
        operation_counts = other.operation_counts;
    } else {
        for (std::size_t i = 0; i < operation_counts.size() && i < other.operation_counts.size(); ++i) {
            operation_counts[i].second += other.operation_counts[i].second;
        }
    }
    as_printed_checks += other.as_printed_checks;
    as_printed_violations += other.as_printed_violations;
}

namespace {

constexpr std::array<const char*, 21> kOperations = {
    "hermite_hadamard",     "fejer",
    "hh_midpoint_gap_bounds", "hh_trapezoid_gap_bounds",
    "chord_gap_bounds",     "symmetric_pair_gap_bounds",
    "fejer_trapezoid_gap_bounds", "fejer_midpoint_gap_bounds",
    "bisection_bounds",     "complement_weight_chains",
    "h1_functional",        "h2_functional",
    "hh_gap_monotone",      "refined_gap_chains",
    "vasic_lackovic",       "mean",
    "al_gap_check",         "harmonic_log_gap_check",
    "identric_ratio_check", "young_ratio_bounds",
    "young_difference_bounds",
};

std::size_t op_index(const std::string& name) {
    for (std::size_t i = 0; i < kOperations.size(); ++i) {
        if (name == kOperations[i]) return i;
    }
    return kOperations.size();
}

// Records the outcome of each check of one trial.
class Trial {
public:
    Trial(int index, std::string recipe, double scale, double tol, TrialReport& out)
        : index_(index), recipe_(std::move(recipe)), scale_(scale), slack_(10.0 * tol * scale), out_(out) {}

    double slack() const { return slack_; }

    void executed(const char* op) { ++out_.operation_counts[op_index(op)].second; }

    // Runs `body`, which must record exactly `checks` outcomes; an exception
    // settles the ones it did not reach.
    template <class Body>
    void group(const char* op, int checks, Body&& body) {
        const long before = recorded();
        try {
            body();
        } catch (const Error& e) {
            settle(op, checks - static_cast<int>(recorded() - before), e.code() == ErrorCode::OracleNotConverged,
                   std::string(to_string(e.code())) + ": " + e.what());
        } catch (const std::exception& e) {
            settle(op, checks - static_cast<int>(recorded() - before), false, e.what());
        }
    }

    void enclosure(const char* op, const Enclosure& e, const target::TargetValue& v, const std::string& inputs) {
        if (!v.converged) {
            ++out_.inconclusive;
            return;
        }
        const double excess = std::max({0.0, e.lower() - v.value, v.value - e.upper()});
        if (excess > slack_) {
            std::ostringstream s;
            s << std::setprecision(17) << inputs << (inputs.empty() ? "" : "; ") << "target " << v.value
              << " outside [" << e.lower() << ", " << e.upper() << "]";
            fail(op, excess, s.str());
        } else {
            pass(excess);
        }
    }

    // first >= second >= floor, each within slack.
    void ordered(const char* op, double first, double second, double floor, const std::string& inputs) {
        const double excess = std::max({0.0, second - first, floor - second});
        if (excess > slack_) {
            std::ostringstream s;
            s << std::setprecision(17) << inputs << (inputs.empty() ? "" : "; ") << "expected " << first
              << " >= " << second << " >= " << floor;
            fail(op, excess, s.str());
        } else {
            pass(excess);
        }
    }

    // A sequence that must be nondecreasing, starting at zero.
    void nondecreasing(const char* op, const std::vector<double>& h, const std::string& inputs) {
        double excess = std::abs(h.front());
        for (std::size_t i = 1; i < h.size(); ++i) excess = std::max(excess, h[i - 1] - h[i]);
        if (excess > slack_) {
            std::ostringstream s;
            s << std::setprecision(17) << inputs << "; values";
            for (double v : h) s << " " << v;
            fail(op, excess, s.str());
        } else {
            pass(excess);
        }
    }

    // A closed-form comparison whose violation is `excess`, allowed up to `allowance`.
    void excess(const char* op, double excess, double allowance, const std::string& details) {
        if (excess > allowance) {
            fail(op, excess, details);
        } else {
            pass(std::max(0.0, excess));
        }
    }

    void as_printed(const Enclosure& e, const target::TargetValue& v) {
        if (!v.converged) return;
        ++out_.as_printed_checks;
        if (!enclosure_contains(e, v.value, slack_)) ++out_.as_printed_violations;
    }

private:
    long recorded() const { return out_.passed + out_.failed + out_.inconclusive; }

    void pass(double excess) {
        ++out_.passed;
        out_.worst_violation = std::max(out_.worst_violation, excess / scale_);
    }

    void fail(const char* op, double excess, std::string details) {
        ++out_.failed;
        out_.worst_violation = std::max(out_.worst_violation, excess / scale_);
        out_.failures.push_back({index_, op, recipe_, std::move(details)});
    }

    void settle(const char* op, int remaining, bool inconclusive, const std::string& why) {
        if (remaining <= 0) return;
        if (inconclusive) {
            out_.inconclusive += remaining;
            return;
        }
        out_.failed += remaining;
        out_.failures.push_back({index_, op, recipe_, "unexpected error: " + why});
    }

    int index_;
    std::string recipe_;
    double scale_;
    double slack_;
    TrialReport& out_;
};

double instance_scale(const ConvexInstance& inst) {
    const Interval& I = inst.interval;
    double fmax = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double x = i == 10 ? I.b() : I.a() + I.width() * i / 10.0;
        fmax = std::max(fmax, std::abs(inst.f(x)));
    }
    const double cmax = std::max(std::abs(inst.curvature.lower), std::abs(inst.curvature.upper));
    return std::max(1.0, I.width()) * std::max({1.0, fmax, cmax * I.width() * I.width()});
}

void run_bounds_checks(Trial& t, const ConvexInstance& inst, std::uint64_t seed, double qtol) {
    const FunctionSpec& f = inst.f;
    const Interval& I = inst.interval;
    const CurvatureBounds& c = inst.curvature;
    const WeightSpec g = random_symmetric_weight(splitmix64(seed ^ 0x11), I, true);
    const std::string weight = "g = " + to_string(g.function);

    t.group("hermite_hadamard", 1, [&] {
        const Enclosure e = hermite_hadamard(f, I);
        t.executed("hermite_hadamard");
        t.enclosure("hermite_hadamard", e, target::integral_mean(f, I, qtol), "");
    });
    t.group("fejer", 1, [&] {
        const Enclosure e = fejer(f, g, I, qtol);
        t.executed("fejer");
        t.enclosure("fejer", e, target::weighted_integral(f, g, I, qtol), weight);
    });
    t.group("hh_midpoint_gap_bounds", 1, [&] {
        const Enclosure e = hh_midpoint_gap_bounds(c, I);
        t.executed("hh_midpoint_gap_bounds");
        t.enclosure("hh_midpoint_gap_bounds", e, target::midpoint_gap(f, I, qtol), "");
    });
    t.group("hh_trapezoid_gap_bounds", 1, [&] {
        const Enclosure e = hh_trapezoid_gap_bounds(c, I);
        t.executed("hh_trapezoid_gap_bounds");
        t.enclosure("hh_trapezoid_gap_bounds", e, target::trapezoid_gap(f, I, qtol), "");
    });
    for (int i = 0; i <= 10; ++i) {
        const Lambda lambda(i / 10.0);
        const std::string inputs = "lambda = " + fmt_real(lambda.value());
        t.group("chord_gap_bounds", 1, [&] {
            const Enclosure e = chord_gap_bounds(c, I, lambda);
            t.executed("chord_gap_bounds");
            t.enclosure("chord_gap_bounds", e, {target::chord_gap(f, I, lambda), true}, inputs);
        });
    }
    for (int i = 0; i <= 10; ++i) {
        const Lambda lambda(i / 10.0);
        const std::string inputs = "lambda = " + fmt_real(lambda.value());
        t.group("symmetric_pair_gap_bounds", 1, [&] {
            const Enclosure e = symmetric_pair_gap_bounds(c, I, lambda);
            t.executed("symmetric_pair_gap_bounds");
            t.enclosure("symmetric_pair_gap_bounds", e, {target::symmetric_pair_gap(f, I, lambda), true},
                        inputs);
        });
    }
    t.group("fejer_trapezoid_gap_bounds", 1, [&] {
        const Enclosure e = fejer_trapezoid_gap_bounds(g, c, I, qtol);
        t.executed("fejer_trapezoid_gap_bounds");
        t.enclosure("fejer_trapezoid_gap_bounds", e, target::weighted_trapezoid_gap(f, g, I, qtol), weight);
    });
    t.group("fejer_midpoint_gap_bounds", 1, [&] {
        const Enclosure e = fejer_midpoint_gap_bounds(g, c, I, qtol);
        t.executed("fejer_midpoint_gap_bounds");
        t.enclosure("fejer_midpoint_gap_bounds", e, target::weighted_midpoint_gap(f, g, I, qtol), weight);
    });
    t.group("bisection_bounds", 2, [&] {
        const BisectionBounds b = bisection_bounds(c, I);
        t.executed("bisection_bounds");
        t.enclosure("bisection_bounds", b.trapezoid, target::bisection_trapezoid_gap(f, I, qtol), "trapezoid");
        const target::TargetValue mid = target::bisection_midpoint_gap(f, I, qtol);
        t.enclosure("bisection_bounds", b.midpoint, mid, "midpoint");
        t.as_printed(b.midpoint_as_printed, mid);
    });
    t.group("complement_weight_chains", 2, [&] {
        const ComplementChains ch = complement_weight_chains(f, g, c, I, qtol);
        t.executed("complement_weight_chains");
        t.ordered("complement_weight_chains", ch.lower.left, ch.lower.middle, ch.lower.right,
                  weight + "; m-side chain");
        t.ordered("complement_weight_chains", ch.upper.left, ch.upper.middle, ch.upper.right,
                  weight + "; M-side chain");
    });

    // The h1, h2 hypotheses include f' >= 0, which the raw draw does not ensure.
    const ConvexInstance rising = nondecreasing_variant(inst);
    const auto functional = [&](const char* op, Monotonicity direction, std::uint64_t salt, auto&& h) {
        t.group(op, 1, [&] {
            const WeightSpec w = random_monotone_weight(splitmix64(seed ^ salt), I, direction);
            std::vector<double> values;
            for (int i = 0; i <= 10; ++i) {
                const double x = i == 10 ? I.b() : I.a() + I.width() * i / 10.0;
                values.push_back(h(rising.f, w, I, x, qtol));
            }
            t.executed(op);
            t.nondecreasing(op, values, rising.recipe + "; g = " + to_string(w.function));
        });
    };
    functional("h1_functional", Monotonicity::Decreasing, 0x22,
               [](auto&&... args) { return h1_functional(args...); });
    functional("h2_functional", Monotonicity::Increasing, 0x33,
               [](auto&&... args) { return h2_functional(args...); });

    const double x = I.midpoint();
    t.group("hh_gap_monotone", 2, [&] {
        const GapMonotonePairs p = hh_gap_monotone(f, I, x, qtol);
        t.executed("hh_gap_monotone");
        t.ordered("hh_gap_monotone", p.trapezoid.first, p.trapezoid.second, 0.0, "trapezoid, x = midpoint");
        t.ordered("hh_gap_monotone", p.midpoint.first, p.midpoint.second, 0.0, "midpoint, x = midpoint");
    });
    t.group("refined_gap_chains", 2, [&] {
        const RefinedChains r = refined_gap_chains(f, c, I, x, qtol);
        t.executed("refined_gap_chains");
        t.ordered("refined_gap_chains", r.lower.first, r.lower.second, 0.0, "m-side, x = midpoint");
        t.ordered("refined_gap_chains", r.upper.first, r.upper.second, 0.0, "M-side, x = midpoint");
    });

    t.group("vasic_lackovic", 1, [&] {
        Draw d(splitmix64(seed ^ 0x44));
        const NodeWeights pq(d.uniform(0.25, 4.0), d.uniform(0.25, 4.0));
        const double radius = vasic_lackovic_radius(pq, I);
        const double y = d.chance(0.25) ? radius : radius * d.uniform(0.05, 1.0);
        const Interval W = vasic_lackovic_window(pq, I, y);
        const WeightSpec gw = random_symmetric_weight(splitmix64(seed ^ 0x55), W, false);
        const Enclosure e = vasic_lackovic(f, gw, pq, I, y, qtol);
        t.executed("vasic_lackovic");
        std::ostringstream inputs;
        inputs << std::setprecision(17) << "p = " << pq.p() << ", q = " << pq.q() << ", y = " << y
               << ", g = " << to_string(gw.function);
        t.enclosure("vasic_lackovic", e, target::weighted_integral(f, gw, W, qtol), inputs.str());
    });
}

void run_means_checks(Trial& t, std::uint64_t seed, double tol) {
    Draw d(splitmix64(seed ^ 0x66));
    double a = std::exp(d.uniform(std::log(0.1), std::log(10.0)));
    double b = std::exp(d.uniform(std::log(0.1), std::log(10.0)));
    if (a > b) std::swap(a, b);
    const double x = d.uniform(a, b);
    double p = d.chance(0.5) ? d.uniform(1.0, 4.0) : d.uniform(-3.0, -0.05);
    if (std::abs(p + 1.0) < 0.01) p = -1.5;
    const Lambda lambda(d.unit());
    std::ostringstream in;
    in << std::setprecision(17) << "a = " << a << ", b = " << b << ", x = " << x << ", p = " << p
       << ", lambda = " << lambda.value();
    const std::string inputs = in.str();
    // Closed forms: slack relative to the magnitude of the compared values.
    const auto allowance = [&](double v) { return 10.0 * tol * std::max(1.0, std::abs(v)); };
    const auto pair_excess = [](const OrderedPair& r, double floor) {
        return std::max(r.second - r.first, floor - r.second);
    };

    t.group("mean", 1, [&] {
        const double h = mean(MeanKind::Harmonic, a, b).value;
        const double g = mean(MeanKind::Geometric, a, b).value;
        const double l = mean(MeanKind::Logarithmic, a, b).value;
        const double i = mean(MeanKind::Identric, a, b).value;
        const double ar = mean(MeanKind::Arithmetic, a, b).value;
        t.executed("mean");
        t.excess("mean", std::max({h - g, g - l, l - i, i - ar}), allowance(ar),
                 inputs + "; H <= G <= L <= I <= A");
    });
    t.group("al_gap_check", 1, [&] {
        const OrderedPair r = al_gap_check(p, a, b, x);
        t.executed("al_gap_check");
        t.excess("al_gap_check", pair_excess(r, 0.0), allowance(r.first), inputs);
    });
    t.group("harmonic_log_gap_check", 1, [&] {
        const OrderedPair r = harmonic_log_gap_check(a, b, x);
        t.executed("harmonic_log_gap_check");
        t.excess("harmonic_log_gap_check", pair_excess(r, 0.0), allowance(r.first), inputs);
    });
    t.group("identric_ratio_check", 1, [&] {
        const OrderedPair r = identric_ratio_check(a, b, x);
        t.executed("identric_ratio_check");
        t.excess("identric_ratio_check", pair_excess(r, 1.0), allowance(r.first), inputs);
    });
    t.group("young_ratio_bounds", 1, [&] {
        const Enclosure e = young_ratio_bounds(a, b, lambda);
        t.executed("young_ratio_bounds");
        const double v = young_ratio(a, b, lambda);
        t.excess("young_ratio_bounds", std::max(e.lower() - v, v - e.upper()), allowance(v), inputs);
    });
    t.group("young_difference_bounds", 1, [&] {
        const Enclosure e = young_difference_bounds(a, b, lambda);
        t.executed("young_difference_bounds");
        const double v = young_difference(a, b, lambda);
        t.excess("young_difference_bounds", std::max(e.lower() - v, v - e.upper()), allowance(b), inputs);
    });
}

TrialReport run_trial(int index, std::uint64_t master, double tol) {
    TrialReport part;
    for (const char* op : kOperations) part.operation_counts.emplace_back(op, 0);
    const std::uint64_t seed = trial_seed(master, static_cast<std::uint64_t>(index));
    const ConvexInstance inst = random_convex_instance(seed);
    const double scale = instance_scale(inst);
    Trial t(index, inst.recipe, scale, tol, part);
    run_bounds_checks(t, inst, seed, tol * scale);
    // Means checks use closed forms of order-one magnitude.
    Trial m(index, inst.recipe, 1.0, tol, part);
    run_means_checks(m, seed, tol);
    return part;
}

}  // namespace

TrialReport falsify(int trials, std::uint64_t seed, double tol) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be ≥ 1");
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(ErrorCode::InvalidArgument, "tol must be positive and finite");
    }
    TrialReport report;
    report.seed = seed;
    report.trials = trials;
    report.tol = tol;
    for (int i = 0; i < trials; ++i) report.merge(run_trial(i, seed, tol));
    return report;
}

}  // namespace fejer
