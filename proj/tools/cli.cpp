#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>

#include "fejer/bounds.hpp"
#include "fejer/means.hpp"
#include "fejer/report.hpp"
#include "fejer/targets.hpp"
#include "fejer/verify.hpp"

namespace fejer::cli {

namespace {

std::string num(double v) { return fmt::format("{:.12g}", v); }

using Inputs = std::vector<std::pair<std::string, std::string>>;

const std::vector<std::string> kBoundsRules = {
    "hermite-hadamard",        "fejer",
    "chord-gap",               "symmetric-pair-gap",
    "midpoint-gap",            "trapezoid-gap",
    "fejer-trapezoid-gap",     "fejer-midpoint-gap",
    "bisection-trapezoid-gap", "bisection-midpoint-gap",
    "bisection-midpoint-gap-as-printed",
    "complement-chains",       "h1",
    "h2",                      "gap-monotone",
    "refined-chains",          "vasic-lackovic",
};

struct BoundsArgs {
    std::string f;
    std::string g;
    double a = 0.0;
    double b = 0.0;
    double lambda = 0.25;
    std::optional<double> m;
    std::optional<double> M;
    std::string rule = "all";
    double tol = kDefaultTolerance;
    bool json = false;
    bool require_exact = false;
    std::optional<double> x;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> y;
};

// second in [floor, max(first, floor)], with first >= floor as well.
Certificate chain_certificate(std::string rule, const Interval& I, Inputs inputs, std::string target,
                              double first, double second, double floor, double slack,
                              std::string provenance) {
    Certificate c;
    c.rule = std::move(rule);
    c.interval = I;
    c.inputs = std::move(inputs);
    c.target = std::move(target);
    c.lower = floor;
    c.upper = std::max(first, floor);
    c.oracle_value = second;
    c.oracle_converged = true;
    c.contained = first >= floor - slack && second >= floor - slack && second <= first + slack;
    c.curvature_provenance = std::move(provenance);
    return c;
}

class BoundsRun {
public:
    BoundsRun(const BoundsArgs& args, const Interval& I)
        : args_(args), I_(I), f_(FunctionSpec::parse(args.f)), slack_(10.0 * args.tol) {}

    std::vector<Certificate> run(const std::vector<std::string>& rules) {
        for (const std::string& r : rules) dispatch(r);
        return std::move(out_);
    }

    // Rules applicable to the given inputs, in canonical order.
    std::vector<std::string> applicable() {
        std::vector<std::string> rules;
        const bool wide = !I_.degenerate();
        for (const std::string& r : kBoundsRules) {
            if (r == "bisection-midpoint-gap-as-printed") continue;
            if (!wide && (r == "hermite-hadamard" || r == "gap-monotone" || r == "refined-chains")) continue;
            const bool needs_g = r == "fejer" || r.rfind("fejer-", 0) == 0 || r == "complement-chains" ||
                                 r == "h1" || r == "h2" || r == "vasic-lackovic";
            if (needs_g && args_.g.empty()) continue;
            if (r == "vasic-lackovic" && !(args_.p && args_.q && args_.y)) continue;
            if (!wide && needs_g && r != "vasic-lackovic") continue;
            if (r == "complement-chains" && !weight().range01) continue;
            if (r == "fejer" || r.rfind("fejer-", 0) == 0 || r == "complement-chains") {
                if (!weight().symmetric) continue;
            }
            if (r == "h1" && weight().monotone != Monotonicity::Decreasing &&
                weight().monotone != Monotonicity::Constant) {
                continue;
            }
            if (r == "h2" && weight().monotone != Monotonicity::Increasing &&
                weight().monotone != Monotonicity::Constant) {
                continue;
            }
            rules.push_back(r);
        }
        return rules;
    }

private:
    const WeightSpec& weight() {
        if (args_.g.empty()) throw Error(ErrorCode::InvalidArgument, "this rule needs a weight (--g)");
        if (!g_) g_ = describe_weight(args_.g, I_);
        return *g_;
    }

    const CurvatureBounds& curvature() {
        if (c_) return *c_;
        if (args_.m.has_value() != args_.M.has_value()) {
            throw Error(ErrorCode::InvalidArgument, "--m and --M must be given together");
        }
        if (args_.m) {
            c_ = CurvatureBounds(*args_.m, *args_.M, Provenance::UserSupplied);
        } else {
            c_ = curvature_range(f_, I_);
            if (args_.require_exact && c_->provenance != Provenance::Exact) {
                throw Error(ErrorCode::InvalidArgument,
                            "--require-exact: curvature bounds for '" + f_.text() +
                                "' are only a sampled estimate; pass --m and --M or drop --require-exact");
            }
        }
        return *c_;
    }

    std::string provenance() { return std::string(to_string(curvature().provenance)); }

    double point() {
        const double x = args_.x.value_or(I_.midpoint());
        return x;
    }

    Inputs inputs(bool with_curvature, bool with_g = false, bool with_lambda = false, bool with_x = false) {
        Inputs in{{"f", f_.text()}};
        if (with_g) in.emplace_back("g", to_string(weight().function));
        if (with_lambda) in.emplace_back("lambda", num(args_.lambda));
        if (with_x) in.emplace_back("x", num(point()));
        if (with_curvature) {
            in.emplace_back("m", num(curvature().lower));
            in.emplace_back("M", num(curvature().upper));
        }
        in.emplace_back("tol", num(args_.tol));
        return in;
    }

    void add(const std::string& rule, Inputs in, const Enclosure& e, const target::TargetValue& v,
             std::string provenance) {
        out_.push_back(make_certificate(rule, I_, std::move(in), e, v.value, v.converged, slack_,
                                        std::move(provenance)));
    }

    void dispatch(const std::string& r) {
        const double tol = args_.tol;
        const std::string unused = "not-used";
        if (r == "hermite-hadamard") {
            add(r, inputs(false), hermite_hadamard(f_, I_), target::integral_mean(f_, I_, tol), unused);
        } else if (r == "fejer") {
            add(r, inputs(false, true), fejer(f_, weight(), I_, tol),
                target::weighted_integral(f_, weight(), I_, tol), unused);
        } else if (r == "chord-gap") {
            const Lambda l(args_.lambda);
            add(r, inputs(true, false, true), chord_gap_bounds(curvature(), I_, l),
                {target::chord_gap(f_, I_, l), true}, provenance());
        } else if (r == "symmetric-pair-gap") {
            const Lambda l(args_.lambda);
            add(r, inputs(true, false, true), symmetric_pair_gap_bounds(curvature(), I_, l),
                {target::symmetric_pair_gap(f_, I_, l), true}, provenance());
        } else if (r == "midpoint-gap") {
            add(r, inputs(true), hh_midpoint_gap_bounds(curvature(), I_), target::midpoint_gap(f_, I_, tol),
                provenance());
        } else if (r == "trapezoid-gap") {
            add(r, inputs(true), hh_trapezoid_gap_bounds(curvature(), I_), target::trapezoid_gap(f_, I_, tol),
                provenance());
        } else if (r == "fejer-trapezoid-gap") {
            add(r, inputs(true, true), fejer_trapezoid_gap_bounds(weight(), curvature(), I_, tol),
                target::weighted_trapezoid_gap(f_, weight(), I_, tol), provenance());
        } else if (r == "fejer-midpoint-gap") {
            add(r, inputs(true, true), fejer_midpoint_gap_bounds(weight(), curvature(), I_, tol),
                target::weighted_midpoint_gap(f_, weight(), I_, tol), provenance());
        } else if (r == "bisection-trapezoid-gap") {
            require_wide(r);
            add(r, inputs(true), bisection_bounds(curvature(), I_).trapezoid,
                target::bisection_trapezoid_gap(f_, I_, tol), provenance());
        } else if (r == "bisection-midpoint-gap") {
            require_wide(r);
            add(r, inputs(true), bisection_bounds(curvature(), I_).midpoint,
                target::bisection_midpoint_gap(f_, I_, tol), provenance());
        } else if (r == "bisection-midpoint-gap-as-printed") {
            require_wide(r);
            add(r, inputs(true), bisection_bounds(curvature(), I_).midpoint_as_printed,
                target::bisection_midpoint_gap(f_, I_, tol), provenance());
        } else if (r == "complement-chains") {
            const ComplementChains ch = complement_weight_chains(f_, weight(), curvature(), I_, tol);
            out_.push_back(chain_certificate("complement-chain-m", I_, inputs(true, true),
                                             "((f(a)+f(b))/2) int g - int f g - (m/2) int (t-a)(b-t) g",
                                             ch.lower.left, ch.lower.middle, ch.lower.right, slack_,
                                             provenance()));
            out_.push_back(chain_certificate("complement-chain-M", I_, inputs(true, true),
                                             "(M/2) int (t-a)(b-t) g - ((f(a)+f(b))/2) int g + int f g",
                                             ch.upper.left, ch.upper.middle, ch.upper.right, slack_,
                                             provenance()));
        } else if (r == "h1" || r == "h2") {
            const bool first = r == "h1";
            const auto h = [&](double x) {
                return first ? h1_functional(f_, weight(), I_, x, tol) : h2_functional(f_, weight(), I_, x, tol);
            };
            out_.push_back(chain_certificate(r, I_, inputs(false, true, false, true), r + "(x)", h(I_.b()),
                                             h(point()), 0.0, slack_, unused));
        } else if (r == "gap-monotone") {
            const GapMonotonePairs p = hh_gap_monotone(f_, I_, point(), tol);
            out_.push_back(chain_certificate("gap-monotone-trapezoid", I_, inputs(false, false, false, true),
                                             "((x-a)/(b-a)) trapezoid gap on [a, x]", p.trapezoid.first,
                                             p.trapezoid.second, 0.0, slack_, unused));
            out_.push_back(chain_certificate("gap-monotone-midpoint", I_, inputs(false, false, false, true),
                                             "((x-a)/(b-a)) midpoint gap on [a, x]", p.midpoint.first,
                                             p.midpoint.second, 0.0, slack_, unused));
        } else if (r == "refined-chains") {
            const RefinedChains rc = refined_gap_chains(f_, curvature(), I_, point(), tol);
            out_.push_back(chain_certificate("refined-chain-m", I_, inputs(true, false, false, true),
                                             "((x-a)/(b-a)) (midpoint gap on [a, x] - m (x-a)^2/24)",
                                             rc.lower.first, rc.lower.second, 0.0, slack_, provenance()));
            out_.push_back(chain_certificate("refined-chain-M", I_, inputs(true, false, false, true),
                                             "((x-a)/(b-a)) (M (x-a)^2/8 - midpoint gap on [a, x])",
                                             rc.upper.first, rc.upper.second, 0.0, slack_, provenance()));
        } else if (r == "vasic-lackovic") {
            if (!(args_.p && args_.q && args_.y)) {
                throw Error(ErrorCode::InvalidArgument, "vasic-lackovic needs --p, --q and --y");
            }
            const NodeWeights pq(*args_.p, *args_.q);
            const Interval W = vasic_lackovic_window(pq, I_, *args_.y);
            const WeightSpec gw = describe_weight(args_.g.empty() ? std::string("1") : args_.g, W);
            Inputs in{{"f", f_.text()}, {"g", to_string(gw.function)}, {"p", num(pq.p())},
                      {"q", num(pq.q())},   {"y", num(*args_.y)},          {"tol", num(tol)}};
            add(r, std::move(in), vasic_lackovic(f_, gw, pq, I_, *args_.y, tol),
                target::weighted_integral(f_, gw, W, tol), unused);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown rule '" + r + "'");
        }
    }

    void require_wide(const std::string& r) {
        if (I_.degenerate()) throw Error(ErrorCode::InvalidInterval, r + " needs a < b");
    }

    const BoundsArgs& args_;
    Interval I_;
    FunctionSpec f_;
    double slack_;
    std::optional<WeightSpec> g_;
    std::optional<CurvatureBounds> c_;
    std::vector<Certificate> out_;
};

void print_certificates(const std::vector<Certificate>& cs, std::ostream& out) {
    for (const Certificate& c : cs) {
        fmt::print(out, "{} on [{}, {}]\n", c.rule, num(c.interval.a()), num(c.interval.b()));
        std::string inputs;
        for (const auto& [k, v] : c.inputs) inputs += (inputs.empty() ? "" : ", ") + k + " = " + v;
        fmt::print(out, "  inputs:    {}\n", inputs);
        fmt::print(out, "  target:    {}\n", c.target);
        fmt::print(out, "  enclosure: [{}, {}]\n", num(c.lower), num(c.upper));
        fmt::print(out, "  oracle:    {}{}\n", num(c.oracle_value), c.oracle_converged ? "" : " (not converged)");
        fmt::print(out, "  contained: {}\n", c.contained ? "yes" : "NO");
        fmt::print(out, "  curvature: {}\n", c.curvature_provenance);
    }
}

int finish(const std::vector<Certificate>& cs, bool json, std::ostream& out, std::ostream& err) {
    if (json) {
        out << to_json(cs) << "\n";
    } else {
        print_certificates(cs, out);
    }
    const bool unconverged = std::any_of(cs.begin(), cs.end(), [](const Certificate& c) { return !c.oracle_converged; });
    const bool violated = std::any_of(cs.begin(), cs.end(),
                                      [](const Certificate& c) { return c.oracle_converged && !c.contained; });
    if (violated) {
        err << "violation: at least one certificate does not contain its oracle value\n";
        return 2;
    }
    if (unconverged) {
        err << "error: the quadrature oracle did not converge; try a larger --tol\n";
        return 1;
    }
    return 0;
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
    const NormalizedInterval n = make_interval(args.a, args.b);
    if (n.swapped) {
        (args.json ? err : out) << fmt::format("note: a > b, endpoints swapped to [{}, {}]\n",
                                               num(n.interval.a()), num(n.interval.b()));
    }
    if (!(args.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    BoundsRun run(args, n.interval);
    std::vector<std::string> rules;
    if (args.rule == "all") {
        rules = run.applicable();
    } else {
        rules.push_back(args.rule == "hh" ? "hermite-hadamard" : args.rule);
    }
    return finish(run.run(rules), args.json, out, err);
}

int cmd_young(double a, double b, double lambda, const std::string& form, double tol, bool json,
              std::ostream& out, std::ostream& err) {
    const Lambda l(lambda);
    if (!(a > 0.0) || !(b > 0.0)) {
        throw Error(ErrorCode::NonpositiveInput, "young needs a > 0 and b > 0");
    }
    const Interval I = make_interval(a, b).interval;
    Inputs in{{"a", num(a)}, {"b", num(b)}, {"lambda", num(lambda)}};
    if (a > b) in.emplace_back("note", "a > b: evaluated as alpha = b <= beta = a with weight 1 - lambda on alpha");
    std::vector<Certificate> cs;
    const double slack = 10.0 * tol;
    if (form == "ratio" || form == "both") {
        cs.push_back(make_certificate("young-ratio", I, in, young_ratio_bounds(a, b, l), young_ratio(a, b, l),
                                      true, slack, "not-used"));
    }
    if (form == "difference" || form == "both") {
        cs.push_back(make_certificate("young-difference", I, in, young_difference_bounds(a, b, l),
                                      young_difference(a, b, l), true, slack, "not-used"));
    }
    return finish(cs, json, out, err);
}

int cmd_means(double a, double b, double p, std::ostream& out) {
    const double h = mean(MeanKind::Harmonic, a, b).value;
    const double g = mean(MeanKind::Geometric, a, b).value;
    const double l = mean(MeanKind::Logarithmic, a, b).value;
    const double i = mean(MeanKind::Identric, a, b).value;
    const double ar = mean(MeanKind::Arithmetic, a, b).value;
    const double ap = mean(MeanKind::Power, a, b, p).value;
    const double lp = mean(MeanKind::PLog, a, b, p).value;
    fmt::print(out, "means of a = {}, b = {}\n", num(a), num(b));
    const auto row = [&](const std::string& name, double v) { fmt::print(out, "  {:<8} {}\n", name, num(v)); };
    row("A", ar);
    row("G", g);
    row("H", h);
    row("L", l);
    row("I", i);
    row(describe(MeanKind::Power, p), ap);
    row(describe(MeanKind::PLog, p), lp);
    const auto flag = [](bool ok) { return ok ? "yes" : "no"; };
    fmt::print(out, "ordering\n");
    fmt::print(out, "  H <= G  {}\n", flag(h <= g));
    fmt::print(out, "  G <= L  {}\n", flag(g <= l));
    fmt::print(out, "  L <= I  {}\n", flag(l <= i));
    fmt::print(out, "  I <= A  {}\n", flag(i <= ar));
    return 0;
}

int cmd_verify(int trials, std::uint64_t seed, double tol, std::ostream& out) {
    const TrialReport r = falsify(trials, seed, tol);
    out << to_json(r) << "\n";
    return r.failed == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified enclosures for Hermite-Hadamard and Fejer type inequalities", "fejer"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    CLI::App* b = app.add_subcommand("bounds", "Enclose gaps and weighted integrals of a convex f");
    b->add_option("--f", bounds.f, "Convex function of x, e.g. \"exp(x)\"")->required();
    b->add_option("--a", bounds.a, "Left endpoint")->required();
    b->add_option("--b", bounds.b, "Right endpoint")->required();
    b->add_option("--g", bounds.g, "Nonnegative weight g(x)");
    b->add_option("--lambda", bounds.lambda, "Convex-combination parameter in [0, 1]")->capture_default_str();
    b->add_option("--m", bounds.m, "Lower bound on f''");
    b->add_option("--M", bounds.M, "Upper bound on f''");
    std::string rule_help = "Rule name, hh, or all:";
    for (const std::string& r : kBoundsRules) rule_help += " " + r;
    b->add_option("--rule", bounds.rule, rule_help)->capture_default_str();
    b->add_option("--tol", bounds.tol, "Quadrature tolerance")->capture_default_str();
    b->add_flag("--json", bounds.json, "Emit JSON certificates");
    b->add_flag("--require-exact", bounds.require_exact, "Refuse sampled curvature estimates");
    b->add_option("--x", bounds.x, "Subinterval end for h1, h2, gap-monotone, refined-chains");
    b->add_option("--p", bounds.p, "Node weight p for vasic-lackovic");
    b->add_option("--q", bounds.q, "Node weight q for vasic-lackovic");
    b->add_option("--y", bounds.y, "Window half-width for vasic-lackovic");

    double ya = 0.0;
    double yb = 0.0;
    double ylambda = 0.5;
    std::string form = "both";
    double ytol = kDefaultTolerance;
    bool yjson = false;
    CLI::App* y = app.add_subcommand("young", "Refined Young inequality for a, b > 0");
    y->add_option("--a", ya, "First argument")->required();
    y->add_option("--b", yb, "Second argument")->required();
    y->add_option("--lambda", ylambda, "Weight of a, in [0, 1]")->required();
    y->add_option("--form", form, "ratio, difference or both")->capture_default_str()
        ->check(CLI::IsMember({"ratio", "difference", "both"}));
    y->add_option("--tol", ytol, "Containment slack is 10 tol")->capture_default_str();
    y->add_flag("--json", yjson, "Emit JSON certificates");

    double ma = 0.0;
    double mb = 0.0;
    double mp = 2.0;
    CLI::App* m = app.add_subcommand("means", "Special means of a, b > 0");
    m->add_option("--a", ma, "First argument")->required();
    m->add_option("--b", mb, "Second argument")->required();
    m->add_option("--p", mp, "Order of the power and p-logarithmic means")->capture_default_str();

    int trials = 0;
    std::uint64_t seed = 0;
    double vtol = kDefaultTolerance;
    CLI::App* v = app.add_subcommand("verify", "Randomized falsification of every inequality");
    v->add_option("--trials", trials, "Number of trials")->required();
    v->add_option("--seed", seed, "Master seed")->required();
    v->add_option("--tol", vtol, "Oracle tolerance")->capture_default_str();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("fejer");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*b) return cmd_bounds(bounds, out, err);
        if (*y) return cmd_young(ya, yb, ylambda, form, ytol, yjson, out, err);
        if (*m) return cmd_means(ma, mb, mp, out);
        if (*v) {
            if (trials < 1) {
                err << "error: trials must be ≥ 1\n";
                return 1;
            }
            return cmd_verify(trials, seed, vtol, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace fejer::cli
