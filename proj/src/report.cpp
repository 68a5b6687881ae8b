#include "fejer/report.hpp"

#include <json.hpp>

namespace fejer {

namespace {

using Json = nlohmann::ordered_json;

Json value_of(const Certificate& c) {
    Json inputs = Json::object();
    for (const auto& [key, value] : c.inputs) inputs[key] = value;
    Json j;
    j["rule"] = c.rule;
    j["interval"] = {{"a", c.interval.a()}, {"b", c.interval.b()}};
    j["inputs"] = std::move(inputs);
    j["enclosure"] = {{"lower", c.lower}, {"upper", c.upper}};
    j["oracle_value"] = c.oracle_value;
    j["oracle_converged"] = c.oracle_converged;
    j["contained"] = c.contained;
    j["curvature_provenance"] = c.curvature_provenance;
    return j;
}

}  // namespace

Certificate make_certificate(std::string rule, const Interval& I,
                             std::vector<std::pair<std::string, std::string>> inputs,
                             const Enclosure& e, double oracle_value, bool oracle_converged,
                             double slack, std::string curvature_provenance) {
    Certificate c;
    c.rule = std::move(rule);
    c.interval = I;
    c.inputs = std::move(inputs);
    c.target = e.target();
    c.lower = e.lower();
    c.upper = e.upper();
    c.oracle_value = oracle_value;
    c.oracle_converged = oracle_converged;
    c.contained = enclosure_contains(e, oracle_value, slack);
    c.curvature_provenance = std::move(curvature_provenance);
    return c;
}

std::string to_json(const Certificate& c, int indent) { return value_of(c).dump(indent); }

std::string to_json(const std::vector<Certificate>& cs, int indent) {
    Json arr = Json::array();
    for (const Certificate& c : cs) arr.push_back(value_of(c));
    return arr.dump(indent);
}

std::string to_json(const TrialReport& r, int indent) {
    Json failures = Json::array();
    for (const Failure& f : r.failures) {
        failures.push_back(
            {{"trial", f.trial}, {"recipe", f.recipe}, {"operation", f.operation}, {"details", f.details}});
    }
    Json counts = Json::object();
    for (const auto& [op, n] : r.operation_counts) counts[op] = n;
    Json j;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["inconclusive"] = r.inconclusive;
    j["worst_violation"] = r.worst_violation;
    j["failures"] = std::move(failures);
    j["tol"] = r.tol;
    j["operation_counts"] = std::move(counts);
    j["as_printed"] = {{"rule", std::string(to_string(Rule::BisectionMidpointGapAsPrinted))},
                       {"checks", r.as_printed_checks},
                       {"violations", r.as_printed_violations}};
    return j.dump(indent);
}

}  // namespace fejer
