#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fejer/core.hpp"
#include "fejer/verify.hpp"

namespace fejer {

/// One inequality evaluated on concrete inputs, with the oracle's view of the
/// bracketed quantity.
struct Certificate {
    std::string rule;
    Interval interval{0.0, 0.0};
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string target;
    double lower = 0.0;
    double upper = 0.0;
    double oracle_value = 0.0;
    bool oracle_converged = true;
    bool contained = false;
    std::string curvature_provenance;
};

/// Fills `contained` as lower - slack <= oracle_value <= upper + slack.
Certificate make_certificate(std::string rule, const Interval& I,
                             std::vector<std::pair<std::string, std::string>> inputs,
                             const Enclosure& e, double oracle_value, bool oracle_converged,
                             double slack, std::string curvature_provenance);

/// JSON with keys in the fixed order rule, interval, inputs, enclosure,
/// oracle_value, oracle_converged, contained, curvature_provenance.
std::string to_json(const Certificate& c, int indent = 2);
std::string to_json(const std::vector<Certificate>& cs, int indent = 2);

/// JSON with keys seed, trials, passed, failed, inconclusive, worst_violation,
/// failures, then tol, operation_counts and as_printed.
std::string to_json(const TrialReport& r, int indent = 2);

}  // namespace fejer
