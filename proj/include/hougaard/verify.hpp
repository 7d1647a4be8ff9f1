#pragma once

#include <string>
#include <vector>

#include "hougaard/stats.hpp"

namespace hougaard::verify {

struct SuiteResult {
    std::string name;
    std::string title;
    std::vector<StatReport> reports;
    bool passed = false;
};

/// Canonical suite names (a1 .. a11) in run order.
std::vector<std::string> suite_names();

/// Resolves aliases (params, ss, moments, tweedie-scaling, fhm-variance,
/// fhm-cgf, corr-sign, lamperti, psd, rg, h1) to canonical names; throws
/// std::invalid_argument for unknown suites.
std::string resolve_suite(const std::string& name);

/// Runs one suite. quick shrinks the Monte Carlo sizes of the heavy suites
/// (same thresholds; the SE-based bands widen accordingly). Seeds are baked
/// into each suite so the run is deterministic.
SuiteResult run_suite(const std::string& name, bool quick = false, unsigned threads = 1);

}  // namespace hougaard::verify
