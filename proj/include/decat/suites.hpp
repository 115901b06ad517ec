#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace decat {
namespace suites {

struct SuiteOptions {
    long seed = 0;
    std::map<std::string, long> bounds;  // per-suite overrides; defaults match acceptance

    long get(const std::string& key, long dflt) const {
        auto it = bounds.find(key);
        return it == bounds.end() ? dflt : it->second;
    }
};

struct CheckResult {
    std::string id;
    std::string params;
    bool pass = false;
    std::string witness;  // counterexample description on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool ok() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// The acceptance-criteria batteries, one per criterion row (1..12).
SuiteReport run_criterion(int row, const SuiteOptions& opts = {});
int num_criteria();
std::string criterion_title(int row);

}  // namespace suites
}  // namespace decat
