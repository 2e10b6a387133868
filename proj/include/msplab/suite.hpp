#pragma once

#include <string>
#include <vector>

#include "msplab/report.hpp"

namespace msplab {

struct Criterion {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::vector<CheckResult> checks;

    std::string line() const;  // one PASS/FAIL line
    json to_json() const;
};

// the ten acceptance criteria at their fixed parameters
std::vector<Criterion> acceptance_criteria();
Criterion run_criterion(int number);

// every check for one target at the given N, q-order and z-window (0: default)
std::vector<CheckResult> verify_all(int k, int N, int order, int zdepth);

// passes iff `c` failed; for mutation controls
CheckResult expect_failure(const CheckResult& c, const std::string& id);

}  // namespace msplab
