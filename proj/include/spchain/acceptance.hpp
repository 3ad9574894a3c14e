#pragma once

#include <string>
#include <vector>

namespace spchain::acceptance {

struct Check {
    std::string name;
    double tolerance = 0.0;
    double residual = 0.0;
    bool pass = false;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool pass = false;
    std::string note;
};

struct Options {
    int only = 0;  // 0: run all criteria; k: run only criterion k
    int elementary_steps = 512;
    int two_qubit_steps = 256;
    int gap_samples = 33;
    unsigned long long seed = 12345;
};

std::vector<CriterionResult> run_criteria(const Options& opts);

}  // namespace spchain::acceptance
