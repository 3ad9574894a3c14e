#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace spchain::cli {

inline constexpr const char* kVersion = "spchain 1.0.0";

struct ExperimentConfig {
    std::string scenario;  // groups | reps | gates | elementary | transistor | holonomy |
                           // two_qubit | universality | verify_all
    int n = 4;
    double beta = -1.0 / 3.0;
    std::string axis = "z";
    int steps = 512;
    int samples = 33;
    unsigned long long seed = 12345;
    std::string out_path;
    std::string format = "json";
    bool parallel = false;
    std::map<std::string, double> tolerances;    // --tol-* overrides
    std::string embeddings_path;                 // universality
    std::string schedule_overrides_path;         // chain scenarios
};

struct Assertion {
    std::string name;
    double tolerance = 0.0;
    double residual = 0.0;
    bool pass = false;
};

struct Report {
    std::string scenario;
    nlohmann::json results;
    std::vector<Assertion> assertions;
    double wall_ms = 0.0;
    std::string version = kVersion;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

/// Dispatches to the owning module; deterministic given config and seed.
Report run(const ExperimentConfig& config);

/// json: the full payload; csv: tabular profiles only ("t,gap").
std::string emit(const Report& report, const std::string& format);

}  // namespace spchain::cli
