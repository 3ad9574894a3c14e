#include <doctest.h>

#include <json.hpp>

#include "spchain/errors.hpp"
#include "spchain/report.hpp"

using namespace spchain;

TEST_CASE("groups scenario payload and assertions") {
    cli::ExperimentConfig cfg;
    cfg.scenario = "groups";
    auto report = cli::run(cfg);
    CHECK(report.all_passed());
    CHECK(report.results["facts"]["order"] == 16);
    CHECK(report.results["facts"]["center_order"] == 4);
    CHECK(report.results["facts"]["derived_order"] == 2);
    CHECK(report.results["facts"]["abelianization_order"] == 8);
    for (const auto& a : report.assertions) CHECK(a.pass);
}

TEST_CASE("reps scenario passes") {
    cli::ExperimentConfig cfg;
    cfg.scenario = "reps";
    auto report = cli::run(cfg);
    CHECK(report.all_passed());
    CHECK(report.results.contains("pauli_factor_system"));
}

TEST_CASE("json emission is deterministic modulo wall time") {
    cli::ExperimentConfig cfg;
    cfg.scenario = "reps";
    cfg.seed = 777;
    auto a = cli::run(cfg).to_json();
    auto b = cli::run(cfg).to_json();
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("elementary scenario at a small size") {
    cli::ExperimentConfig cfg;
    cfg.scenario = "elementary";
    cfg.n = 3;
    cfg.steps = 32;
    auto report = cli::run(cfg);
    CHECK(report.all_passed());
    CHECK(report.results["fidelity_vs_target"].get<double>() > 1 - 1e-6);
    CHECK(report.results["min_gap"].get<double>() > 0);

    // csv emission of the gap profile
    std::string csv = cli::emit(report, "csv");
    CHECK(csv.rfind("t,gap\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 34);  // header + steps+1 rows

    CHECK_THROWS_AS(cli::emit(report, "yaml"), UnsupportedFormat);
}

TEST_CASE("unknown scenario and bad axis are config errors") {
    cli::ExperimentConfig cfg;
    cfg.scenario = "nope";
    CHECK_THROWS_AS(cli::run(cfg), Error);
    cfg.scenario = "elementary";
    cfg.axis = "q";
    CHECK_THROWS_AS(cli::run(cfg), Error);
}

TEST_CASE("universality scenario") {
    cli::ExperimentConfig cfg;
    cfg.scenario = "universality";
    cfg.samples = 10;  // 100 random pairs
    auto report = cli::run(cfg);
    CHECK(report.all_passed());
    CHECK(report.results["report"]["all_reached"] == true);
}
