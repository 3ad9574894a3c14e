#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "spchain/errors.hpp"
#include "spchain/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"spchain: symmetry-protected spin-chain gate laboratory"};
    app.require_subcommand(0, 1);

    spchain::cli::ExperimentConfig cfg;
    std::vector<std::string> tol_overrides;

    const std::vector<std::string> scenarios{"groups",    "reps",      "gates",
                                             "elementary", "transistor", "holonomy",
                                             "two_qubit", "universality", "verify_all"};
    for (const std::string& name : scenarios) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " scenario");
        sub->callback([&cfg, name] { cfg.scenario = name; });
    }

    app.add_option("--scenario", cfg.scenario, "scenario name (alternative to the subcommand)");
    app.add_option("--n", cfg.n, "chain length (spin-1 sites; per chain for two_qubit)");
    app.add_option("--beta", cfg.beta, "biquadratic coupling strength");
    app.add_option("--axis", cfg.axis, "field axis: x, y or z");
    app.add_option("--steps", cfg.steps, "transport steps (even)");
    app.add_option("--samples", cfg.samples, "profile samples / property-test batch scale");
    app.add_option("--seed", cfg.seed, "seed for randomized property checks");
    app.add_option("--out", cfg.out_path, "write the report to this path instead of stdout");
    app.add_option("--format", cfg.format, "json or csv");
    app.add_flag("--parallel", cfg.parallel, "fan out independent scenarios (verify_all)");
    app.add_option("--embeddings", cfg.embeddings_path, "embeddings JSON file (universality)");
    app.add_option("--schedule-overrides", cfg.schedule_overrides_path,
                   "declarative schedule override file (term label + ramp + interval)");
    app.add_option("--tol", tol_overrides,
                   "tolerance override key=value (keys: fidelity, convergence, symmetry, "
                   "cocycle, projector, reach)")
        ->take_all();

    CLI11_PARSE(app, argc, argv);

    if (cfg.scenario.empty()) {
        std::cerr << "no scenario given; see --help\n";
        return 2;
    }
    for (const std::string& kv : tol_overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "bad --tol override '" << kv << "' (want key=value)\n";
            return 2;
        }
        cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }

    try {
        spchain::cli::Report report = spchain::cli::run(cfg);
        std::string doc = spchain::cli::emit(report, cfg.format);
        if (cfg.out_path.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(cfg.out_path);
            if (!out) {
                std::cerr << "cannot write " << cfg.out_path << "\n";
                return 2;
            }
            out << doc;
        }
        return report.all_passed() ? 0 : 1;
    } catch (const spchain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
