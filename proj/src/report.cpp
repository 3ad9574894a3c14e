#include "spchain/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "spchain/acceptance.hpp"
#include "spchain/chain.hpp"
#include "spchain/errors.hpp"
#include "spchain/gatechan.hpp"
#include "spchain/groups.hpp"
#include "spchain/mps.hpp"
#include "spchain/projrep.hpp"
#include "spchain/universality.hpp"

namespace spchain::cli {

namespace {

constexpr double kPi = std::numbers::pi;

nlohmann::json mat_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(nlohmann::json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

double tol_or(const ExperimentConfig& cfg, const std::string& key, double fallback) {
    auto it = cfg.tolerances.find(key);
    return it == cfg.tolerances.end() ? fallback : it->second;
}

chain::Vec3 parse_axis(const std::string& name) {
    if (name == "x") return chain::Vec3(1, 0, 0);
    if (name == "y") return chain::Vec3(0, 1, 0);
    if (name == "z") return chain::Vec3(0, 0, 1);
    throw ConfigError("axis must be x, y or z (got '" + name + "')");
}

chain::Vec3 next_orthogonal(const std::string& name) {
    if (name == "z") return chain::Vec3(1, 0, 0);  // z -> x
    if (name == "x") return chain::Vec3(0, 1, 0);  // x -> y
    return chain::Vec3(0, 0, 1);                   // y -> z
}

void push(Report& r, const std::string& name, double residual, double tol) {
    r.assertions.push_back({name, tol, residual, residual <= tol});
}

void push_bool(Report& r, const std::string& name, bool ok) {
    r.assertions.push_back({name, 0.5, ok ? 0.0 : 1.0, ok});
}

nlohmann::json profile_json(const std::vector<std::pair<double, double>>& prof) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& [t, g] : prof) p.push_back(nlohmann::json::array({t, g}));
    return p;
}

void apply_schedule_overrides(chain::ScheduledHamiltonian& sched, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open schedule override file " + path);
    nlohmann::json doc;
    in >> doc;
    for (const auto& entry : doc) {
        std::string label = entry.at("label").get<std::string>();
        std::string ramp = entry.at("ramp").get<std::string>();
        double t0 = 0.0, t1 = 1.0;
        if (entry.contains("interval")) {
            t0 = entry["interval"][0].get<double>();
            t1 = entry["interval"][1].get<double>();
        }
        if (!(t0 < t1)) throw ConfigError("override interval must satisfy t0 < t1");
        chain::Schedule inner = chain::schedule_named(ramp);
        bool matched = false;
        for (auto& st : sched.terms) {
            if (st.term.label != label) continue;
            matched = true;
            auto fn = inner.fn;
            st.schedule = chain::Schedule{
                [fn, t0, t1](double t) {
                    double s = (t - t0) / (t1 - t0);
                    return fn(std::clamp(s, 0.0, 1.0));
                },
                inner.name + "[" + std::to_string(t0) + "," + std::to_string(t1) + "]"};
        }
        if (!matched) throw ConfigError("no schedule term labeled '" + label + "'");
    }
}

nlohmann::json holonomy_json(const chain::HolonomyResult& res, const Mat& target) {
    nlohmann::json j;
    j["gate"] = mat_json(res.logical_unitary);
    j["fidelity_vs_target"] = trace_fidelity(target, res.logical_unitary);
    j["min_gap"] = res.min_gap;
    j["steps"] = res.steps;
    j["converged"] = true;
    j["convergence"] = res.convergence;
    j["frame_residual"] = res.frame_residual;
    j["degeneracy"] = res.degeneracy;
    return j;
}

Mat pauli_for_axis(const std::string& axis) {
    Mat m(2, 2);
    if (axis == "x")
        m << 0, 1, 1, 0;
    else if (axis == "y")
        m << 0, cx(0, -1), cx(0, 1), 0;
    else
        m << 1, 0, 0, -1;
    return m;
}

Report run_groups(const ExperimentConfig&) {
    Report r;
    r.scenario = "groups";
    auto g2 = groups::build_g2();
    auto zc = groups::center(g2.group);
    auto dsub = groups::derived_subgroup(g2.group);
    auto ab = groups::abelianization(g2.group);
    push_bool(r, "order(G2) == 16", g2.group.order == 16);
    push_bool(r, "order(center) == 4", zc.order() == 4);
    push_bool(r, "order(derived) == 2", dsub.order() == 2);
    push_bool(r, "order(abelianization) == 8", ab.quotient.order == 8);
    push_bool(r, "G2 iso D2xZ4 semidirect model",
              groups::is_isomorphic(g2.group, groups::build_named_group("D2_semidirect_Z4")));
    r.results["g2"] = groups::to_json(g2.group);
    r.results["facts"] = {{"order", g2.group.order},
                          {"center_order", zc.order()},
                          {"derived_order", dsub.order()},
                          {"abelianization_order", ab.quotient.order},
                          {"characters", groups::characters(g2.group).size()}};
    for (const char* name : {"Z2", "Z4", "Z2xZ2"})
        r.results[name] = groups::to_json(groups::build_named_group(name));
    return r;
}

Report run_reps(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "reps";
    auto pauli = projrep::pauli_rep();
    auto fs = projrep::factor_system_of(pauli);
    auto hh = projrep::half_half_rep();
    auto fs2 = projrep::factor_system_of(hh);
    auto trivial = projrep::trivial_factor_system(fs.group);

    push(r, "pauli cocycle residual", fs.cocycle_residual(), tol_or(cfg, "cocycle", 1e-10));
    push(r, "half_half cocycle residual", fs2.cocycle_residual(), tol_or(cfg, "cocycle", 1e-10));
    double phi_nonid = 0.0;
    for (int a = 1; a < 4; ++a) phi_nonid = std::max(phi_nonid, std::abs(projrep::phi(fs, a)));
    push(r, "phi == 0 off identity (pauli)", phi_nonid, 1e-12);
    push_bool(r, "pauli certificate", projrep::nontriviality_certificate(fs).has_value());
    push_bool(r, "half_half certificate", projrep::nontriviality_certificate(fs2).has_value());
    push_bool(r, "pauli class != trivial", !projrep::are_equivalent(fs, trivial));
    push_bool(r, "pauli commutant == 1", projrep::commutant_dimension(pauli) == 1);
    push_bool(r, "half_half commutant == 1", projrep::commutant_dimension(hh) == 1);
    push_bool(r, "reducible control commutant >= 2",
              projrep::commutant_dimension(projrep::direct_sum(pauli, pauli)) >= 2);

    // Gauge invariance of phi on the center under a random lattice gauge.
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(0, 7);
    projrep::GaugeFunction beta;
    for (int g = 0; g < 4; ++g) beta.values.push_back(std::polar(1.0, 2 * kPi * pick(rng) / 8.0));
    auto gauged = projrep::gauge_transform(fs, beta);
    double drift = 0.0;
    for (int a = 0; a < 4; ++a)
        drift = std::max(drift, std::abs(projrep::phi(fs, a) - projrep::phi(gauged, a)));
    push(r, "phi gauge-invariant on center", drift, 1e-9);
    push_bool(r, "gauge transform stays in class", projrep::are_equivalent(fs, gauged));

    r.results["pauli_factor_system"] = projrep::to_json(fs);
    r.results["half_half_factor_system"] = projrep::to_json(fs2);
    nlohmann::json phis = nlohmann::json::array();
    for (int a = 0; a < fs2.group.order; ++a) {
        cx v = projrep::phi(fs2, a);
        phis.push_back(nlohmann::json::array({v.real(), v.imag()}));
    }
    r.results["half_half_phi"] = std::move(phis);
    return r;
}

Report run_gates(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "gates";
    auto pauli_table = gates::gate_table(projrep::pauli_rep());
    auto hh_table = gates::gate_table(projrep::half_half_rep());
    push(r, "pauli projector algebra",
         gates::check_projector_algebra(projrep::pauli_rep()).max_residual,
         tol_or(cfg, "projector", 1e-10));
    push(r, "half_half projector algebra",
         gates::check_projector_algebra(projrep::half_half_rep()).max_residual,
         tol_or(cfg, "projector", 1e-10));
    push(r, "pauli group law", pauli_table.max_group_law_residual(), 1e-9);
    push(r, "half_half group law", hh_table.max_group_law_residual(), 1e-9);
    push(r, "pauli intertwining", pauli_table.max_intertwining_residual(), 1e-9);
    push(r, "half_half intertwining", hh_table.max_intertwining_residual(), 1e-9);
    push_bool(r, "half_half table complete", hh_table.missing.empty());

    auto aklt = mps::aklt_tensor();
    auto cluster = mps::cluster_tensor();
    push(r, "aklt symmetry", mps::check_symmetric(aklt).max_residual, 1e-10);
    push(r, "cluster symmetry", mps::check_symmetric(cluster).max_residual, 1e-10);
    auto chars = groups::characters(aklt.v.group);
    double fp = 0.0;
    for (int i = 0; i < 3; ++i) {
        Vec e = Vec::Zero(3);
        e(i) = 1.0;
        Mat a_chi = mps::project_physical(aklt, e);
        fp = std::max(fp, (gates::apply_gamma(aklt.v, chars[(*aklt.phys_char)[i]], a_chi) - a_chi)
                              .norm());
    }
    push(r, "aklt blocks are channel fixed points", fp, 1e-10);

    r.results["pauli_gate_table"] = gates::to_json(pauli_table);
    r.results["half_half_gate_table"] = gates::to_json(hh_table);
    r.results["aklt"] = mps::to_json(aklt);
    r.results["cluster"] = mps::to_json(cluster);
    return r;
}

Report run_elementary(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "elementary";
    auto sched = chain::elementary_gate_schedule(cfg.n, 0, cfg.beta, parse_axis(cfg.axis));
    if (!cfg.schedule_overrides_path.empty())
        apply_schedule_overrides(sched, cfg.schedule_overrides_path);
    auto res = chain::transport_holonomy(sched, cfg.steps, sched.logical_in, sched.logical_out);
    Mat target = pauli_for_axis(cfg.axis);
    push(r, "gate matches the character's fixed point",
         1.0 - trace_fidelity(target, res.logical_unitary), tol_or(cfg, "fidelity", 1e-6));
    push(r, "step-doubling convergence", res.convergence, tol_or(cfg, "convergence", 1e-6));
    std::vector<double> times;
    for (int i = 0; i <= 10; ++i) times.push_back(i / 10.0);
    double sym = 0.0;
    for (const auto& op : sched.conserved)
        sym = std::max(sym, chain::symmetry_residual(sched, op, times));
    push(r, "symmetry preserved", sym, tol_or(cfg, "symmetry", 1e-10));
    r.results = holonomy_json(res, target);
    r.results["gap_profile"] = profile_json(res.gap_profile);
    return r;
}

Report run_transistor(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "transistor";
    auto sched = chain::transistor_schedule(cfg.n, cfg.beta, parse_axis(cfg.axis));
    if (!cfg.schedule_overrides_path.empty())
        apply_schedule_overrides(sched, cfg.schedule_overrides_path);
    auto res = chain::transport_holonomy(sched, cfg.steps, sched.logical_in, sched.logical_out);
    Mat target = pauli_for_axis(cfg.axis);
    push(r, "crossfade gate equals the elementary gate",
         1.0 - trace_fidelity(target, res.logical_unitary), tol_or(cfg, "fidelity", 1e-4));
    r.results = holonomy_json(res, target);
    r.results["identity_fidelity"] =
        trace_fidelity(Mat::Identity(2, 2), res.logical_unitary);
    auto prof = chain::gap_profile(sched, cfg.samples);
    r.results["gap_profile"] = profile_json(prof);
    auto sched_next = chain::transistor_schedule(cfg.n + 1, cfg.beta, parse_axis(cfg.axis));
    auto prof_next = chain::gap_profile(sched_next, cfg.samples);
    r.results["gap_profile_next_n"] = profile_json(prof_next);
    auto min_of = [](const std::vector<std::pair<double, double>>& p) {
        double m = p.front().second;
        for (const auto& [t, g] : p) m = std::min(m, g);
        return m;
    };
    push_bool(r, "min gap positive", min_of(prof) > 0);
    push_bool(r, "min gap decreases with N", min_of(prof_next) < min_of(prof));
    return r;
}

Report run_holonomy(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "holonomy";
    chain::Vec3 m = parse_axis(cfg.axis);
    chain::Vec3 mp = next_orthogonal(cfg.axis);
    auto sched = chain::single_qubit_holonomy_schedule(cfg.n, cfg.beta, m, mp);
    if (!cfg.schedule_overrides_path.empty())
        apply_schedule_overrides(sched, cfg.schedule_overrides_path);
    auto res = chain::transport_holonomy(sched, cfg.steps, sched.logical_in, sched.logical_out);
    uni::Vec3 third = uni::Vec3(m(0), m(1), m(2)).cross(uni::Vec3(mp(0), mp(1), mp(2)));
    Mat target = uni::rotation_about(third, kPi).matrix;
    push(r, "holonomy is a pi-rotation about m x m'",
         1.0 - trace_fidelity(target, res.logical_unitary), tol_or(cfg, "fidelity", 1e-4));
    push(r, "step-doubling convergence", res.convergence, tol_or(cfg, "convergence", 1e-6));
    r.results = holonomy_json(res, target);
    r.results["gap_profile"] = profile_json(res.gap_profile);
    return r;
}

Report run_two_qubit(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "two_qubit";
    auto sched = chain::two_qubit_gate_schedule(cfg.n, cfg.beta);
    if (!cfg.schedule_overrides_path.empty())
        apply_schedule_overrides(sched, cfg.schedule_overrides_path);
    auto res = chain::transport_holonomy(sched, cfg.steps, sched.logical_in, sched.logical_out);
    Mat cz = Mat::Identity(4, 4);
    cz(3, 3) = -1;
    Mat x(2, 2);
    x << 0, 1, 1, 0;
    Mat target = kron(x, x) * cz;
    push(r, "gate == (XX)CZ", 1.0 - trace_fidelity(target, res.logical_unitary),
         tol_or(cfg, "fidelity", 0.01));
    r.results = holonomy_json(res, target);
    r.results["gap_profile"] = profile_json(res.gap_profile);
    Vec xi = chain::xi_state();
    auto gs = chain::ground_space(chain::two_qubit_coupling_matrix());
    push_bool(r, "coupling ground space one-dimensional", gs.degeneracy == 1);
    push(r, "coupling ground state is xi", 1.0 - std::abs(gs.frame.col(0).dot(xi)), 1e-12);
    return r;
}

Report run_universality(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "universality";
    std::vector<uni::Embedding> embeddings;
    if (cfg.embeddings_path.empty()) {
        embeddings = uni::standard_embeddings();
    } else {
        std::ifstream in(cfg.embeddings_path);
        if (!in) throw ConfigError("cannot open embeddings file " + cfg.embeddings_path);
        nlohmann::json doc;
        in >> doc;
        for (const auto& e : doc) {
            uni::Embedding emb;
            emb.label = e.at("label").get<std::string>();
            for (int k = 0; k < 3; ++k)
                emb.axes[k] = uni::Vec3(e.at("axes")[k][0].get<double>(),
                                        e.at("axes")[k][1].get<double>(),
                                        e.at("axes")[k][2].get<double>());
            emb.validate();
            embeddings.push_back(std::move(emb));
        }
    }
    auto report = uni::embedding_gate_set(embeddings);
    for (const auto& t : report.targets)
        push(r, "reach " + t.name, 1.0 - t.fidelity, tol_or(cfg, "reach", 1e-10));
    r.results["report"] = uni::to_json(report);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> dist;
    double worst = 0.0;
    int done = 0;
    while (done < cfg.samples * 10) {
        uni::Vec3 a(dist(rng), dist(rng), dist(rng)), b(dist(rng), dist(rng), dist(rng));
        if (a.norm() < 1e-3 || b.norm() < 1e-3) continue;
        a.normalize();
        b.normalize();
        if (std::abs(a.dot(b)) > 1.0 - 1e-6) continue;
        Mat direct = uni::pi_rotation(b).matrix * uni::pi_rotation(a).matrix;
        worst = std::max(worst,
                         1.0 - trace_fidelity(uni::compose_pi_rotations(a, b).matrix, direct));
        ++done;
    }
    push(r, "composition formula vs SU(2) products", worst, 1e-10);
    return r;
}

Report run_verify_all(const ExperimentConfig& cfg) {
    Report r;
    r.scenario = "verify_all";
    acceptance::Options opts;
    opts.seed = cfg.seed;
    std::vector<acceptance::CriterionResult> results;
    if (cfg.parallel) {
        std::vector<std::future<std::vector<acceptance::CriterionResult>>> futures;
        for (int k = 1; k <= 12; ++k)
            futures.push_back(std::async(std::launch::async, [opts, k] {
                acceptance::Options o = opts;
                o.only = k;
                return acceptance::run_criteria(o);
            }));
        for (auto& f : futures)
            for (auto& c : f.get()) results.push_back(std::move(c));
    } else {
        results = acceptance::run_criteria(opts);
    }
    nlohmann::json crits = nlohmann::json::array();
    for (const auto& c : results) {
        for (const auto& chk : c.checks)
            r.assertions.push_back(
                {"c" + std::to_string(c.index) + ": " + chk.name, chk.tolerance, chk.residual,
                 chk.pass});
        nlohmann::json cj;
        cj["index"] = c.index;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["seconds"] = c.seconds;
        if (!c.note.empty()) cj["note"] = c.note;
        crits.push_back(std::move(cj));
    }
    r.results["criteria"] = std::move(crits);
    return r;
}

}  // namespace

bool Report::all_passed() const {
    for (const auto& a : assertions)
        if (!a.pass) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["scenario"] = scenario;
    j["results"] = results;
    nlohmann::json as = nlohmann::json::array();
    for (const auto& a : assertions)
        as.push_back({{"name", a.name},
                      {"tolerance", a.tolerance},
                      {"residual", a.residual},
                      {"pass", a.pass}});
    j["assertions"] = std::move(as);
    j["all_passed"] = all_passed();
    j["wall_ms"] = wall_ms;
    j["version"] = version;
    return j;
}

Report run(const ExperimentConfig& config) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    try {
        if (config.scenario == "groups")
            r = run_groups(config);
        else if (config.scenario == "reps")
            r = run_reps(config);
        else if (config.scenario == "gates")
            r = run_gates(config);
        else if (config.scenario == "elementary")
            r = run_elementary(config);
        else if (config.scenario == "transistor")
            r = run_transistor(config);
        else if (config.scenario == "holonomy")
            r = run_holonomy(config);
        else if (config.scenario == "two_qubit")
            r = run_two_qubit(config);
        else if (config.scenario == "universality")
            r = run_universality(config);
        else if (config.scenario == "verify_all")
            r = run_verify_all(config);
        else
            throw ConfigError("unknown scenario '" + config.scenario + "'");
    } catch (const Error& e) {
        throw Error("scenario " + config.scenario + ": " + e.what());
    }
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string emit(const Report& report, const std::string& format) {
    if (format == "json") return report.to_json().dump(2) + "\n";
    if (format == "csv") {
        if (!report.results.contains("gap_profile"))
            throw UnsupportedFormat("csv output requires a profile payload");
        std::ostringstream out;
        out << "t,gap\n";
        for (const auto& row : report.results["gap_profile"])
            out << row[0].get<double>() << "," << row[1].get<double>() << "\n";
        return out.str();
    }
    throw UnsupportedFormat("format must be json or csv");
}

}  // namespace spchain::cli
