#include "spchain/universality.hpp"

#include <cmath>
#include <numbers>

#include "spchain/errors.hpp"

namespace spchain::uni {

namespace {
constexpr double kPi = std::numbers::pi;

Mat pauli(int k) {
    Mat m(2, 2);
    switch (k) {
        case 0: m << 0, 1, 1, 0; break;
        case 1: m << 0, cx(0, -1), cx(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

Mat n_dot_sigma(const Vec3& n) { return n(0) * pauli(0) + n(1) * pauli(1) + n(2) * pauli(2); }
}  // namespace

void Embedding::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(axes[i].norm() - 1.0) > 1e-12) throw NotUnitAxis("embedding axis not unit");
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(axes[i].dot(axes[j])) > 1e-12)
                throw AxesNotOrthogonal("embedding axes not orthogonal");
    }
    if ((axes[0].cross(axes[1]) - axes[2]).norm() > 1e-10)
        throw AxesNotOrthogonal("embedding must be right-handed");
}

LogicalRotation rotation_about(const Vec3& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw NotUnitAxis("rotation axis must be unit");
    LogicalRotation r;
    r.axis = axis;
    r.angle = angle;
    r.matrix = std::cos(angle / 2) * Mat::Identity(2, 2) +
               cx(0, std::sin(angle / 2)) * n_dot_sigma(axis);
    return r;
}

LogicalRotation pi_rotation(const Vec3& axis) { return rotation_about(axis, kPi); }

LogicalRotation compose_pi_rotations(const Vec3& m, const Vec3& mp) {
    if (std::abs(m.norm() - 1.0) > 1e-12 || std::abs(mp.norm() - 1.0) > 1e-12)
        throw NotUnitAxis("axes must be unit");
    Vec3 cross = m.cross(mp);
    if (cross.norm() < 1e-12) throw ParallelAxes("composition axis is degenerate");
    // (i mp.s)(i m.s) = -(m.mp) 1 + i (m x mp).s  =  exp(-i acos(m.mp) n.s) up
    // to a global sign, n = normalized m x mp.
    double dot = std::clamp(m.dot(mp), -1.0, 1.0);
    LogicalRotation r = rotation_about(cross.normalized(), -2.0 * std::acos(dot));
    Mat direct = pi_rotation(mp).matrix * pi_rotation(m).matrix;
    if (trace_fidelity(r.matrix, direct) < 1.0 - 1e-10)
        throw Error("geometric composition disagrees with the SU(2) product");
    return r;
}

LogicalRotation predict_chain_gate(const Embedding& e, int axis_index) {
    e.validate();
    if (axis_index < 0 || axis_index > 2) throw ConfigError("axis index must be 0, 1 or 2");
    return pi_rotation(e.axes[axis_index]);
}

std::vector<Embedding> standard_embeddings() {
    auto rot_z = [](double angle, const Vec3& v) {
        return Vec3(std::cos(angle) * v(0) - std::sin(angle) * v(1),
                    std::sin(angle) * v(0) + std::cos(angle) * v(1), v(2));
    };
    Vec3 x(1, 0, 0), y(0, 1, 0), z(0, 0, 1);
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Embedding> out;
    out.push_back({{x, y, z}, "standard"});
    out.push_back({{rot_z(-kPi / 4, x), rot_z(-kPi / 4, y), z}, "rot_z(-pi/4)"});
    out.push_back({{rot_z(-kPi / 8, x), rot_z(-kPi / 8, y), z}, "rot_z(-pi/8)"});
    out.push_back({{Vec3(s, 0, s), Vec3(s, 0, -s), Vec3(0, 1, 0)}, "mu_nu"});
    for (auto& e : out) e.validate();
    return out;
}

namespace {

struct Reached {
    Mat matrix;
    int depth;
    std::vector<std::string> word;
};

bool same_up_to_phase(const Mat& a, const Mat& b, double tol) {
    return trace_fidelity(a, b) > 1.0 - tol;
}

}  // namespace

GateSetReport embedding_gate_set(const std::vector<Embedding>& embeddings, int max_depth,
                                 double tol) {
    GateSetReport report;
    std::vector<std::string> labels;
    for (const Embedding& e : embeddings) {
        e.validate();
        const char* names[3] = {"a1", "a2", "a3"};
        for (int k = 0; k < 3; ++k) {
            report.rotations.push_back(pi_rotation(e.axes[k]));
            labels.push_back(e.label + ":" + names[k]);
        }
    }

    std::vector<Reached> found;
    found.push_back({Mat::Identity(2, 2), 0, {}});
    size_t frontier_begin = 0;
    for (int depth = 1; depth <= max_depth; ++depth) {
        size_t frontier_end = found.size();
        for (size_t f = frontier_begin; f < frontier_end; ++f)
            for (size_t g = 0; g < report.rotations.size(); ++g) {
                Mat m = report.rotations[g].matrix * found[f].matrix;
                bool dup = false;
                for (const Reached& r : found)
                    if (same_up_to_phase(r.matrix, m, 1e-9)) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                Reached r{std::move(m), depth, found[f].word};
                r.word.push_back(labels[g]);
                found.push_back(std::move(r));
            }
        frontier_begin = frontier_end;
    }

    Mat hadamard(2, 2), phase(2, 2), t_gate(2, 2);
    hadamard << 1, 1, 1, -1;
    hadamard /= std::sqrt(2.0);
    phase << 1, 0, 0, cx(0, 1);
    t_gate << 1, 0, 0, std::polar(1.0, kPi / 4);
    const std::vector<std::pair<std::string, Mat>> targets{
        {"H", hadamard}, {"S", phase}, {"T", t_gate}};

    report.all_reached = true;
    for (const auto& [name, target] : targets) {
        TargetResult tr;
        tr.name = name;
        for (const Reached& r : found) {
            double fid = trace_fidelity(target, r.matrix);
            if (fid > tr.fidelity) {
                tr.fidelity = fid;
                tr.depth = r.depth;
                tr.word = r.word;
            }
        }
        tr.reached = tr.fidelity > 1.0 - tol;
        report.all_reached = report.all_reached && tr.reached;
        report.targets.push_back(std::move(tr));
    }
    return report;
}

std::vector<Mat> matrix_closure(const std::vector<Mat>& generators, int max_size, double tol) {
    if (generators.empty()) throw Error("no generators");
    const Eigen::Index d = generators[0].rows();
    std::vector<Mat> elems{Mat::Identity(d, d)};
    auto known = [&](const Mat& m) {
        for (const Mat& e : elems)
            if ((e - m).cwiseAbs().maxCoeff() < tol) return true;
        return false;
    };
    for (size_t head = 0; head < elems.size(); ++head)
        for (const Mat& g : generators) {
            Mat p = elems[head] * g;
            if (!known(p)) {
                elems.push_back(p);
                if (static_cast<int>(elems.size()) > max_size)
                    throw Error("closure exceeded max_size");
            }
        }
    return elems;
}

nlohmann::json to_json(const GateSetReport& report) {
    nlohmann::json j;
    j["num_rotations"] = report.rotations.size();
    j["all_reached"] = report.all_reached;
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : report.targets) {
        nlohmann::json e;
        e["name"] = t.name;
        e["reached"] = t.reached;
        e["depth"] = t.depth;
        e["word"] = t.word;
        e["fidelity"] = t.fidelity;
        ts.push_back(std::move(e));
    }
    j["targets"] = std::move(ts);
    return j;
}

}  // namespace spchain::uni
