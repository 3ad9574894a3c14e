#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <string>
#include <vector>

#include "spchain/linalg.hpp"

namespace spchain::uni {

using Vec3 = Eigen::Vector3d;

/// An orthonormal, right-handed triple of rotation axes fixing one embedding
/// of the pi-rotation group inside the full rotation group.
struct Embedding {
    std::array<Vec3, 3> axes;
    std::string label;

    void validate() const;  // orthonormal, right-handed
};

struct LogicalRotation {
    Vec3 axis;
    double angle = 0.0;
    Mat matrix;  // 2x2, exp(i (angle/2) n.sigma), det = 1
};

/// SU(2) convention: exp(+i (theta/2) n.sigma).
LogicalRotation rotation_about(const Vec3& axis, double angle);

/// Pi-rotation about a unit axis; matrix = i n.sigma.  Throws NotUnitAxis.
LogicalRotation pi_rotation(const Vec3& axis);

/// Product of pi-rotations about m then mp: a rotation by 2 acos(m.mp) about
/// the (normalized) m x mp axis, sense fixed by the SU(2) convention above.
/// Asserts agreement between the geometric formula and the 2x2 product up to
/// a global phase.  Throws ParallelAxes when m and mp are (anti)parallel.
LogicalRotation compose_pi_rotations(const Vec3& m, const Vec3& mp);

/// The pi-rotation a decouple/recouple holonomy with the given embedding axis
/// should implement (target for chain-level fidelity checks).
LogicalRotation predict_chain_gate(const Embedding& e, int axis_index);

struct TargetResult {
    std::string name;
    bool reached = false;
    int depth = 0;                  // number of pi-rotations multiplied
    std::vector<std::string> word;  // axis labels, first applied first
    double fidelity = 0.0;
};

struct GateSetReport {
    std::vector<LogicalRotation> rotations;  // available generators
    std::vector<TargetResult> targets;       // H, S, T
    bool all_reached = false;
};

/// Enumerates products of the embeddings' pi-rotations (bounded depth,
/// deduplicated up to global phase) and reports whether the Hadamard, Phase
/// and pi/8 gates are reached exactly up to a global phase.
GateSetReport embedding_gate_set(const std::vector<Embedding>& embeddings, int max_depth = 4,
                                 double tol = 1e-10);

/// The four embeddings used for the universal single-qubit construction:
/// standard (x,y,z); standard rotated by -pi/4 and by -pi/8 about z; and
/// (mu, nu, y) with mu = (x+z)/sqrt2, nu = (x-z)/sqrt2.
std::vector<Embedding> standard_embeddings();

/// Group closure of a set of SU(2) matrices under multiplication with exact
/// (tolerance) dedup; used to verify the quaternion-group closure of one
/// embedding's pi-rotations.
std::vector<Mat> matrix_closure(const std::vector<Mat>& generators, int max_size = 64,
                                double tol = 1e-9);

nlohmann::json to_json(const GateSetReport& report);

}  // namespace spchain::uni
