#pragma once

#include <json.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "spchain/gatechan.hpp"
#include "spchain/projrep.hpp"

namespace spchain::mps {

using projrep::ProjectiveRep;

/// Rank-3 tensor A^i_{ab} (physical index i, virtual a,b) intertwining a
/// linear physical representation U_g with a projective virtual one V_g:
///     V_g A^i V_g^dag = sum_j A^j (U_g)_{ji}.
/// Index convention: A^i maps the right virtual index to the left one, i.e.
/// (A^i)_{ab} has a as the row (left) index.
struct SymmetricMPSTensor {
    int phys_dim = 0;
    int virt_dim = 0;
    std::vector<Mat> a;   // a[i] is virt_dim x virt_dim
    std::vector<Mat> u;   // U_g per group element, phys_dim x phys_dim
    ProjectiveRep v;      // virtual projective representation
    // For built-in tensors: character index (into groups::characters(v.group))
    // carried by each physical basis state, when the basis is a character basis.
    std::optional<std::vector<int>> phys_char;
};

struct SymmetryReport {
    double max_residual = 0.0;
    double u_rep_residual = 0.0;  // U_g U_h vs U_{gh}
    bool pass = false;
};

SymmetryReport check_symmetric(const SymmetricMPSTensor& t, double tol = 1e-10);

/// A[psi] = sum_i A^i <i|psi>.  Warns (does not rescale) if psi is not normalized.
Mat project_physical(const SymmetricMPSTensor& t, const Vec& psi);

/// A = sum_chi W_chi (x) <chi| from a gate table and an orthonormal assignment
/// of physical basis states to (distinct) characters.
SymmetricMPSTensor from_fixed_points(const gates::GateTable& table,
                                     const std::vector<std::pair<int, Vec>>& chi_states);

/// AKLT tensor: A = sum_{m in {x,y,z}} sigma^m (x) <m| in the |m> basis
/// (|m> = zero eigenvector of the spin-1 S^m), with U_g the spin-1 pi-rotations
/// and V_g the Pauli matrices.
SymmetricMPSTensor aklt_tensor();

/// Cluster tensor on a grouped pair of qubits:
/// A = I (x) <++| + sx (x) <+-| + sz (x) <-+| - i sy (x) <--|,
/// with U_g generated by sx (x) 1 and 1 (x) sx on the pair.
SymmetricMPSTensor cluster_tensor();

/// Transfer matrix sum_i A^i (x) conj(A^i) on the doubled virtual space.
Mat transfer_matrix(const SymmetricMPSTensor& t);

nlohmann::json to_json(const SymmetricMPSTensor& t);

}  // namespace spchain::mps
