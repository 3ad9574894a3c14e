#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "spchain/projrep.hpp"

namespace spchain::gates {

using groups::Character;
using projrep::ProjectiveRep;

/// Gamma_chi(M) = (1/|G|) sum_g chi(g) V_g M V_g^dag.
Mat apply_gamma(const ProjectiveRep& rep, const Character& chi, const Mat& m);

/// Dense dim^2 x dim^2 matrix of the channel acting on vec(M), column-major.
Mat gamma_superoperator(const ProjectiveRep& rep, const Character& chi);

/// Unitary fixed point of Gamma_chi for an irreducible rep, phase-gauged so the
/// largest-modulus entry is real positive.  nullopt when the channel has no
/// nonzero fixed point.  Throws DegenerateFixedSpace if the eigenvalue-1 space
/// has dimension > 1 (a reducible rep slipped through) and NonUnitaryFixedPoint
/// if the normalized fixed point fails unitarity.
std::optional<Mat> fixed_point(const ProjectiveRep& rep, const Character& chi);

/// The group of elementary gates: one fixed point per character, with the
/// phases alpha(chi,phi) from W_chi W_phi = alpha W_{chi phi}.
struct GateTable {
    ProjectiveRep rep;
    std::vector<Character> chars;
    std::vector<std::optional<Mat>> entries;  // per character
    Mat alpha;                                // alpha(i,j); NaN where undefined
    std::vector<int> missing;                 // characters with no fixed point

    /// Index of the character equal to chars[i] * chars[j] (pointwise).
    int char_product(int i, int j) const;
    double max_intertwining_residual() const;
    double max_group_law_residual() const;
    /// max over nontrivial chi of |tr W_chi| (faithfulness: < dim - eps).
    double max_nontrivial_trace() const;
};

GateTable gate_table(const ProjectiveRep& rep);

/// Exhaustive check of Gamma_chi . Gamma_phi = delta_{chi phi} Gamma_chi over a
/// full matrix-space basis.
struct ProjectorAlgebraReport {
    double max_residual = 0.0;
    bool pass = false;
    double tol = 1e-10;
};
ProjectorAlgebraReport check_projector_algebra(const ProjectiveRep& rep, double tol = 1e-10);

nlohmann::json to_json(const GateTable& table);

}  // namespace spchain::gates
