#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "spchain/groups.hpp"
#include "spchain/linalg.hpp"

namespace spchain::projrep {

using groups::Character;
using groups::FiniteGroup;

/// A projective unitary representation g -> V_g: V_g V_h = omega(g,h) V_{gh}.
struct ProjectiveRep {
    FiniteGroup group;
    int dim = 0;
    std::vector<Mat> matrices;  // indexed by element

    const Mat& operator[](int g) const { return matrices[g]; }
    /// Unitarity + projective closure; throws NotProjective on failure.
    void validate(double tol = 1e-10) const;
};

/// Factor system omega(g,h): unit-modulus values satisfying the 2-cocycle
/// identity omega(g,h) omega(gh,k) = omega(h,k) omega(g,hk).
struct FactorSystem {
    FiniteGroup group;
    Mat omega;  // order x order

    cx operator()(int g, int h) const { return omega(g, h); }
    double cocycle_residual() const;
    void validate(double tol = 1e-10) const;
};

/// A phase function beta: G -> U(1) defining a gauge (2-coboundary) change.
struct GaugeFunction {
    std::vector<cx> values;

    void validate(double tol = 1e-10) const;
};

/// Extract omega from V_g V_h = omega(g,h) V_{gh}; throws NotProjective if
/// some product fails to be proportional to V_{gh}.
FactorSystem factor_system_of(const ProjectiveRep& rep, double tol = 1e-10);

FactorSystem trivial_factor_system(const FiniteGroup& g);

/// phi_omega(a) = sum_b omega(a,b) omega^*(b,a).  Gauge-invariant on the
/// center of the group; equals |G| everywhere for a trivial cocycle.
cx phi(const FactorSystem& fs, int a);

/// Some central element with phi differing from |G| (a sufficient certificate
/// that the cohomology class is nontrivial), or nullopt if none exists.
/// Absence is inconclusive, not a triviality proof.
std::optional<int> nontriviality_certificate(const FactorSystem& fs, double tol = 1e-6);

/// omega'(g,h) = omega(g,h) beta(g) beta(h) / beta(gh).
FactorSystem gauge_transform(const FactorSystem& fs, const GaugeFunction& beta);

/// True iff omega/nu is a coboundary.  Both cocycles must take values on the
/// finite phase lattice of 2|G|-th roots of unity (throws NotRootOfUnity);
/// the test is exact integer linear algebra modulo 2|G| (Smith-normal-form
/// style elimination).
bool are_equivalent(const FactorSystem& omega, const FactorSystem& nu);

/// Dimension of the commutant {M : M V_g = V_g M for all g}.
int commutant_dimension(const ProjectiveRep& rep, double tol = 1e-8);
inline bool is_irreducible(const ProjectiveRep& rep) { return commutant_dimension(rep) == 1; }

// -- Built-in representations ------------------------------------------------

/// Pauli representation of Z2xZ2: e->I, x->sx, y->sy, z->sz.
ProjectiveRep pauli_rep();

/// The half (x) half projective representation of G2 = D2 semidirect Z4 on two
/// qubits: alpha -> exp(i pi/4 sz) (x) exp(i pi/2 sx), beta -> exp(i pi/2 su) (x)
/// exp(i pi/2 su) with u = (x+y)/sqrt(2).
ProjectiveRep half_half_rep();

ProjectiveRep trivial_rep(const FiniteGroup& g, int dim = 1);

/// Section built by breadth-first multiplication of generator matrices.
ProjectiveRep rep_from_generators(const FiniteGroup& g,
                                  const std::vector<std::pair<int, Mat>>& gens);

ProjectiveRep direct_sum(const ProjectiveRep& a, const ProjectiveRep& b);

/// V'_g = beta(g) V_g.
ProjectiveRep rephase(const ProjectiveRep& rep, const GaugeFunction& beta);

/// Phase exponents k(g,h) with omega = exp(2 pi i k / (2|G|)); used for the
/// JSON export of factor systems.
nlohmann::json to_json(const FactorSystem& fs);

}  // namespace spchain::projrep
