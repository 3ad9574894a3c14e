#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spchain/apply.hpp"
#include "spchain/chain_types.hpp"

namespace spchain::chain {

using Vec3 = Eigen::Vector3d;

// -- Spin operators -----------------------------------------------------------

/// Standard angular momentum matrices (Sx, Sy, Sz) in the Sz eigenbasis
/// ordered (+s, ..., -s); [Sx,Sy] = i Sz and cyclic.
std::array<Mat, 3> spin_operators(double spin);

/// exp(i angle n.S) for the given spin; the paper's pi-rotations are
/// spin_rotation(s, axis, pi).
Mat spin_rotation(double spin, const Vec3& axis, double angle);

// -- Hamiltonian building blocks ----------------------------------------------

/// Two-site bilinear-biquadratic coupling J (S.S - beta (S.S)^2) on spin-1.
Mat haldane_coupling(double J, double beta);

/// Heisenberg coupling J S.s between a spin-1 and the terminal spin-1/2.
Mat edge_coupling(double J);

/// N-1 nearest-neighbor terms on an open spin-1 chain.  Warns outside the
/// Haldane range -1 < beta < 1; throws BadChainLength for N < 2.
std::vector<OperatorTerm> haldane_hamiltonian(const ChainLayout& layout, int n, double J,
                                              double beta);

/// N spin-1 sites terminated by one spin-1/2, with bulk Haldane terms plus the
/// boundary Heisenberg coupling.
struct EdgeCoupledChain {
    ChainLayout layout;
    std::vector<OperatorTerm> terms;
};
EdgeCoupledChain edge_coupled_chain(int n, double J, double beta);

/// Single-site field (n.S)^2 on a spin-1 site; unique ground state |S^n = 0>.
OperatorTerm uniform_field_term(const ChainLayout& layout, int site, const Vec3& axis,
                                double J = 1.0);

/// Two-chain boundary coupling
/// W = [(Sx)^2-(Sy)^2] (x) Sz + Sz (x) [(Sx)^2-(Sy)^2] on a pair of spin-1 sites.
Mat two_qubit_coupling_matrix();
OperatorTerm two_qubit_coupling(const ChainLayout& layout, int site_a, int site_b, double J = 1.0);

/// |xi> = (-|1,1> + |1,-1> + |-1,1> + |-1,-1>)/2, the unique ground state of
/// the two-qubit coupling.
Vec xi_state();

// -- Conserved string operators -------------------------------------------------

/// Product of on-site rotations exp(i angle n.S_j) over `sites` (identity
/// elsewhere).  The paper's string Sigma_n^m is angle = pi over the chain plus
/// its terminal spin-1/2; sqrt(Sigma) uses angle = pi/2.
struct ConservedOperator {
    ChainLayout layout;
    std::vector<Mat> site_factors;  // one per site; identity factors allowed
    std::string label;

    Vec apply(const Vec& x) const;
    Mat dense() const;  // small layouts only
    bool is_identity_on(int site) const;
};

ConservedOperator rotation_string(const ChainLayout& layout, const Vec3& axis, double angle,
                                  const std::vector<int>& sites, const std::string& label);

/// Pi-rotation string from first_site through the end of a single edge-coupled
/// chain (extent n in the paper's notation counts the spin-1 sites covered).
ConservedOperator conserved_operator(const ChainLayout& layout, const Vec3& axis, int first_site);

/// Sitewise product of two strings on the same layout.
ConservedOperator string_product(const ConservedOperator& a, const ConservedOperator& b,
                                 const std::string& label);

/// max_t max_term ||[coeff(t) T, restriction of op to T's support]||_F over the
/// given times; zero (to rounding) when the schedule commutes with op.
double symmetry_residual(const struct ScheduledHamiltonian& sched, const ConservedOperator& op,
                         const std::vector<double>& times);

// -- Schedules ------------------------------------------------------------------

struct Schedule {
    std::function<double(double)> fn;
    std::string name;

    double operator()(double t) const { return fn(t); }
};

Schedule schedule_const(double value);
Schedule schedule_smooth_up();    // sin^2(pi t / 2)
Schedule schedule_smooth_down();  // 1 - sin^2(pi t / 2)
Schedule schedule_named(const std::string& name);  // "one","zero","up","down"

struct ScheduledTerm {
    OperatorTerm term;
    Schedule schedule;
};

/// Hermitian logical Pauli built from a conserved string: prefactor * Sigma
/// (e.g. -i Sigma^z).  Used to fix logical bases on ground frames.
struct LogicalPauliSpec {
    ConservedOperator sigma;
    cx prefactor;
    std::string label;
};

struct LogicalFrameSpec {
    // One (Z-like, X-like) pair per encoded qubit; qubit 0 is the most
    // significant index of the extracted logical unitary.
    std::vector<std::pair<LogicalPauliSpec, LogicalPauliSpec>> qubits;
};

struct ScheduledHamiltonian {
    ChainLayout layout;
    std::vector<ScheduledTerm> terms;
    std::string description;
    std::vector<ConservedOperator> conserved;  // commute with H(t) at all t
    LogicalFrameSpec logical_in, logical_out;  // endpoint frame labelings

    HamOperator at(double t) const;
};

/// Boundary move j -> j+1: frozen fields below j, f(t) F_j + g(t) H_{j,j+1},
/// static SP bulk and edge coupling.  Field axis must be one of the coordinate
/// axes so the standard logical frame applies.
ScheduledHamiltonian elementary_gate_schedule(int n, int j, double beta, const Vec3& axis,
                                              double J = 1.0);

/// Global crossfade f(t) H_triv + g(t) H_SP on the full chain; at t=1 the
/// terminal spin-1/2 is free.
ScheduledHamiltonian transistor_schedule(int n, double beta, const Vec3& axis, double J = 1.0);

/// Decouple with field axis m, rotate the field m -> mp, recouple.  The middle
/// stage rotates the field axis continuously (adding the symmetric cross term
/// {S^m, S^mp} with weight sin(theta)cos(theta)); the string along m x mp is
/// conserved for the whole schedule.
ScheduledHamiltonian single_qubit_holonomy_schedule(int n, double beta, const Vec3& m,
                                                    const Vec3& mp, double J = 1.0);

/// Two edge-coupled chains with simultaneous decoupling of the two site-1
/// spins into the ground state of the two-qubit coupling.
ScheduledHamiltonian two_qubit_gate_schedule(int n_per_chain, double beta, double J = 1.0);

// -- Ground spaces and transport --------------------------------------------------

struct GroundSpaceOptions {
    double tol_rel = 1e-6;      // cluster spread < tol_rel * gap
    double gap_floor = 1e-8;    // absolute floor; below it: NoGap
    int dense_threshold = 1024; // dense full spectrum at or below this dim
    int nev_hint = 2;           // expected cluster size
    bool parallel = true;
};

struct GroundSpace {
    Mat frame;       // orthonormal columns spanning the lowest cluster
    int degeneracy = 0;
    double gap = 0.0;
    RVec low_evals;  // the eigenvalues that were resolved
};

GroundSpace ground_space(const HamOperator& op, const GroundSpaceOptions& opts,
                         const Mat* warm = nullptr);
/// Direct dense form used for small explicit matrices.
GroundSpace ground_space(const Mat& h, double tol_rel = 1e-6, double gap_floor = 1e-8);

/// Logical basis on a ground frame: per qubit, |0> is the +1 eigenvector of
/// the Z-like operator (largest-modulus amplitude made real positive) and
/// |1> = X |0>.
Mat logical_frame(const ChainLayout& layout, const Mat& frame, const LogicalFrameSpec& spec);

struct TransportOptions {
    GroundSpaceOptions gs;
    double convergence_tol = 1e-6;  // step-doubling disagreement
    double overlap_floor = 0.2;     // smallest singular value of a transport step
};

struct HolonomyResult {
    Mat logical_unitary;  // defined up to a global phase
    double min_gap = 0.0;
    std::vector<std::pair<double, double>> gap_profile;
    int steps = 0;
    double frame_residual = 0.0;  // || U^dag U - 1 ||
    double convergence = 0.0;     // phase-aligned distance between steps and steps/2
    int degeneracy = 0;
};

/// Discrete parallel transport of the ground frame: project the previous frame
/// with the new ground projector and re-orthonormalize symmetrically (Loewdin),
/// which removes dynamical and gauge phases on a degenerate level.  The
/// logical unitary is read against the endpoint frame labelings.
HolonomyResult transport_holonomy(const ScheduledHamiltonian& sched, int steps,
                                  const LogicalFrameSpec& logical_in,
                                  const LogicalFrameSpec& logical_out,
                                  const TransportOptions& opts = {});

std::vector<std::pair<double, double>> gap_profile(const ScheduledHamiltonian& sched, int samples,
                                                   const GroundSpaceOptions& opts = {});

}  // namespace spchain::chain
