#include <algorithm>
#include <cmath>

#include "spchain/chain.hpp"
#include "spchain/eigs.hpp"
#include "spchain/errors.hpp"

namespace spchain::chain {

namespace {

// Split an ascending eigenvalue list into the lowest cluster and its gap:
// the cluster ends at the first spacing exceeding both the absolute floor and
// spread / tol_rel (so that cluster spread < tol_rel * gap).
struct ClusterSplit {
    int size = 0;
    double gap = 0.0;
    bool found = false;
};

ClusterSplit split_cluster(const RVec& ev, double tol_rel, double floor) {
    ClusterSplit s;
    for (int k = 1; k < ev.size(); ++k) {
        double spread = ev(k - 1) - ev(0);
        double gap = ev(k) - ev(k - 1);
        if (gap > std::max(floor, spread / tol_rel)) {
            s.size = k;
            s.gap = gap;
            s.found = true;
            return s;
        }
    }
    return s;
}

}  // namespace

GroundSpace ground_space(const HamOperator& op, const GroundSpaceOptions& opts, const Mat* warm) {
    const std::ptrdiff_t dim = op.dim();
    if (dim <= opts.dense_threshold) {
        eigs::EigResult full = eigs::lowest_eigenpairs_dense(op.dense());
        ClusterSplit s = split_cluster(full.values, opts.tol_rel, opts.gap_floor);
        if (!s.found) throw NoGap("no spectral gap above floor");
        GroundSpace gs;
        gs.degeneracy = s.size;
        gs.gap = s.gap;
        gs.frame = full.vectors.leftCols(s.size);
        gs.low_evals = full.values.head(std::min<Eigen::Index>(s.size + 4, full.values.size()));
        return gs;
    }
    eigs::MatVec apply = [&op, &opts](const cx* x, cx* y) { op.apply(x, y, opts.parallel); };
    int nev = std::max(2, opts.nev_hint + 2);
    while (true) {
        eigs::LanczosOptions lo;
        lo.nev = nev;
        lo.block = nev + 2;
        eigs::EigResult r = eigs::lowest_eigenpairs_lanczos(apply, dim, lo, warm);
        ClusterSplit s = split_cluster(r.values, opts.tol_rel, opts.gap_floor);
        if (s.found && s.size < nev) {
            GroundSpace gs;
            gs.degeneracy = s.size;
            gs.gap = s.gap;
            gs.frame = r.vectors.leftCols(s.size);
            gs.low_evals = r.values;
            return gs;
        }
        if (nev >= std::min<std::ptrdiff_t>(dim, 64)) throw NoGap("no spectral gap above floor");
        nev = std::min<int>(2 * nev, 64);
    }
}

GroundSpace ground_space(const Mat& h, double tol_rel, double gap_floor) {
    eigs::EigResult full = eigs::lowest_eigenpairs_dense(0.5 * (h + h.adjoint()));
    ClusterSplit s = split_cluster(full.values, tol_rel, gap_floor);
    if (!s.found) throw NoGap("no spectral gap above floor");
    GroundSpace gs;
    gs.degeneracy = s.size;
    gs.gap = s.gap;
    gs.frame = full.vectors.leftCols(s.size);
    gs.low_evals = full.values.head(std::min<Eigen::Index>(s.size + 4, full.values.size()));
    return gs;
}

namespace {

Vec apply_logical(const LogicalPauliSpec& p, const Vec& x) { return p.prefactor * p.sigma.apply(x); }

// Restriction of a logical Pauli to the frame: pref * Q^dag (Sigma Q).
Mat restrict_logical(const Mat& q, const LogicalPauliSpec& p) {
    Mat sq(q.rows(), q.cols());
    for (Eigen::Index c = 0; c < q.cols(); ++c) sq.col(c) = p.sigma.apply(q.col(c));
    Mat r = p.prefactor * (q.adjoint() * sq);
    if (hermiticity_residual(r) > 1e-7)
        throw Error("logical operator " + p.label + " does not restrict to the ground space");
    if ((r * r - Mat::Identity(r.rows(), r.cols())).norm() > 1e-7)
        throw Error("logical operator " + p.label + " does not square to one on the ground space");
    return 0.5 * (r + r.adjoint());
}

Vec plus_one_column(const Mat& q, const Mat& projector) {
    Eigen::SelfAdjointEigenSolver<Mat> es(projector);
    Eigen::Index best;
    es.eigenvalues().maxCoeff(&best);
    if (es.eigenvalues()(best) < 0.9)
        throw Error("joint +1 eigenspace not found for logical labeling");
    return fix_phase(Vec(q * es.eigenvectors().col(best)));
}

}  // namespace

Mat logical_frame(const ChainLayout&, const Mat& frame, const LogicalFrameSpec& spec) {
    const int nq = static_cast<int>(spec.qubits.size());
    const Eigen::Index d = frame.cols();
    if ((Eigen::Index(1) << nq) != d)
        throw Error("frame labeling: 2^qubits must equal the ground degeneracy");
    if (nq == 0) return fix_phase(frame);
    if (nq == 1) {
        Mat z = restrict_logical(frame, spec.qubits[0].first);
        Mat proj = 0.5 * (Mat::Identity(2, 2) + z);
        Vec v0 = plus_one_column(frame, proj);
        Vec v1 = apply_logical(spec.qubits[0].second, v0);
        Mat out(frame.rows(), 2);
        out.col(0) = v0;
        out.col(1) = v1;
        if (unitarity_residual(Mat(frame.adjoint() * out)) > 1e-6)
            throw Error("logical frame is not orthonormal within the ground space");
        return out;
    }
    if (nq == 2) {
        Mat za = restrict_logical(frame, spec.qubits[0].first);
        Mat zb = restrict_logical(frame, spec.qubits[1].first);
        Mat id = Mat::Identity(4, 4);
        Mat proj = 0.25 * (id + za) * (id + zb);
        proj = 0.5 * (proj + proj.adjoint());
        Vec v00 = plus_one_column(frame, proj);
        Vec v01 = apply_logical(spec.qubits[1].second, v00);
        Vec v10 = apply_logical(spec.qubits[0].second, v00);
        Vec v11 = apply_logical(spec.qubits[0].second, v01);
        Mat out(frame.rows(), 4);
        out.col(0) = v00;
        out.col(1) = v01;
        out.col(2) = v10;
        out.col(3) = v11;
        if (unitarity_residual(Mat(frame.adjoint() * out)) > 1e-6)
            throw Error("logical frame is not orthonormal within the ground space");
        return out;
    }
    throw Error("frame labeling supports one or two qubits");
}

HolonomyResult transport_holonomy(const ScheduledHamiltonian& sched, int steps,
                                  const LogicalFrameSpec& logical_in,
                                  const LogicalFrameSpec& logical_out,
                                  const TransportOptions& opts) {
    if (steps < 2 || steps % 2 != 0) throw ConfigError("transport steps must be even and >= 2");
    GroundSpaceOptions gso = opts.gs;
    GroundSpace gs = ground_space(sched.at(0.0), gso, nullptr);
    const int deg = gs.degeneracy;
    gso.nev_hint = deg;

    Mat f = logical_frame(sched.layout, gs.frame, logical_in);
    Mat f2 = f;
    Mat warm = gs.frame;

    HolonomyResult result;
    result.steps = steps;
    result.degeneracy = deg;
    result.gap_profile.reserve(steps + 1);
    result.gap_profile.emplace_back(0.0, gs.gap);

    for (int k = 1; k <= steps; ++k) {
        double t = static_cast<double>(k) / steps;
        gs = ground_space(sched.at(t), gso, &warm);
        if (gs.degeneracy != deg)
            throw DegeneracyChange("ground degeneracy changed from " + std::to_string(deg) +
                                   " to " + std::to_string(gs.degeneracy) + " at t = " +
                                   std::to_string(t));
        double smin = 1.0;
        f = gs.frame * loewdin(Mat(gs.frame.adjoint() * f), &smin);
        if (smin < opts.overlap_floor)
            throw DegeneracyChange("transport frame lost overlap (level crossing) at t = " +
                                   std::to_string(t));
        if (k % 2 == 0) f2 = gs.frame * loewdin(Mat(gs.frame.adjoint() * f2));
        warm = gs.frame;
        result.gap_profile.emplace_back(t, gs.gap);
    }

    Mat l_out = logical_frame(sched.layout, gs.frame, logical_out);
    result.logical_unitary = l_out.adjoint() * f;
    Mat u2 = l_out.adjoint() * f2;
    result.frame_residual = unitarity_residual(result.logical_unitary);
    result.convergence = phase_distance(result.logical_unitary, u2);
    result.min_gap = result.gap_profile.front().second;
    for (const auto& [t, g] : result.gap_profile) result.min_gap = std::min(result.min_gap, g);
    if (result.convergence > opts.convergence_tol)
        throw NonConvergent("step-doubling disagreement " + std::to_string(result.convergence));
    return result;
}

std::vector<std::pair<double, double>> gap_profile(const ScheduledHamiltonian& sched, int samples,
                                                   const GroundSpaceOptions& opts) {
    if (samples < 2) throw ConfigError("need at least two samples");
    std::vector<std::pair<double, double>> out(samples);
    if (sched.layout.total_dim <= opts.dense_threshold) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < samples; ++i) {
            double t = static_cast<double>(i) / (samples - 1);
            out[i] = {t, ground_space(sched.at(t), opts, nullptr).gap};
        }
    } else {
        Mat warm;
        for (int i = 0; i < samples; ++i) {
            double t = static_cast<double>(i) / (samples - 1);
            GroundSpace gs = ground_space(sched.at(t), opts, warm.size() ? &warm : nullptr);
            warm = gs.frame;
            out[i] = {t, gs.gap};
        }
    }
    return out;
}

}  // namespace spchain::chain
