#pragma once

#include <functional>

#include "spchain/linalg.hpp"

namespace spchain::eigs {

using MatVec = std::function<void(const cx* x, cx* y)>;  // y = H x

struct EigResult {
    RVec values;  // ascending
    Mat vectors;  // matching columns, orthonormal
};

/// Full dense Hermitian eigendecomposition (Eigen), lowest nev pairs returned
/// (nev < 0: all).
EigResult lowest_eigenpairs_dense(const Mat& h, int nev = -1);

struct LanczosOptions {
    int nev = 4;            // wanted eigenpairs
    int block = 0;          // 0: auto (nev + 2)
    int max_basis = 144;    // restart threshold
    int max_iter = 400;     // outer iterations
    double tol = 1e-9;      // residual tolerance (relative to spectral scale)
};

/// Block Lanczos with full reorthogonalization and thick restarts.  `warm`
/// (optional) seeds the starting block, e.g. the previous ground frame during
/// a transport sweep.  Throws NonConvergent if residuals fail to drop.
EigResult lowest_eigenpairs_lanczos(const MatVec& apply, std::ptrdiff_t dim,
                                    const LanczosOptions& opts, const Mat* warm = nullptr);

}  // namespace spchain::eigs
