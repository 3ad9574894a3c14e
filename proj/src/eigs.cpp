#include "spchain/eigs.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <random>

#include "spchain/errors.hpp"

namespace spchain::eigs {

EigResult lowest_eigenpairs_dense(const Mat& h, int nev) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    if (es.info() != Eigen::Success) throw Error("dense eigensolver failed");
    const int n = static_cast<int>(h.rows());
    const int k = nev < 0 ? n : std::min(nev, n);
    EigResult r;
    r.values = es.eigenvalues().head(k);
    r.vectors = es.eigenvectors().leftCols(k);
    return r;
}

namespace {

void fill_random(Mat& x, Eigen::Index col_begin) {
    std::mt19937_64 rng(0x5eedbeef + static_cast<unsigned long long>(col_begin));
    std::normal_distribution<double> dist;
    for (Eigen::Index c = col_begin; c < x.cols(); ++c)
        for (Eigen::Index r = 0; r < x.rows(); ++r) x(r, c) = cx(dist(rng), dist(rng));
}

// Orthonormalize the columns of w against v (twice) and among themselves.
// Columns that lose essentially all norm are replaced with fresh random
// vectors (re-orthogonalized).  Returns the resulting block.
Mat orthonormalize_against(const Mat& v, Mat w) {
    for (int pass = 0; pass < 2; ++pass)
        if (v.cols() > 0) w -= v * (v.adjoint() * w);
    // Modified Gram-Schmidt with replacement.
    std::mt19937_64 rng(0xabcdef12);
    std::normal_distribution<double> dist;
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
        for (int attempt = 0; attempt < 3; ++attempt) {
            for (Eigen::Index p = 0; p < c; ++p) w.col(c) -= w.col(p) * w.col(p).dot(w.col(c));
            if (v.cols() > 0) w.col(c) -= v * (v.adjoint() * w.col(c));
            double nrm = w.col(c).norm();
            if (nrm > 1e-8) {
                w.col(c) /= nrm;
                break;
            }
            for (Eigen::Index r = 0; r < w.rows(); ++r) w(r, c) = cx(dist(rng), dist(rng));
        }
    }
    return w;
}

}  // namespace

EigResult lowest_eigenpairs_lanczos(const MatVec& apply, std::ptrdiff_t dim,
                                    const LanczosOptions& opts, const Mat* warm) {
    const int nev = opts.nev;
    const int block = opts.block > 0 ? opts.block : nev + 2;
    if (dim <= 4 * static_cast<std::ptrdiff_t>(block)) {
        // Tiny problem: build the dense matrix through the operator.
        Mat h(dim, dim);
        Vec e = Vec::Zero(dim), col(dim);
        for (std::ptrdiff_t j = 0; j < dim; ++j) {
            e.setZero();
            e(j) = 1.0;
            apply(e.data(), col.data());
            h.col(j) = col;
        }
        return lowest_eigenpairs_dense(0.5 * (h + h.adjoint()), nev);
    }

    auto apply_block_fn = [&](const Mat& x) {
        Mat y(dim, x.cols());
        for (Eigen::Index c = 0; c < x.cols(); ++c) {
            Vec xc = x.col(c);
            Vec yc(dim);
            apply(xc.data(), yc.data());
            y.col(c) = yc;
        }
        return y;
    };

    Mat x0(dim, block);
    Eigen::Index seeded = 0;
    if (warm && warm->rows() == dim) {
        seeded = std::min<Eigen::Index>(warm->cols(), block);
        x0.leftCols(seeded) = warm->leftCols(seeded);
    }
    fill_random(x0, seeded);
    Mat v = orthonormalize_against(Mat(dim, 0), x0);
    Mat hv = apply_block_fn(v);

    double scale = 1.0;
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        Mat a = v.adjoint() * hv;
        a = 0.5 * (a + a.adjoint());
        Eigen::SelfAdjointEigenSolver<Mat> es(a);
        const int k = static_cast<int>(a.rows());
        scale = std::max(1.0, std::max(std::abs(es.eigenvalues()(0)),
                                       std::abs(es.eigenvalues()(k - 1))));
        const int take = std::min(nev, k);
        Mat s = es.eigenvectors().leftCols(take);
        Mat ritz = v * s;
        Mat res = hv * s - ritz * es.eigenvalues().head(take).asDiagonal();
        double worst = 0.0;
        for (int c = 0; c < take; ++c) worst = std::max(worst, res.col(c).norm());
        if (k >= nev && worst < opts.tol * scale) {
            EigResult out;
            out.values = es.eigenvalues().head(take);
            out.vectors = std::move(ritz);
            return out;
        }

        if (k + block > opts.max_basis) {
            // Thick restart with the lowest Ritz vectors; H(V S) = (H V) S, so
            // no extra matvecs are needed.
            const int keep = std::min(k, nev + block);
            Mat sk = es.eigenvectors().leftCols(keep);
            Mat v2 = v * sk;
            Mat hv2 = hv * sk;
            v = std::move(v2);
            hv = std::move(hv2);
        }
        // Next block: H times the most recent block, orthogonalized.
        Mat w = orthonormalize_against(v, hv.rightCols(std::min<Eigen::Index>(block, hv.cols())));
        Mat hw = apply_block_fn(w);
        Mat vn(dim, v.cols() + w.cols());
        vn << v, w;
        Mat hvn(dim, hv.cols() + hw.cols());
        hvn << hv, hw;
        v = std::move(vn);
        hv = std::move(hvn);
    }
    throw NonConvergent("block Lanczos failed to converge");
}

}  // namespace spchain::eigs
