#include "spchain/linalg.hpp"

#include <Eigen/SVD>
#include <iostream>
#include <mutex>
#include <utility>

namespace spchain {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double phase_distance(const Mat& a, const Mat& b) {
    cx t = (a.adjoint() * b).trace();
    cx phase = std::abs(t) > 1e-300 ? t / std::abs(t) : cx(1, 0);
    return (a * phase - b).norm();
}

Mat loewdin(const Mat& c, double* smin) {
    Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (smin) *smin = svd.singularValues().minCoeff();
    return svd.matrixU() * svd.matrixV().adjoint();
}

namespace {
Eigen::Index argmax_abs(const Mat& m) {
    Eigen::Index best = 0;
    double mx = -1.0;
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        double v = std::abs(*(m.data() + k));
        if (v > mx + 1e-15) {
            mx = v;
            best = k;
        }
    }
    return best;
}
}  // namespace

Mat fix_phase(const Mat& m) {
    cx z = *(m.data() + argmax_abs(m));
    if (std::abs(z) < 1e-300) return m;
    return m * (std::conj(z) / std::abs(z));
}

Vec fix_phase(const Vec& v) {
    Mat m = v;
    return fix_phase(m).col(0);
}

namespace {
std::mutex warn_mutex;
std::function<void(const std::string&)> warn_handler;
}  // namespace

void warn(const std::string& message) {
    std::lock_guard<std::mutex> lock(warn_mutex);
    if (warn_handler)
        warn_handler(message);
    else
        std::cerr << "[spchain warning] " << message << "\n";
}

void set_warning_handler(std::function<void(const std::string&)> handler) {
    std::lock_guard<std::mutex> lock(warn_mutex);
    warn_handler = std::move(handler);
}

}  // namespace spchain
