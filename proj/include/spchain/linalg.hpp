#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>

namespace spchain {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr cx I_UNIT{0.0, 1.0};

Mat kron(const Mat& a, const Mat& b);

inline Mat dagger(const Mat& m) { return m.adjoint(); }

inline double unitarity_residual(const Mat& m) {
    return (m.adjoint() * m - Mat::Identity(m.cols(), m.cols())).norm();
}

inline bool is_unitary(const Mat& m, double tol = 1e-10) {
    return m.rows() == m.cols() && unitarity_residual(m) < tol;
}

inline double hermiticity_residual(const Mat& m) { return (m - m.adjoint()).norm(); }

// |tr(a^dag b)| / dim, equals 1 iff a == b up to a global phase (a, b unitary).
inline double trace_fidelity(const Mat& a, const Mat& b) {
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.cols());
}

// Frobenius distance between a and b minimized over a global phase on b.
double phase_distance(const Mat& a, const Mat& b);

// Symmetric (Loewdin) orthonormalization: C (C^dag C)^{-1/2}, computed via SVD.
// Returns the closest matrix with orthonormal columns; smin (if given) receives
// the smallest singular value of C as a conditioning diagnostic.
Mat loewdin(const Mat& c, double* smin = nullptr);

// Multiply by a unit phase so the largest-modulus entry is real positive.
// Deterministic tie-break: first such entry in column-major order.
Mat fix_phase(const Mat& m);
Vec fix_phase(const Vec& v);

// Warning channel: non-fatal diagnostics (e.g. out-of-range parameters).
void warn(const std::string& message);
void set_warning_handler(std::function<void(const std::string&)> handler);

}  // namespace spchain
