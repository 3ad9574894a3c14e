#include "spchain/projrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/SVD>

#include "spchain/errors.hpp"

namespace spchain::projrep {

namespace {
constexpr double kPi = std::numbers::pi;

Mat sigma_x() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
Mat sigma_y() { return (Mat(2, 2) << 0, cx(0, -1), cx(0, 1), 0).finished(); }
Mat sigma_z() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }

// exp(i angle n.sigma) = cos(angle) I + i sin(angle) n.sigma for unit n.
Mat qubit_rotation(double nx, double ny, double nz, double angle) {
    Mat nsigma = nx * sigma_x() + ny * sigma_y() + nz * sigma_z();
    return std::cos(angle) * Mat::Identity(2, 2) + cx(0, std::sin(angle)) * nsigma;
}
}  // namespace

void ProjectiveRep::validate(double tol) const {
    if (static_cast<int>(matrices.size()) != group.order)
        throw NotProjective("matrix count does not match group order");
    for (const Mat& m : matrices) {
        if (m.rows() != dim || m.cols() != dim) throw NotProjective("matrix has wrong shape");
        if (unitarity_residual(m) > tol) throw NotProjective("matrix is not unitary");
    }
    (void)factor_system_of(*this, tol);  // throws if closure fails
}

double FactorSystem::cocycle_residual() const {
    const int n = group.order;
    double worst = 0.0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                cx lhs = omega(g, h) * omega(group.mult(g, h), k);
                cx rhs = omega(h, k) * omega(g, group.mult(h, k));
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    return worst;
}

void FactorSystem::validate(double tol) const {
    if (omega.rows() != group.order || omega.cols() != group.order)
        throw Error("factor system has wrong shape");
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h)
            if (std::abs(std::abs(omega(g, h)) - 1.0) > tol)
                throw Error("factor system value is not a unit phase");
    if (cocycle_residual() > tol) throw Error("2-cocycle condition fails");
}

void GaugeFunction::validate(double tol) const {
    for (const cx& v : values)
        if (std::abs(std::abs(v) - 1.0) > tol) throw Error("gauge value is not a unit phase");
}

FactorSystem factor_system_of(const ProjectiveRep& rep, double tol) {
    const int n = rep.group.order;
    FactorSystem fs;
    fs.group = rep.group;
    fs.omega = Mat(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Mat prod = rep[g] * rep[h];
            const Mat& target = rep[rep.group.mult(g, h)];
            cx w = (target.adjoint() * prod).trace() / static_cast<double>(rep.dim);
            if (std::abs(std::abs(w) - 1.0) > 1e-6)
                throw NotProjective("product is not proportional to V_{gh}");
            w /= std::abs(w);
            if ((prod - w * target).norm() > tol * std::sqrt(static_cast<double>(rep.dim)))
                throw NotProjective("projective closure residual too large");
            fs.omega(g, h) = w;
        }
    return fs;
}

FactorSystem trivial_factor_system(const FiniteGroup& g) {
    FactorSystem fs;
    fs.group = g;
    fs.omega = Mat::Ones(g.order, g.order);
    return fs;
}

cx phi(const FactorSystem& fs, int a) {
    cx sum = 0.0;
    for (int b = 0; b < fs.group.order; ++b) sum += fs.omega(a, b) * std::conj(fs.omega(b, a));
    return sum;
}

std::optional<int> nontriviality_certificate(const FactorSystem& fs, double tol) {
    const auto z = groups::center(fs.group);
    const double n = static_cast<double>(fs.group.order);
    for (int a : z.members)
        if (std::abs(phi(fs, a) - cx(n, 0)) > tol) return a;
    return std::nullopt;
}

FactorSystem gauge_transform(const FactorSystem& fs, const GaugeFunction& beta) {
    if (static_cast<int>(beta.values.size()) != fs.group.order)
        throw Error("gauge function has wrong length");
    beta.validate();
    FactorSystem out;
    out.group = fs.group;
    out.omega = Mat(fs.group.order, fs.group.order);
    for (int g = 0; g < fs.group.order; ++g)
        for (int h = 0; h < fs.group.order; ++h)
            out.omega(g, h) =
                fs.omega(g, h) * beta.values[g] * beta.values[h] / beta.values[fs.group.mult(g, h)];
    return out;
}

namespace {

// Exponent k with value == exp(2 pi i k / L); throws NotRootOfUnity.
int phase_exponent(cx value, int L, double tol = 1e-9) {
    double a = std::arg(value) / (2.0 * kPi) * L;
    long long k = std::llround(a);
    if (std::abs(a - static_cast<double>(k)) > tol * L)
        throw NotRootOfUnity("value is not a 2|G|-th root of unity");
    return static_cast<int>(((k % L) + L) % L);
}

int mod(long long a, int L) { return static_cast<int>(((a % L) + L) % L); }

// Extended gcd: returns g and x, y with x*a + y*b == g.
long long extgcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = extgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Solvability of A x == c (mod L) by diagonalizing A with unimodular row and
// column operations carried out mod L (Smith-normal-form style); the rhs is
// transformed along with the rows, columns leave it untouched.
bool mod_system_solvable(std::vector<std::vector<int>> a, std::vector<int> c, int L) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    auto row_combine = [&](int r1, int r2, int col) {
        long long p = a[r1][col], q = a[r2][col];
        long long x, y;
        long long g = extgcd(p, q, x, y);
        for (int j = 0; j < n; ++j) {
            long long u = a[r1][j], v = a[r2][j];
            a[r1][j] = mod(x * u + y * v, L);
            a[r2][j] = mod(-(q / g) * u + (p / g) * v, L);
        }
        long long u = c[r1], v = c[r2];
        c[r1] = mod(x * u + y * v, L);
        c[r2] = mod(-(q / g) * u + (p / g) * v, L);
    };
    auto col_combine = [&](int c1, int c2, int row) {
        long long p = a[row][c1], q = a[row][c2];
        long long x, y;
        long long g = extgcd(p, q, x, y);
        for (int i = 0; i < m; ++i) {
            long long u = a[i][c1], v = a[i][c2];
            a[i][c1] = mod(x * u + y * v, L);
            a[i][c2] = mod(-(q / g) * u + (p / g) * v, L);
        }
    };

    int rank = 0;
    for (int k = 0; k < std::min(m, n); ++k) {
        // pivot: any nonzero entry in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = k; i < m && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(a[k], a[pi]);
        std::swap(c[k], c[pi]);
        for (int i = 0; i < m; ++i) std::swap(a[i][k], a[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    row_combine(k, i, k);
                    dirty = true;
                }
            for (int j = k + 1; j < n; ++j)
                if (a[k][j] != 0) {
                    col_combine(k, j, k);
                    dirty = true;
                }
        }
        rank = k + 1;
    }
    for (int i = 0; i < m; ++i) {
        long long d = i < rank ? a[i][i] : 0;
        long long g = std::gcd(d, static_cast<long long>(L));
        if (g == 0) g = L;
        if (c[i] % g != 0) return false;
    }
    return true;
}

}  // namespace

bool are_equivalent(const FactorSystem& omega, const FactorSystem& nu) {
    if (omega.group.order != nu.group.order) throw Error("factor systems on different groups");
    const int n = omega.group.order;
    const int L = 2 * n;
    // d(g,h) = exponent(nu) - exponent(omega); solvable b with
    // b(g) + b(h) - b(gh) == d(g,h) (mod L) iff the classes coincide.
    std::vector<std::vector<int>> a;
    std::vector<int> c;
    a.reserve(static_cast<size_t>(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int d = mod(phase_exponent(nu.omega(g, h), L) - phase_exponent(omega.omega(g, h), L), L);
            std::vector<int> row(n, 0);
            row[g] = mod(row[g] + 1, L);
            row[h] = mod(row[h] + 1, L);
            int gh = omega.group.mult(g, h);
            row[gh] = mod(row[gh] - 1, L);
            a.push_back(std::move(row));
            c.push_back(d);
        }
    return mod_system_solvable(std::move(a), std::move(c), L);
}

int commutant_dimension(const ProjectiveRep& rep, double tol) {
    const int d = rep.dim;
    const int d2 = d * d;
    Mat stacked(static_cast<Eigen::Index>(rep.group.order) * d2, d2);
    Mat id = Mat::Identity(d, d);
    for (int g = 0; g < rep.group.order; ++g) {
        // vec(V M - M V) = (I (x) V - V^T (x) I) vec(M), column-major vec.
        stacked.block(static_cast<Eigen::Index>(g) * d2, 0, d2, d2) =
            kron(id, rep[g]) - kron(rep[g].transpose(), id);
    }
    Eigen::JacobiSVD<Mat> svd(stacked);
    const auto& s = svd.singularValues();
    double scale = s.size() ? s(0) : 0.0;
    int nullity = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) <= tol * std::max(scale, 1.0)) ++nullity;
    nullity += d2 - static_cast<int>(s.size());
    return nullity;
}

ProjectiveRep pauli_rep() {
    ProjectiveRep rep;
    rep.group = groups::build_named_group("Z2xZ2");
    rep.dim = 2;
    rep.matrices = {Mat::Identity(2, 2), sigma_x(), sigma_y(), sigma_z()};
    rep.validate();
    return rep;
}

ProjectiveRep half_half_rep() {
    auto g2 = groups::build_g2();
    const double s = 1.0 / std::sqrt(2.0);
    Mat m_alpha = kron(qubit_rotation(0, 0, 1, kPi / 4), qubit_rotation(1, 0, 0, kPi / 2));
    Mat m_beta = kron(qubit_rotation(s, s, 0, kPi / 2), qubit_rotation(s, s, 0, kPi / 2));
    ProjectiveRep rep = rep_from_generators(g2.group, {{g2.alpha, m_alpha}, {g2.beta, m_beta}});
    rep.validate();
    return rep;
}

ProjectiveRep trivial_rep(const FiniteGroup& g, int dim) {
    ProjectiveRep rep;
    rep.group = g;
    rep.dim = dim;
    rep.matrices.assign(g.order, Mat::Identity(dim, dim));
    return rep;
}

ProjectiveRep rep_from_generators(const FiniteGroup& g,
                                  const std::vector<std::pair<int, Mat>>& gens) {
    if (gens.empty()) throw Error("no generators");
    const Eigen::Index d = gens[0].second.rows();
    ProjectiveRep rep;
    rep.group = g;
    rep.dim = static_cast<int>(d);
    rep.matrices.assign(g.order, Mat());
    rep.matrices[g.identity] = Mat::Identity(d, d);
    std::vector<int> bfs{g.identity};
    for (size_t head = 0; head < bfs.size(); ++head) {
        int cur = bfs[head];
        for (const auto& [gen, m] : gens) {
            int nxt = g.mult(cur, gen);
            if (rep.matrices[nxt].size() == 0) {
                rep.matrices[nxt] = rep.matrices[cur] * m;
                bfs.push_back(nxt);
            }
        }
    }
    if (static_cast<int>(bfs.size()) != g.order)
        throw Error("generators do not generate the group");
    return rep;
}

ProjectiveRep direct_sum(const ProjectiveRep& a, const ProjectiveRep& b) {
    if (a.group.order != b.group.order) throw Error("direct sum needs a common group");
    ProjectiveRep rep;
    rep.group = a.group;
    rep.dim = a.dim + b.dim;
    rep.matrices.reserve(a.group.order);
    for (int g = 0; g < a.group.order; ++g) {
        Mat m = Mat::Zero(rep.dim, rep.dim);
        m.topLeftCorner(a.dim, a.dim) = a[g];
        m.bottomRightCorner(b.dim, b.dim) = b[g];
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

ProjectiveRep rephase(const ProjectiveRep& rep, const GaugeFunction& beta) {
    if (static_cast<int>(beta.values.size()) != rep.group.order)
        throw Error("gauge function has wrong length");
    beta.validate();
    ProjectiveRep out = rep;
    for (int g = 0; g < rep.group.order; ++g) out.matrices[g] = beta.values[g] * rep[g];
    return out;
}

nlohmann::json to_json(const FactorSystem& fs) {
    const int n = fs.group.order;
    const int L = 2 * n;
    nlohmann::json j;
    j["group"] = fs.group.labels;
    j["phase_denominator"] = L;
    std::vector<std::vector<int>> expo(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) expo[g][h] = phase_exponent(fs.omega(g, h), L);
    j["exponents"] = expo;
    return j;
}

}  // namespace spchain::projrep
