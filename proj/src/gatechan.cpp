#include "spchain/gatechan.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "spchain/errors.hpp"

namespace spchain::gates {

Mat apply_gamma(const ProjectiveRep& rep, const Character& chi, const Mat& m) {
    if (m.rows() != rep.dim || m.cols() != rep.dim)
        throw DimensionMismatch("matrix does not match representation dimension");
    Mat out = Mat::Zero(rep.dim, rep.dim);
    for (int g = 0; g < rep.group.order; ++g) out += chi(g) * rep[g] * m * rep[g].adjoint();
    return out / static_cast<double>(rep.group.order);
}

Mat gamma_superoperator(const ProjectiveRep& rep, const Character& chi) {
    const int d = rep.dim;
    Mat s = Mat::Zero(d * d, d * d);
    for (int g = 0; g < rep.group.order; ++g) {
        // vec(V M V^dag) = (conj(V) (x) V) vec(M), column-major vec.
        s += chi(g) * kron(rep[g].conjugate(), rep[g]);
    }
    return s / static_cast<double>(rep.group.order);
}

std::optional<Mat> fixed_point(const ProjectiveRep& rep, const Character& chi) {
    if (!projrep::is_irreducible(rep))
        throw NotIrreducible("fixed_point requires an irreducible representation");
    const int d = rep.dim;
    Mat s = gamma_superoperator(rep, chi);
    // Gamma_chi is Hermitian as a superoperator (it is an orthogonal projector
    // on matrix space); symmetrize to suppress floating-point asymmetry.
    Mat sym = 0.5 * (s + s.adjoint());
    if ((s - sym).norm() > 1e-9) throw Error("channel superoperator is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(sym);
    std::vector<int> ones;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-8) ones.push_back(static_cast<int>(i));
    if (ones.empty()) return std::nullopt;
    if (ones.size() > 1)
        throw DegenerateFixedSpace("eigenvalue-1 multiplicity " + std::to_string(ones.size()));
    Vec v = es.eigenvectors().col(ones[0]);
    Mat w = Eigen::Map<const Mat>(v.data(), d, d);
    w *= std::sqrt(static_cast<double>(d)) / w.norm();
    if (unitarity_residual(w) > 1e-8)
        throw NonUnitaryFixedPoint("normalized fixed point is not unitary");
    return fix_phase(w);
}

int GateTable::char_product(int i, int j) const {
    const size_t n = chars.size();
    for (size_t k = 0; k < n; ++k) {
        bool match = true;
        for (size_t g = 0; g < chars[k].values.size() && match; ++g)
            match = std::abs(chars[i].values[g] * chars[j].values[g] - chars[k].values[g]) < 1e-9;
        if (match) return static_cast<int>(k);
    }
    throw Error("character product not found in table");
}

double GateTable::max_intertwining_residual() const {
    double worst = 0.0;
    for (size_t k = 0; k < chars.size(); ++k) {
        if (!entries[k]) continue;
        const Mat& w = *entries[k];
        for (int g = 0; g < rep.group.order; ++g)
            worst = std::max(worst, (w * rep[g] - chars[k](g) * rep[g] * w).norm());
    }
    return worst;
}

double GateTable::max_group_law_residual() const {
    double worst = 0.0;
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = 0; j < chars.size(); ++j) {
            int k = char_product(static_cast<int>(i), static_cast<int>(j));
            if (!entries[i] || !entries[j] || !entries[k]) continue;
            worst = std::max(
                worst, (*entries[i] * *entries[j] - alpha(i, j) * *entries[k]).norm());
        }
    return worst;
}

double GateTable::max_nontrivial_trace() const {
    double worst = 0.0;
    for (size_t k = 0; k < chars.size(); ++k) {
        if (chars[k].is_trivial() || !entries[k]) continue;
        worst = std::max(worst, std::abs(entries[k]->trace()));
    }
    return worst;
}

GateTable gate_table(const ProjectiveRep& rep) {
    GateTable table;
    table.rep = rep;
    table.chars = groups::characters(rep.group);
    const size_t n = table.chars.size();
    table.entries.resize(n);
    for (size_t k = 0; k < n; ++k) {
        table.entries[k] = fixed_point(rep, table.chars[k]);
        if (!table.entries[k]) table.missing.push_back(static_cast<int>(k));
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    table.alpha = Mat::Constant(n, n, cx(nan, nan));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int k = table.char_product(static_cast<int>(i), static_cast<int>(j));
            if (!table.entries[i] || !table.entries[j] || !table.entries[k]) continue;
            cx a = ((*table.entries[k]).adjoint() * (*table.entries[i]) * (*table.entries[j]))
                       .trace() /
                   static_cast<double>(rep.dim);
            if (std::abs(std::abs(a) - 1.0) > 1e-8)
                throw Error("gate table alpha is not a unit phase");
            table.alpha(i, j) = a / std::abs(a);
        }
    // Faithfulness: the identity is a fixed point iff the character is trivial.
    for (size_t k = 0; k < n; ++k) {
        if (!table.entries[k]) continue;
        double tr = std::abs(table.entries[k]->trace());
        if (table.chars[k].is_trivial()) {
            if ((fix_phase(*table.entries[k]) - Mat::Identity(rep.dim, rep.dim)).norm() > 1e-8)
                throw Error("trivial-character fixed point is not the identity");
        } else if (tr > rep.dim - 1e-6) {
            throw Error("nontrivial character has scalar fixed point (not faithful)");
        }
    }
    return table;
}

ProjectorAlgebraReport check_projector_algebra(const ProjectiveRep& rep, double tol) {
    ProjectorAlgebraReport report;
    report.tol = tol;
    auto chars = groups::characters(rep.group);
    const int d = rep.dim;
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = 0; j < chars.size(); ++j) {
            double delta = 0.0;
            bool same = true;
            for (size_t g = 0; g < chars[i].values.size() && same; ++g)
                same = std::abs(chars[i].values[g] - chars[j].values[g]) < 1e-9;
            delta = same ? 1.0 : 0.0;
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    Mat e = Mat::Zero(d, d);
                    e(r, c) = 1.0;
                    Mat lhs = apply_gamma(rep, chars[i], apply_gamma(rep, chars[j], e));
                    Mat rhs = delta * apply_gamma(rep, chars[i], e);
                    report.max_residual = std::max(report.max_residual, (lhs - rhs).norm());
                }
        }
    report.pass = report.max_residual < tol;
    return report;
}

nlohmann::json to_json(const GateTable& table) {
    nlohmann::json j;
    nlohmann::json gates = nlohmann::json::object();
    for (size_t k = 0; k < table.chars.size(); ++k) {
        nlohmann::json chi;
        std::vector<std::vector<double>> vals;
        for (const cx& v : table.chars[k].values) vals.push_back({v.real(), v.imag()});
        chi["character"] = vals;
        if (table.entries[k]) {
            const Mat& w = *table.entries[k];
            std::vector<std::vector<std::vector<double>>> rows;
            for (Eigen::Index r = 0; r < w.rows(); ++r) {
                std::vector<std::vector<double>> row;
                for (Eigen::Index c = 0; c < w.cols(); ++c)
                    row.push_back({w(r, c).real(), w(r, c).imag()});
                rows.push_back(std::move(row));
            }
            chi["gate"] = rows;
        } else {
            chi["gate"] = nullptr;
        }
        gates["chi_" + std::to_string(k)] = std::move(chi);
    }
    j["gates"] = std::move(gates);
    std::vector<std::vector<std::vector<double>>> alpha;
    for (Eigen::Index r = 0; r < table.alpha.rows(); ++r) {
        std::vector<std::vector<double>> row;
        for (Eigen::Index c = 0; c < table.alpha.cols(); ++c)
            row.push_back({table.alpha(r, c).real(), table.alpha(r, c).imag()});
        alpha.push_back(std::move(row));
    }
    j["alpha"] = std::move(alpha);
    j["missing"] = table.missing;
    return j;
}

}  // namespace spchain::gates
