#include "spchain/mps.hpp"

#include <cmath>

#include "spchain/errors.hpp"

namespace spchain::mps {

SymmetryReport check_symmetric(const SymmetricMPSTensor& t, double tol) {
    if (static_cast<int>(t.a.size()) != t.phys_dim) throw ShapeMismatch("wrong physical dimension");
    if (static_cast<int>(t.u.size()) != t.v.group.order)
        throw ShapeMismatch("U_g count does not match group order");
    for (const Mat& m : t.a)
        if (m.rows() != t.virt_dim || m.cols() != t.virt_dim)
            throw ShapeMismatch("virtual block has wrong shape");
    SymmetryReport report;
    const auto& g = t.v.group;
    for (int e = 0; e < g.order; ++e)
        for (int h = 0; h < g.order; ++h)
            report.u_rep_residual =
                std::max(report.u_rep_residual, (t.u[e] * t.u[h] - t.u[g.mult(e, h)]).norm());
    for (int e = 0; e < g.order; ++e)
        for (int i = 0; i < t.phys_dim; ++i) {
            Mat lhs = t.v[e] * t.a[i] * t.v[e].adjoint();
            Mat rhs = Mat::Zero(t.virt_dim, t.virt_dim);
            for (int j = 0; j < t.phys_dim; ++j) rhs += t.a[j] * t.u[e](j, i);
            report.max_residual = std::max(report.max_residual, (lhs - rhs).norm());
        }
    report.pass = report.max_residual < tol && report.u_rep_residual < tol;
    return report;
}

Mat project_physical(const SymmetricMPSTensor& t, const Vec& psi) {
    if (psi.size() != t.phys_dim) throw ShapeMismatch("state has wrong physical dimension");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        warn("project_physical: state is not normalized (|psi| = " + std::to_string(psi.norm()) +
             ")");
    Mat out = Mat::Zero(t.virt_dim, t.virt_dim);
    for (int i = 0; i < t.phys_dim; ++i) out += t.a[i] * psi(i);
    return out;
}

SymmetricMPSTensor from_fixed_points(const gates::GateTable& table,
                                     const std::vector<std::pair<int, Vec>>& chi_states) {
    const int d = static_cast<int>(chi_states.size());
    if (d == 0) throw Error("no characters given");
    const int phys = static_cast<int>(chi_states[0].second.size());
    for (const auto& [k, s] : chi_states) {
        if (static_cast<int>(s.size()) != phys) throw ShapeMismatch("inconsistent state lengths");
        if (!table.entries[k]) throw Error("character has no fixed point in the table");
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            cx ip = chi_states[i].second.dot(chi_states[j].second);
            if (std::abs(ip - (i == j ? cx(1, 0) : cx(0, 0))) > 1e-10)
                throw NonOrthonormalStates("physical states are not orthonormal");
        }
        for (int j = i + 1; j < d; ++j)
            if (chi_states[i].first == chi_states[j].first)
                throw Error("characters must be distinct");
    }

    SymmetricMPSTensor t;
    t.virt_dim = table.rep.dim;
    t.phys_dim = phys;
    t.v = table.rep;
    t.a.assign(phys, Mat::Zero(t.virt_dim, t.virt_dim));
    for (const auto& [k, s] : chi_states)
        for (int i = 0; i < phys; ++i) t.a[i] += *table.entries[k] * std::conj(s(i));
    // U_g = sum_chi chi(g) |chi><chi| (abelian physical action).
    t.u.assign(table.rep.group.order, Mat::Zero(phys, phys));
    for (int g = 0; g < table.rep.group.order; ++g)
        for (const auto& [k, s] : chi_states)
            t.u[g] += table.chars[k](g) * (s * s.adjoint());
    std::vector<int> pc(phys, -1);
    bool basis_aligned = true;
    for (const auto& [k, s] : chi_states) {
        int hot = -1;
        for (int i = 0; i < phys; ++i)
            if (std::abs(s(i)) > 1 - 1e-12) hot = i;
        if (hot < 0) basis_aligned = false;
        else pc[hot] = k;
    }
    if (basis_aligned) t.phys_char = pc;
    return t;
}

namespace {
Mat sx() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
Mat sy() { return (Mat(2, 2) << 0, cx(0, -1), cx(0, 1), 0).finished(); }
Mat sz() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }

// Character index in groups::characters(G) matching the given values on all
// elements.
int find_character(const std::vector<groups::Character>& chars, const std::vector<cx>& values) {
    for (size_t k = 0; k < chars.size(); ++k) {
        bool ok = true;
        for (size_t g = 0; g < values.size() && ok; ++g)
            ok = std::abs(chars[k].values[g] - values[g]) < 1e-9;
        if (ok) return static_cast<int>(k);
    }
    throw Error("character not found");
}
}  // namespace

SymmetricMPSTensor aklt_tensor() {
    SymmetricMPSTensor t;
    t.phys_dim = 3;
    t.virt_dim = 2;
    t.v = projrep::pauli_rep();  // group order: e, x, y, z
    t.a = {sx(), sy(), sz()};
    // U_g diagonal in the |m> basis with entries chi_m(g):
    // chi_m(e) = chi_m(m) = 1, all other values -1.
    t.u.assign(4, Mat::Zero(3, 3));
    for (int g = 0; g < 4; ++g)
        for (int m = 0; m < 3; ++m)
            t.u[g](m, m) = (g == 0 || g == m + 1) ? 1.0 : -1.0;
    auto chars = groups::characters(t.v.group);
    std::vector<int> pc(3);
    for (int m = 0; m < 3; ++m) {
        std::vector<cx> vals(4);
        for (int g = 0; g < 4; ++g) vals[g] = t.u[g](m, m);
        pc[m] = find_character(chars, vals);
    }
    t.phys_char = pc;
    return t;
}

SymmetricMPSTensor cluster_tensor() {
    SymmetricMPSTensor t;
    t.phys_dim = 4;  // |++>, |+->, |-+>, |--> of the grouped qubit pair
    t.virt_dim = 2;
    // Virtual action: the on-site generators sx(x)1 and 1(x)sx of Z2xZ2 act on
    // the edge by sx and sz respectively; their product carries sy.
    t.v.group = groups::build_named_group("Z2xZ2");
    t.v.dim = 2;
    t.v.matrices = {Mat::Identity(2, 2), sx(), sz(), sy()};
    t.a = {Mat::Identity(2, 2), sx(), sz(), cx(0, -1) * sy()};
    // U_g diagonal in |s1 s2>: element x (first generator) reads s1, element y
    // (second generator) reads s2, element z = xy reads s1 s2.
    auto sign = [](int bit) { return bit == 0 ? 1.0 : -1.0; };
    t.u.assign(4, Mat::Zero(4, 4));
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
            int i = 2 * s1 + s2;
            t.u[0](i, i) = 1.0;
            t.u[1](i, i) = sign(s1);
            t.u[2](i, i) = sign(s2);
            t.u[3](i, i) = sign(s1) * sign(s2);
        }
    auto chars = groups::characters(t.v.group);
    std::vector<int> pc(4);
    for (int i = 0; i < 4; ++i) {
        std::vector<cx> vals(4);
        for (int g = 0; g < 4; ++g) vals[g] = t.u[g](i, i);
        pc[i] = find_character(chars, vals);
    }
    t.phys_char = pc;
    return t;
}

Mat transfer_matrix(const SymmetricMPSTensor& t) {
    const int d2 = t.virt_dim * t.virt_dim;
    Mat out = Mat::Zero(d2, d2);
    for (int i = 0; i < t.phys_dim; ++i) out += kron(t.a[i], t.a[i].conjugate());
    return out;
}

nlohmann::json to_json(const SymmetricMPSTensor& t) {
    nlohmann::json j;
    j["phys_dim"] = t.phys_dim;
    j["virt_dim"] = t.virt_dim;
    std::vector<std::vector<std::vector<std::vector<double>>>> blocks;
    for (const Mat& m : t.a) {
        std::vector<std::vector<std::vector<double>>> rows;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            std::vector<std::vector<double>> row;
            for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    j["a"] = std::move(blocks);
    return j;
}

}  // namespace spchain::mps
