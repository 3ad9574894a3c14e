#include "spchain/chain.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "spchain/errors.hpp"

namespace spchain::chain {

std::array<Mat, 3> spin_operators(double spin) {
    const int d = static_cast<int>(std::lround(2 * spin + 1));
    Mat sp = Mat::Zero(d, d);  // raising operator in the (+s..-s) ordering
    for (int k = 0; k < d - 1; ++k) {
        double m = spin - 1 - k;  // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>
        sp(k, k + 1) = std::sqrt(spin * (spin + 1) - m * (m + 1));
    }
    Mat sx = 0.5 * (sp + sp.adjoint());
    Mat sy = cx(0, -0.5) * (sp - sp.adjoint());
    Mat sz = Mat::Zero(d, d);
    for (int k = 0; k < d; ++k) sz(k, k) = spin - k;
    return {sx, sy, sz};
}

Mat spin_rotation(double spin, const Vec3& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw AxisNotUnit("rotation axis must be unit");
    auto s = spin_operators(spin);
    Mat ns = axis(0) * s[0] + axis(1) * s[1] + axis(2) * s[2];
    Eigen::SelfAdjointEigenSolver<Mat> es(ns);
    Vec phases(ns.rows());
    for (Eigen::Index k = 0; k < ns.rows(); ++k)
        phases(k) = std::polar(1.0, angle * es.eigenvalues()(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat haldane_coupling(double J, double beta) {
    auto s = spin_operators(1.0);
    Mat ss = Mat::Zero(9, 9);
    for (int k = 0; k < 3; ++k) ss += kron(s[k], s[k]);
    return J * (ss - beta * ss * ss);
}

Mat edge_coupling(double J) {
    auto s1 = spin_operators(1.0);
    auto sh = spin_operators(0.5);
    Mat c = Mat::Zero(6, 6);
    for (int k = 0; k < 3; ++k) c += kron(s1[k], sh[k]);
    return J * c;
}

std::vector<OperatorTerm> haldane_hamiltonian(const ChainLayout& layout, int n, double J,
                                              double beta) {
    if (n < 2) throw BadChainLength("need at least two spin-1 sites");
    if (beta <= -1.0 || beta >= 1.0)
        warn("beta = " + std::to_string(beta) + " lies outside the Haldane range (-1, 1)");
    std::vector<OperatorTerm> terms;
    Mat c = haldane_coupling(J, beta);
    for (int i = 0; i + 1 < n; ++i)
        terms.push_back(make_term(layout, {i, i + 1}, c,
                                  "H[" + std::to_string(i) + "," + std::to_string(i + 1) + "]"));
    return terms;
}

EdgeCoupledChain edge_coupled_chain(int n, double J, double beta) {
    if (n < 2) throw BadChainLength("need at least two spin-1 sites");
    std::vector<SpinSite> sites(n, SpinSite::one());
    sites.push_back(SpinSite::half());
    EdgeCoupledChain chain{ChainLayout::make(std::move(sites)), {}};
    chain.terms = haldane_hamiltonian(chain.layout, n, J, beta);
    chain.terms.push_back(make_term(chain.layout, {n - 1, n}, edge_coupling(J),
                                    "edge[" + std::to_string(n - 1) + ",s]"));
    return chain;
}

OperatorTerm uniform_field_term(const ChainLayout& layout, int site, const Vec3& axis, double J) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw AxisNotUnit("field axis must be unit");
    if (layout.sites[site].dim != 3) throw ShapeMismatch("field acts on spin-1 sites");
    auto s = spin_operators(1.0);
    Mat ns = axis(0) * s[0] + axis(1) * s[1] + axis(2) * s[2];
    return make_term(layout, {site}, J * ns * ns, "F[" + std::to_string(site) + "]");
}

Mat two_qubit_coupling_matrix() {
    auto s = spin_operators(1.0);
    Mat q = s[0] * s[0] - s[1] * s[1];
    return kron(q, s[2]) + kron(s[2], q);
}

OperatorTerm two_qubit_coupling(const ChainLayout& layout, int site_a, int site_b, double J) {
    return make_term(layout, {site_a, site_b}, J * two_qubit_coupling_matrix(),
                     "W_AB[" + std::to_string(site_a) + "," + std::to_string(site_b) + "]");
}

Vec xi_state() {
    Vec xi = Vec::Zero(9);  // basis |m1 m2>, m = +1, 0, -1 -> indices 0, 1, 2
    xi(0) = -0.5;           // |+1,+1>
    xi(2) = 0.5;            // |+1,-1>
    xi(6) = 0.5;            // |-1,+1>
    xi(8) = 0.5;            // |-1,-1>
    return xi;
}

Vec ConservedOperator::apply(const Vec& x) const {
    std::vector<const Mat*> factors(layout.num_sites(), nullptr);
    for (int s = 0; s < layout.num_sites(); ++s)
        if (!is_identity_on(s)) factors[s] = &site_factors[s];
    return apply_product_operator(layout, factors, x);
}

Mat ConservedOperator::dense() const {
    if (layout.total_dim > 4096) throw DimensionCap("dense string operator too large");
    Mat out = Mat::Identity(1, 1);
    for (const Mat& f : site_factors) out = kron(out, f);
    return out;
}

bool ConservedOperator::is_identity_on(int site) const {
    const Mat& f = site_factors[site];
    return (f - Mat::Identity(f.rows(), f.cols())).norm() < 1e-15;
}

ConservedOperator rotation_string(const ChainLayout& layout, const Vec3& axis, double angle,
                                  const std::vector<int>& sites, const std::string& label) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw AxisNotUnit("string axis must be unit");
    ConservedOperator op;
    op.layout = layout;
    op.label = label;
    op.site_factors.reserve(layout.num_sites());
    for (int s = 0; s < layout.num_sites(); ++s)
        op.site_factors.push_back(Mat::Identity(layout.sites[s].dim, layout.sites[s].dim));
    for (int s : sites) op.site_factors[s] = spin_rotation(layout.sites[s].spin, axis, angle);
    for (const Mat& f : op.site_factors)
        if (unitarity_residual(f) > 1e-10) throw Error("string factor is not unitary");
    return op;
}

namespace {
std::string axis_name(const Vec3& axis) {
    auto close = [&](double x, double y, double z) {
        return (axis - Vec3(x, y, z)).norm() < 1e-9;
    };
    if (close(1, 0, 0)) return "x";
    if (close(0, 1, 0)) return "y";
    if (close(0, 0, 1)) return "z";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%.3f,%.3f,%.3f)", axis(0), axis(1), axis(2));
    return buf;
}
}  // namespace

ConservedOperator conserved_operator(const ChainLayout& layout, const Vec3& axis, int first_site) {
    if (first_site < 0 || first_site > layout.num_sites() - 1)
        throw ShapeMismatch("first_site out of range");
    std::vector<int> sites;
    for (int s = first_site; s < layout.num_sites(); ++s) sites.push_back(s);
    const double pi = std::acos(-1.0);
    return rotation_string(layout, axis, pi, sites,
                           "Sigma^" + axis_name(axis) + "[" + std::to_string(first_site) + "..]");
}

ConservedOperator string_product(const ConservedOperator& a, const ConservedOperator& b,
                                 const std::string& label) {
    if (a.layout.total_dim != b.layout.total_dim) throw ShapeMismatch("layout mismatch");
    ConservedOperator out = a;
    out.label = label;
    for (int s = 0; s < a.layout.num_sites(); ++s) out.site_factors[s] = a.site_factors[s] * b.site_factors[s];
    return out;
}

HamOperator ScheduledHamiltonian::at(double t) const {
    HamOperator op;
    op.layout = layout;
    for (const auto& st : terms) {
        double c = st.schedule(t);
        if (std::abs(c) < 1e-14) continue;
        op.parts.emplace_back(build_embedded(layout, st.term), c);
    }
    return op;
}

double symmetry_residual(const ScheduledHamiltonian& sched, const ConservedOperator& op,
                         const std::vector<double>& times) {
    double worst = 0.0;
    for (const auto& st : sched.terms) {
        // Restriction of the string to the term's support, in the term's kron order.
        Mat u = Mat::Identity(1, 1);
        for (int s : st.term.support) u = kron(u, op.site_factors[s]);
        double comm = (st.term.matrix * u - u * st.term.matrix).norm();
        double cmax = 0.0;
        for (double t : times) cmax = std::max(cmax, std::abs(st.schedule(t)));
        worst = std::max(worst, comm * cmax);
    }
    return worst;
}

}  // namespace spchain::chain
