#include <cmath>
#include <numbers>

#include "spchain/chain.hpp"
#include "spchain/errors.hpp"

namespace spchain::chain {

namespace {

constexpr double kPi = std::numbers::pi;

double ramp_up(double t) {
    double s = std::sin(kPi * t / 2.0);
    return s * s;
}

// Middle-stage field angle: smooth 0 -> pi/2 with vanishing endpoint slope.
double theta_of(double s) { return (kPi / 2.0) * ramp_up(s); }

Vec3 require_coordinate_axis(const Vec3& axis) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw AxisNotUnit("axis must be unit");
    for (int k = 0; k < 3; ++k) {
        Vec3 e = Vec3::Zero();
        e(k) = 1.0;
        if ((axis - e).norm() < 1e-12 || (axis + e).norm() < 1e-12) return axis;
    }
    throw ConfigError(
        "field axis must be one of the coordinate axes; other embeddings are handled at the "
        "logical level");
}

LogicalPauliSpec logical_pauli(const ChainLayout& layout, const Vec3& axis, int first_site,
                               const std::string& label) {
    return LogicalPauliSpec{conserved_operator(layout, axis, first_site), cx(0, -1), label};
}

// Standard single-qubit logical pair (Z from the z-string, X from the x-string).
std::pair<LogicalPauliSpec, LogicalPauliSpec> standard_qubit(const ChainLayout& layout,
                                                             int first_site,
                                                             const std::string& tag) {
    return {logical_pauli(layout, Vec3(0, 0, 1), first_site, "Z_L" + tag),
            logical_pauli(layout, Vec3(1, 0, 0), first_site, "X_L" + tag)};
}

}  // namespace

Schedule schedule_const(double value) {
    return {[value](double) { return value; }, value == 1.0 ? "one" : std::to_string(value)};
}

Schedule schedule_smooth_up() {
    return {[](double t) { return ramp_up(t); }, "up"};
}

Schedule schedule_smooth_down() {
    return {[](double t) { return 1.0 - ramp_up(t); }, "down"};
}

Schedule schedule_named(const std::string& name) {
    if (name == "one") return schedule_const(1.0);
    if (name == "zero") return schedule_const(0.0);
    if (name == "up") return schedule_smooth_up();
    if (name == "down") return schedule_smooth_down();
    throw ConfigError("unknown ramp name: " + name);
}

ScheduledHamiltonian elementary_gate_schedule(int n, int j, double beta, const Vec3& axis,
                                              double J) {
    Vec3 m = require_coordinate_axis(axis);
    if (j < 0 || j > n - 2) throw BadBoundaryIndex("need 0 <= j <= N-2");
    auto chain = edge_coupled_chain(n, J, beta);
    ScheduledHamiltonian sched;
    sched.layout = chain.layout;
    sched.description = "elementary gate: boundary " + std::to_string(j) + " -> " +
                        std::to_string(j + 1) + ", axis " + std::to_string(m(0)) + "," +
                        std::to_string(m(1)) + "," + std::to_string(m(2));
    for (int i = 0; i < j; ++i)
        sched.terms.push_back({uniform_field_term(sched.layout, i, m, J), schedule_const(1.0)});
    sched.terms.push_back({uniform_field_term(sched.layout, j, m, J), schedule_smooth_up()});
    // chain.terms[i] is the bond (i, i+1) for i < n-1; the last entry is the edge coupling
    sched.terms.push_back({chain.terms[j], schedule_smooth_down()});
    for (int i = j + 1; i < n - 1; ++i) sched.terms.push_back({chain.terms[i], schedule_const(1.0)});
    sched.terms.push_back({chain.terms[n - 1], schedule_const(1.0)});  // edge coupling

    for (const Vec3& a : {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)})
        sched.conserved.push_back(conserved_operator(sched.layout, a, 0));
    sched.logical_in.qubits = {standard_qubit(sched.layout, 0, "")};
    sched.logical_out.qubits = {standard_qubit(sched.layout, j + 1, "'")};
    return sched;
}

ScheduledHamiltonian transistor_schedule(int n, double beta, const Vec3& axis, double J) {
    Vec3 m = require_coordinate_axis(axis);
    auto chain = edge_coupled_chain(n, J, beta);
    ScheduledHamiltonian sched;
    sched.layout = chain.layout;
    sched.description = "transistor crossfade, N = " + std::to_string(n);
    for (int i = 0; i < n; ++i)
        sched.terms.push_back({uniform_field_term(sched.layout, i, m, J), schedule_smooth_up()});
    for (const auto& t : chain.terms) sched.terms.push_back({t, schedule_smooth_down()});

    for (const Vec3& a : {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)})
        sched.conserved.push_back(conserved_operator(sched.layout, a, 0));
    sched.logical_in.qubits = {standard_qubit(sched.layout, 0, "")};
    // At t=1 only the free spin-1/2 remains: extent-0 strings i sigma^m.
    sched.logical_out.qubits = {standard_qubit(sched.layout, n, "'")};
    return sched;
}

ScheduledHamiltonian single_qubit_holonomy_schedule(int n, double beta, const Vec3& m,
                                                    const Vec3& mp, double J) {
    Vec3 a1 = require_coordinate_axis(m);
    Vec3 a2 = require_coordinate_axis(mp);
    if (std::abs(a1.dot(a2)) > 1e-12) throw AxesNotOrthogonal("holonomy axes must be orthogonal");
    auto chain = edge_coupled_chain(n, J, beta);
    ScheduledHamiltonian sched;
    sched.layout = chain.layout;
    sched.description = "single-qubit holonomy (decouple, rotate, recouple)";

    const double t1 = 1.0 / 3.0, t2 = 2.0 / 3.0;
    auto f_m = [t1, t2](double t) {
        if (t <= t1) return ramp_up(t / t1);
        if (t <= t2) {
            double c = std::cos(theta_of((t - t1) / (t2 - t1)));
            return c * c;
        }
        return 0.0;
    };
    auto f_mp = [t1, t2](double t) {
        if (t <= t1) return 0.0;
        if (t <= t2) {
            double s = std::sin(theta_of((t - t1) / (t2 - t1)));
            return s * s;
        }
        return 1.0 - ramp_up((t - t2) / (1.0 - t2));
    };
    auto f_cross = [t1, t2](double t) {
        if (t <= t1 || t > t2) return 0.0;
        double th = theta_of((t - t1) / (t2 - t1));
        return std::sin(th) * std::cos(th);
    };
    auto g = [t1, t2](double t) {
        if (t <= t1) return 1.0 - ramp_up(t / t1);
        if (t <= t2) return 0.0;
        return ramp_up((t - t2) / (1.0 - t2));
    };

    auto s = spin_operators(1.0);
    Mat s_m = a1(0) * s[0] + a1(1) * s[1] + a1(2) * s[2];
    Mat s_mp = a2(0) * s[0] + a2(1) * s[1] + a2(2) * s[2];
    Mat cross = s_m * s_mp + s_mp * s_m;

    sched.terms.push_back({uniform_field_term(sched.layout, 0, a1, J), Schedule{f_m, "f1"}});
    sched.terms.push_back({uniform_field_term(sched.layout, 0, a2, J), Schedule{f_mp, "f2"}});
    sched.terms.push_back(
        {make_term(sched.layout, {0}, J * cross, "F_cross[0]"), Schedule{f_cross, "cross"}});
    sched.terms.push_back({chain.terms[0], Schedule{g, "g"}});
    for (int i = 1; i < n - 1; ++i) sched.terms.push_back({chain.terms[i], schedule_const(1.0)});
    sched.terms.push_back({chain.terms[n - 1], schedule_const(1.0)});

    Vec3 third = a1.cross(a2);
    sched.conserved.push_back(conserved_operator(sched.layout, third, 0));
    sched.logical_in.qubits = {standard_qubit(sched.layout, 0, "")};
    sched.logical_out.qubits = {standard_qubit(sched.layout, 0, "'")};
    return sched;
}

ScheduledHamiltonian two_qubit_gate_schedule(int n_per_chain, double beta, double J) {
    const int n = n_per_chain;
    if (n < 2) throw BadChainLength("need at least two spin-1 sites per chain");
    std::vector<SpinSite> sites;
    for (int i = 0; i < n; ++i) sites.push_back(SpinSite::one());
    sites.push_back(SpinSite::half());
    for (int i = 0; i < n; ++i) sites.push_back(SpinSite::one());
    sites.push_back(SpinSite::half());
    ScheduledHamiltonian sched;
    sched.layout = ChainLayout::make(std::move(sites));  // throws DimensionCap
    sched.description = "two-qubit gate, N = " + std::to_string(n) + " per chain";

    const int a0 = 0, ah = n, b0 = n + 1, bh = 2 * n + 1;
    Mat bond = haldane_coupling(J, beta);
    Mat edge = edge_coupling(J);

    sched.terms.push_back({two_qubit_coupling(sched.layout, a0, b0, J), schedule_smooth_up()});
    sched.terms.push_back({make_term(sched.layout, {a0, a0 + 1}, bond, "H_A[0,1]"),
                           schedule_smooth_down()});
    sched.terms.push_back({make_term(sched.layout, {b0, b0 + 1}, bond, "H_B[0,1]"),
                           schedule_smooth_down()});
    for (int i = 1; i + 1 < n; ++i) {
        sched.terms.push_back({make_term(sched.layout, {a0 + i, a0 + i + 1}, bond,
                                         "H_A[" + std::to_string(i) + "," + std::to_string(i + 1) + "]"),
                               schedule_const(1.0)});
        sched.terms.push_back({make_term(sched.layout, {b0 + i, b0 + i + 1}, bond,
                                         "H_B[" + std::to_string(i) + "," + std::to_string(i + 1) + "]"),
                               schedule_const(1.0)});
    }
    sched.terms.push_back({make_term(sched.layout, {a0 + n - 1, ah}, edge, "edge_A"),
                           schedule_const(1.0)});
    sched.terms.push_back({make_term(sched.layout, {b0 + n - 1, bh}, edge, "edge_B"),
                           schedule_const(1.0)});

    // The five conserved strings generating the symmetry group of the coupling.
    const double pi = kPi;
    const double inv = 1.0 / std::sqrt(2.0);
    Vec3 u(inv, inv, 0), v(inv, -inv, 0), x(1, 0, 0), z(0, 0, 1);
    std::vector<int> a_sites, b_sites, all_sites;
    for (int s2 = a0; s2 <= ah; ++s2) a_sites.push_back(s2);
    for (int s2 = b0; s2 <= bh; ++s2) b_sites.push_back(s2);
    for (int s2 = 0; s2 <= bh; ++s2) all_sites.push_back(s2);
    sched.conserved.push_back(rotation_string(sched.layout, z, pi, a_sites, "Sigma^z_A"));
    sched.conserved.push_back(rotation_string(sched.layout, z, pi, b_sites, "Sigma^z_B"));
    sched.conserved.push_back(rotation_string(sched.layout, u, pi, all_sites, "Sigma^u_AB"));
    sched.conserved.push_back(rotation_string(sched.layout, v, pi, all_sites, "Sigma^v_AB"));
    sched.conserved.push_back(
        string_product(rotation_string(sched.layout, z, pi / 2, a_sites, ""),
                       rotation_string(sched.layout, x, pi, b_sites, ""), "sqrtSigma^z_A.Sigma^x_B"));

    auto qubit = [&](int first, int last_half, const std::string& tag) {
        std::vector<int> span;
        for (int s2 = first; s2 <= last_half; ++s2) span.push_back(s2);
        LogicalPauliSpec zop{rotation_string(sched.layout, z, pi, span, "Z" + tag), cx(0, -1),
                             "Z_L" + tag};
        LogicalPauliSpec xop{rotation_string(sched.layout, x, pi, span, "X" + tag), cx(0, -1),
                             "X_L" + tag};
        return std::make_pair(zop, xop);
    };
    sched.logical_in.qubits = {qubit(a0, ah, "_A"), qubit(b0, bh, "_B")};
    sched.logical_out.qubits = {qubit(a0 + 1, ah, "_A'"), qubit(b0 + 1, bh, "_B'")};
    return sched;
}

}  // namespace spchain::chain
