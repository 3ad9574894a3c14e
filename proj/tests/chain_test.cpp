#include <doctest.h>

#include <numbers>

#include "spchain/chain.hpp"
#include "spchain/eigs.hpp"
#include "spchain/errors.hpp"

using namespace spchain;
using namespace spchain::chain;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spin operators") {
    for (double spin : {0.5, 1.0}) {
        auto s = spin_operators(spin);
        CHECK((s[0] * s[1] - s[1] * s[0] - cx(0, 1) * s[2]).norm() < 1e-14);
        CHECK((s[1] * s[2] - s[2] * s[1] - cx(0, 1) * s[0]).norm() < 1e-14);
        CHECK((s[2] * s[0] - s[0] * s[2] - cx(0, 1) * s[1]).norm() < 1e-14);
        double casimir = spin * (spin + 1);
        Mat c = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
        CHECK((c - casimir * Mat::Identity(c.rows(), c.cols())).norm() < 1e-13);
    }
    // spin 1/2: sigma/2
    auto sh = spin_operators(0.5);
    CHECK((2 * sh[2] - (Mat(2, 2) << 1, 0, 0, -1).finished()).norm() < 1e-14);
}

TEST_CASE("pi rotations on spin 1") {
    Mat rz = spin_rotation(1.0, Vec3(0, 0, 1), kPi);
    Mat expect = Mat::Zero(3, 3);
    expect(0, 0) = -1;
    expect(1, 1) = 1;
    expect(2, 2) = -1;  // e^{i pi m} on m = +1, 0, -1
    CHECK((rz - expect).norm() < 1e-13);

    // exp(i pi S^m) == 1 - 2 (S^m)^2 for spin 1
    for (const Vec3& axis : {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}) {
        auto s = spin_operators(1.0);
        Mat ns = axis(0) * s[0] + axis(1) * s[1] + axis(2) * s[2];
        CHECK((spin_rotation(1.0, axis, kPi) - (Mat::Identity(3, 3) - 2 * ns * ns)).norm() < 1e-13);
    }

    // exp(i pi S^x) |S^z = 0> = -|S^z = 0>
    Vec sz0 = Vec::Zero(3);
    sz0(1) = 1;
    CHECK((spin_rotation(1.0, Vec3(1, 0, 0), kPi) * sz0 + sz0).norm() < 1e-13);
    // exp(i pi S^z) |S^z = 0> = +|S^z = 0>
    CHECK((spin_rotation(1.0, Vec3(0, 0, 1), kPi) * sz0 - sz0).norm() < 1e-13);
}

TEST_CASE("haldane terms") {
    auto layout = ChainLayout::make({SpinSite::one(), SpinSite::one(), SpinSite::one()});
    CHECK_THROWS_AS(haldane_hamiltonian(layout, 1, 1.0, 0.0), BadChainLength);

    int warnings = 0;
    set_warning_handler([&warnings](const std::string&) { ++warnings; });
    haldane_hamiltonian(layout, 3, 1.0, 1.5);  // outside the Haldane range
    CHECK(warnings == 1);
    warnings = 0;
    haldane_hamiltonian(layout, 3, 1.0, 0.0);
    CHECK(warnings == 0);
    set_warning_handler(nullptr);

    // Heisenberg term commutes with joint rotations about any axis
    Mat h = haldane_coupling(1.0, 0.0);
    for (const Vec3& axis : {Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0.6, 0, 0.8)}) {
        Mat r = spin_rotation(1.0, axis, 0.7);
        Mat rr = kron(r, r);
        CHECK((rr * h - h * rr).norm() < 1e-12);
    }
}

TEST_CASE("edge-coupled chain has exact twofold ground degeneracy") {
    for (double beta : {-1.0 / 3.0, 0.0}) {
        auto ec = edge_coupled_chain(3, 1.0, beta);
        HamOperator op;
        op.layout = ec.layout;
        for (const auto& t : ec.terms) op.parts.emplace_back(build_embedded(ec.layout, t), 1.0);
        auto gs = ground_space(op, GroundSpaceOptions{});
        CHECK(gs.degeneracy == 2);
        CHECK(gs.gap > 0.0);
    }
}

TEST_CASE("conserved strings") {
    auto ec = edge_coupled_chain(3, 1.0, -1.0 / 3.0);
    auto sig_z = conserved_operator(ec.layout, Vec3(0, 0, 1), 0);
    auto sig_x = conserved_operator(ec.layout, Vec3(1, 0, 0), 0);

    Mat dz = sig_z.dense();
    Mat dx = sig_x.dense();
    // projective sign: the strings square to -1 on the chain + edge space
    CHECK((dz * dz + Mat::Identity(dz.rows(), dz.cols())).norm() < 1e-12);
    CHECK((dx * dx + Mat::Identity(dx.rows(), dx.cols())).norm() < 1e-12);
    // and anticommute, as a nontrivial projective representation should
    CHECK((dz * dx + dx * dz).norm() < 1e-12);

    HamOperator op;
    op.layout = ec.layout;
    for (const auto& t : ec.terms) op.parts.emplace_back(build_embedded(ec.layout, t), 1.0);
    Mat h = op.dense();
    CHECK((h * dz - dz * h).norm() < 1e-11);
    CHECK((h * dx - dx * h).norm() < 1e-11);

    // apply() agrees with the dense matrix
    Vec x = Vec::Random(ec.layout.total_dim);
    CHECK((sig_z.apply(x) - dz * x).norm() < 1e-12);

    // extent-0 string: i sigma^m on the spin-1/2 alone
    auto tiny = conserved_operator(ec.layout, Vec3(0, 0, 1), 3);
    Mat expected = kron(Mat::Identity(27, 27),
                        cx(0, 1) * (Mat(2, 2) << 1, 0, 0, -1).finished());
    CHECK((tiny.dense() - expected).norm() < 1e-12);
}

TEST_CASE("symmetry residual: per-term check matches the dense commutator") {
    auto sched = elementary_gate_schedule(3, 0, -1.0 / 3.0, Vec3(0, 0, 1));
    std::vector<double> times{0.0, 0.3, 0.5, 0.8, 1.0};
    for (const auto& op : sched.conserved) {
        double per_term = symmetry_residual(sched, op, times);
        double dense_worst = 0.0;
        Mat d = op.dense();
        for (double t : times) {
            Mat h = sched.at(t).dense();
            dense_worst = std::max(dense_worst, (h * d - d * h).norm());
        }
        CHECK(per_term < 1e-11);
        CHECK(dense_worst < 1e-11);
    }
}

TEST_CASE("schedule endpoints") {
    auto sched = elementary_gate_schedule(4, 0, -1.0 / 3.0, Vec3(0, 0, 1));
    // t=0: no field, full SP chain; t=1: field on, bond off
    Mat h0 = sched.at(0.0).dense();
    Mat h1 = sched.at(1.0).dense();

    auto ec = edge_coupled_chain(4, 1.0, -1.0 / 3.0);
    HamOperator sp;
    sp.layout = ec.layout;
    for (const auto& t : ec.terms) sp.parts.emplace_back(build_embedded(ec.layout, t), 1.0);
    CHECK((h0 - sp.dense()).norm() < 1e-12);

    HamOperator moved;
    moved.layout = ec.layout;
    moved.parts.emplace_back(
        build_embedded(ec.layout, uniform_field_term(ec.layout, 0, Vec3(0, 0, 1))), 1.0);
    for (size_t k = 1; k < ec.terms.size(); ++k)
        moved.parts.emplace_back(build_embedded(ec.layout, ec.terms[k]), 1.0);
    CHECK((h1 - moved.dense()).norm() < 1e-12);

    CHECK_THROWS_AS(elementary_gate_schedule(4, 3, 0.0, Vec3(0, 0, 1)), BadBoundaryIndex);
    CHECK_THROWS_AS(elementary_gate_schedule(4, 0, 0.0, Vec3(0.6, 0.8, 0)), ConfigError);
}

TEST_CASE("transistor endpoints") {
    auto sched = transistor_schedule(3, -1.0 / 3.0, Vec3(0, 0, 1));
    Mat h0 = sched.at(0.0).dense();
    Mat h1 = sched.at(1.0).dense();

    auto ec = edge_coupled_chain(3, 1.0, -1.0 / 3.0);
    HamOperator sp;
    sp.layout = ec.layout;
    for (const auto& t : ec.terms) sp.parts.emplace_back(build_embedded(ec.layout, t), 1.0);
    CHECK((h0 - sp.dense()).norm() < 1e-12);

    HamOperator fields;
    fields.layout = ec.layout;
    for (int i = 0; i < 3; ++i)
        fields.parts.emplace_back(
            build_embedded(ec.layout, uniform_field_term(ec.layout, i, Vec3(0, 0, 1))), 1.0);
    CHECK((h1 - fields.dense()).norm() < 1e-12);

    // pure field ground space: |chi>^N (x) free spin-1/2 doublet
    auto gs = ground_space(sched.at(1.0), GroundSpaceOptions{});
    CHECK(gs.degeneracy == 2);
}

TEST_CASE("holonomy schedule boundary conditions") {
    auto sched = single_qubit_holonomy_schedule(3, -1.0 / 3.0, Vec3(0, 0, 1), Vec3(1, 0, 0));
    CHECK_THROWS_AS(single_qubit_holonomy_schedule(3, 0.0, Vec3(0, 0, 1), Vec3(0, 0, 1)),
                    AxesNotOrthogonal);
    // H(0) == H(1) == the full chain
    Mat h0 = sched.at(0.0).dense();
    Mat h1 = sched.at(1.0).dense();
    CHECK((h0 - h1).norm() < 1e-12);

    // stage boundaries: at 1/3 only the m-field, at 2/3 only the m'-field
    auto field_of = [&](double t, int which) {
        Mat h = sched.at(t).dense();
        auto ec = edge_coupled_chain(3, 1.0, -1.0 / 3.0);
        HamOperator rest;
        rest.layout = ec.layout;
        for (size_t k = 1; k < ec.terms.size(); ++k)
            rest.parts.emplace_back(build_embedded(ec.layout, ec.terms[k]), 1.0);
        Vec3 axis = which == 0 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
        HamOperator field;
        field.layout = ec.layout;
        field.parts.emplace_back(build_embedded(ec.layout, uniform_field_term(ec.layout, 0, axis)),
                                 1.0);
        return (h - rest.dense() - field.dense()).norm();
    };
    CHECK(field_of(1.0 / 3.0, 0) < 1e-12);
    CHECK(field_of(2.0 / 3.0, 1) < 1e-12);

    // mid-rotation: the site field is (S^m(theta))^2 with a constant site
    // spectrum {0, 1, 1}; the total ground degeneracy stays 2
    auto gs = ground_space(sched.at(0.5), GroundSpaceOptions{});
    CHECK(gs.degeneracy == 2);
}

TEST_CASE("two-qubit schedule assembles both chains") {
    auto sched = two_qubit_gate_schedule(2, -1.0 / 3.0);
    CHECK(sched.layout.total_dim == 324);  // (3^2 * 2)^2
    CHECK(sched.conserved.size() == 5);
    // W^AB is off at t=0 and the recouplers are on
    Mat h0 = sched.at(0.0).dense();
    auto gs0 = ground_space(sched.at(0.0), GroundSpaceOptions{.dense_threshold = 400});
    CHECK(gs0.degeneracy == 4);
    auto gs1 = ground_space(sched.at(1.0), GroundSpaceOptions{.dense_threshold = 400});
    CHECK(gs1.degeneracy == 4);
    (void)h0;
    CHECK_THROWS_AS(two_qubit_gate_schedule(1, 0.0), BadChainLength);
}

TEST_CASE("xi eigenvalue table") {
    Vec xi = xi_state();
    CHECK(xi.norm() == doctest::Approx(1.0).epsilon(1e-14));
    Mat w = two_qubit_coupling_matrix();
    CHECK((w * xi + 2.0 * xi).norm() < 1e-13);  // eigenvalue -2, the minimum

    const double s = 1.0 / std::sqrt(2.0);
    Mat id3 = Mat::Identity(3, 3);
    auto rot = [](const Vec3& ax, double a) { return spin_rotation(1.0, ax, a); };
    CHECK((kron(rot(Vec3(0, 0, 1), kPi), id3) * xi + xi).norm() < 1e-13);
    CHECK((kron(id3, rot(Vec3(0, 0, 1), kPi)) * xi + xi).norm() < 1e-13);
    CHECK((kron(rot(Vec3(s, s, 0), kPi), rot(Vec3(s, s, 0), kPi)) * xi - xi).norm() < 1e-13);
    CHECK((kron(rot(Vec3(s, -s, 0), kPi), rot(Vec3(s, -s, 0), kPi)) * xi - xi).norm() < 1e-13);
    CHECK((kron(rot(Vec3(0, 0, 1), kPi / 2), rot(Vec3(1, 0, 0), kPi)) * xi - cx(0, 1) * xi).norm() <
          1e-13);
}

TEST_CASE("gap profile") {
    // constant Hamiltonian: flat profile
    auto ec = edge_coupled_chain(2, 1.0, -1.0 / 3.0);
    ScheduledHamiltonian sched;
    sched.layout = ec.layout;
    for (const auto& t : ec.terms) sched.terms.push_back({t, schedule_const(1.0)});
    auto prof = gap_profile(sched, 5);
    REQUIRE(prof.size() == 5);
    for (const auto& [t, g] : prof) CHECK(g == doctest::Approx(prof[0].second).epsilon(1e-12));

    CHECK_THROWS_AS(gap_profile(sched, 1), ConfigError);
}
