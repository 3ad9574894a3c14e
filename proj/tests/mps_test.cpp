#include <doctest.h>

#include <set>

#include "spchain/errors.hpp"
#include "spchain/mps.hpp"

using namespace spchain;

namespace {
Mat sx() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
Mat sy() { return (Mat(2, 2) << 0, cx(0, -1), cx(0, 1), 0).finished(); }
Mat sz() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }
}  // namespace

TEST_CASE("aklt tensor is (U,V)-symmetric") {
    auto t = mps::aklt_tensor();
    auto report = mps::check_symmetric(t);
    CHECK(report.pass);
    CHECK(report.max_residual < 1e-12);
    CHECK(report.u_rep_residual < 1e-12);
}

TEST_CASE("aklt tensor with one sign flipped fails the symmetry condition") {
    auto t = mps::aklt_tensor();
    t.a[1] = -t.a[1];  // breaks the m=y term
    auto report = mps::check_symmetric(t);
    CHECK_FALSE(report.pass);
    CHECK(report.max_residual > 1.0);
}

TEST_CASE("cluster tensor is (U,V)-symmetric") {
    auto t = mps::cluster_tensor();
    auto report = mps::check_symmetric(t);
    CHECK(report.pass);
    CHECK(report.max_residual < 1e-12);
}

TEST_CASE("project_physical") {
    auto aklt = mps::aklt_tensor();
    Vec m_x = Vec::Zero(3), m_y = Vec::Zero(3), m_z = Vec::Zero(3);
    m_x(0) = 1;
    m_y(1) = 1;
    m_z(2) = 1;
    CHECK((mps::project_physical(aklt, m_x) - sx()).norm() < 1e-14);
    CHECK((mps::project_physical(aklt, m_y) - sy()).norm() < 1e-14);
    CHECK((mps::project_physical(aklt, m_z) - sz()).norm() < 1e-14);

    auto cluster = mps::cluster_tensor();
    Vec pp = Vec::Zero(4), pm = Vec::Zero(4), mm = Vec::Zero(4);
    pp(0) = 1;
    pm(1) = 1;
    mm(3) = 1;
    CHECK((mps::project_physical(cluster, pp) - Mat::Identity(2, 2)).norm() < 1e-14);
    CHECK((mps::project_physical(cluster, pm) - sx()).norm() < 1e-14);
    CHECK((mps::project_physical(cluster, mm) - cx(0, -1) * sy()).norm() < 1e-14);

    int warnings = 0;
    set_warning_handler([&warnings](const std::string&) { ++warnings; });
    Vec zero = Vec::Zero(3);
    CHECK(mps::project_physical(aklt, zero).norm() < 1e-14);
    CHECK(warnings == 1);  // unnormalized input warns, result is not rescaled
    set_warning_handler(nullptr);

    Vec wrong = Vec::Zero(5);
    CHECK_THROWS_AS(mps::project_physical(aklt, wrong), ShapeMismatch);
}

TEST_CASE("theorem: A[chi] is the channel fixed point, up to phase") {
    for (auto t : {mps::aklt_tensor(), mps::cluster_tensor()}) {
        auto chars = groups::characters(t.v.group);
        auto table = gates::gate_table(t.v);
        REQUIRE(t.phys_char.has_value());
        for (int i = 0; i < t.phys_dim; ++i) {
            Vec e = Vec::Zero(t.phys_dim);
            e(i) = 1;
            Mat a_chi = mps::project_physical(t, e);
            int k = (*t.phys_char)[i];
            CHECK((gates::apply_gamma(t.v, chars[k], a_chi) - a_chi).norm() < 1e-12);
            REQUIRE(table.entries[k].has_value());
            CHECK(trace_fidelity(*table.entries[k], a_chi) > 1 - 1e-12);
        }
    }
}

TEST_CASE("from_fixed_points round trip") {
    for (auto t : {mps::aklt_tensor(), mps::cluster_tensor()}) {
        auto table = gates::gate_table(t.v);
        std::vector<std::pair<int, Vec>> chi_states;
        for (int i = 0; i < t.phys_dim; ++i) {
            Vec e = Vec::Zero(t.phys_dim);
            e(i) = 1;
            chi_states.emplace_back((*t.phys_char)[i], e);
        }
        auto rebuilt = mps::from_fixed_points(table, chi_states);
        CHECK(mps::check_symmetric(rebuilt).pass);
        for (int i = 0; i < t.phys_dim; ++i)
            CHECK(phase_distance(rebuilt.a[i], t.a[i]) < 1e-10);  // per-character phase freedom
    }
}

TEST_CASE("from_fixed_points with a single trivial character") {
    auto table = gates::gate_table(projrep::pauli_rep());
    Vec e0 = Vec::Zero(2);
    e0(0) = 1;
    auto t = mps::from_fixed_points(table, {{0, e0}});
    CHECK(mps::check_symmetric(t).pass);
    // trivial character, W = identity: every block proportional to the identity
    CHECK(phase_distance(t.a[0], Mat::Identity(2, 2)) < 1e-12);
}

TEST_CASE("from_fixed_points rejects bad inputs") {
    auto table = gates::gate_table(projrep::pauli_rep());
    Vec e0 = Vec::Zero(2), bad = Vec::Zero(2);
    e0(0) = 1;
    bad(0) = 1;
    bad(1) = 1;  // not orthonormal against e0 after normalization either
    CHECK_THROWS_AS(mps::from_fixed_points(table, {{0, e0}, {1, bad}}),
                    NonOrthonormalStates);
}

TEST_CASE("transfer matrix commutes with V (x) conj(V)") {
    for (auto t : {mps::aklt_tensor(), mps::cluster_tensor()}) {
        Mat tm = mps::transfer_matrix(t);
        for (int g = 0; g < t.v.group.order; ++g) {
            Mat vv = kron(t.v[g], t.v[g].conjugate());
            CHECK((vv * tm - tm * vv).norm() < 1e-12);
            CHECK((vv * tm * vv.adjoint() - tm).norm() < 1e-12);
        }
    }
}

TEST_CASE("cluster physical states carry four distinct characters") {
    auto t = mps::cluster_tensor();
    REQUIRE(t.phys_char.has_value());
    std::set<int> distinct((*t.phys_char).begin(), (*t.phys_char).end());
    CHECK(distinct.size() == 4);
}
