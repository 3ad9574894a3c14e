#include <doctest.h>

#include <random>

#include "spchain/errors.hpp"
#include "spchain/projrep.hpp"

using namespace spchain;
using projrep::FactorSystem;
using projrep::GaugeFunction;

namespace {

GaugeFunction random_lattice_gauge(const groups::FiniteGroup& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    const int order = 2 * g.order;
    std::uniform_int_distribution<int> pick(0, order - 1);
    GaugeFunction beta;
    const double pi = std::acos(-1.0);
    for (int a = 0; a < g.order; ++a)
        beta.values.push_back(std::polar(1.0, 2 * pi * pick(rng) / order));
    return beta;
}

}  // namespace

TEST_CASE("pauli factor system matches the direct matrix products") {
    auto rep = projrep::pauli_rep();
    auto fs = projrep::factor_system_of(rep);
    // omega(g,h) is the phase of V_g V_h against V_{gh}; spot values
    // from the sigma algebra: sx sy = i sz and cyclic.
    CHECK(std::abs(fs(1, 2) - cx(0, 1)) < 1e-12);   // (x,y) -> i
    CHECK(std::abs(fs(2, 1) - cx(0, -1)) < 1e-12);  // (y,x) -> -i
    CHECK(std::abs(fs(3, 1) - cx(0, 1)) < 1e-12);   // (z,x) -> i
    CHECK(std::abs(fs(1, 3) - cx(0, -1)) < 1e-12);  // (x,z) -> -i
    CHECK(std::abs(fs(2, 3) - cx(0, 1)) < 1e-12);   // (y,z) -> i
    CHECK(std::abs(fs(3, 2) - cx(0, -1)) < 1e-12);  // (z,y) -> -i
    for (int g = 0; g < 4; ++g) {
        CHECK(std::abs(fs(g, g) - cx(1, 0)) < 1e-12);
        CHECK(std::abs(fs(0, g) - cx(1, 0)) < 1e-12);
        CHECK(std::abs(fs(g, 0) - cx(1, 0)) < 1e-12);
    }
    CHECK(fs.cocycle_residual() < 1e-12);
}

TEST_CASE("factor_system_of rejects non-projective input") {
    auto rep = projrep::pauli_rep();
    rep.matrices[1](0, 0) = 2.0;  // not unitary, not proportional to anything useful
    CHECK_THROWS_AS(projrep::factor_system_of(rep), NotProjective);
}

TEST_CASE("phi values for the pauli cocycle") {
    auto fs = projrep::factor_system_of(projrep::pauli_rep());
    CHECK(std::abs(projrep::phi(fs, 0) - cx(4, 0)) < 1e-12);
    for (int a = 1; a < 4; ++a) CHECK(std::abs(projrep::phi(fs, a)) < 1e-12);

    auto trivial = projrep::trivial_factor_system(fs.group);
    for (int a = 0; a < 4; ++a) CHECK(std::abs(projrep::phi(trivial, a) - cx(4, 0)) < 1e-12);
}

TEST_CASE("half x half representation of G2") {
    auto rep = projrep::half_half_rep();
    CHECK(rep.dim == 4);
    CHECK(rep.group.order == 16);
    rep.validate();
    auto fs = projrep::factor_system_of(rep);
    CHECK(fs.cocycle_residual() < 1e-10);  // exhaustive over 16^3 triples

    // phi vanishes on the three nontrivial central elements
    auto z = groups::center(rep.group);
    REQUIRE(z.order() == 4);
    for (int a : z.members) {
        if (a == rep.group.identity)
            CHECK(std::abs(projrep::phi(fs, a) - cx(16, 0)) < 1e-9);
        else
            CHECK(std::abs(projrep::phi(fs, a)) < 1e-9);
    }
    auto cert = projrep::nontriviality_certificate(fs);
    REQUIRE(cert.has_value());
    CHECK(z.contains(*cert));
}

TEST_CASE("nontriviality certificate") {
    auto fs = projrep::factor_system_of(projrep::pauli_rep());
    auto cert = projrep::nontriviality_certificate(fs);
    REQUIRE(cert.has_value());
    CHECK(*cert != fs.group.identity);
    CHECK_FALSE(projrep::nontriviality_certificate(projrep::trivial_factor_system(fs.group))
                    .has_value());
}

TEST_CASE("gauge transforms") {
    auto fs = projrep::factor_system_of(projrep::pauli_rep());

    GaugeFunction unit;
    unit.values.assign(4, cx(1, 0));
    auto same = projrep::gauge_transform(fs, unit);
    CHECK((same.omega - fs.omega).norm() < 1e-14);

    auto beta = random_lattice_gauge(fs.group, 42);
    auto gauged = projrep::gauge_transform(fs, beta);
    CHECK(gauged.cocycle_residual() < 1e-12);
    // phi is gauge-invariant on the center (here the whole group, abelian)
    for (int a = 0; a < 4; ++a)
        CHECK(std::abs(projrep::phi(fs, a) - projrep::phi(gauged, a)) < 1e-9);

    // gauging the trivial cocycle produces a coboundary with phi == |G| on the center
    auto trivial = projrep::trivial_factor_system(fs.group);
    auto cob = projrep::gauge_transform(trivial, beta);
    for (int a = 0; a < 4; ++a) CHECK(std::abs(projrep::phi(cob, a) - cx(4, 0)) < 1e-9);
}

TEST_CASE("factor_system_of composed with rephasing equals gauge_transform") {
    auto rep = projrep::pauli_rep();
    auto fs = projrep::factor_system_of(rep);
    for (unsigned seed : {1u, 2u, 3u}) {
        auto beta = random_lattice_gauge(rep.group, seed);
        auto fs_rephased = projrep::factor_system_of(projrep::rephase(rep, beta));
        auto fs_gauged = projrep::gauge_transform(fs, beta);
        CHECK((fs_rephased.omega - fs_gauged.omega).norm() < 1e-10);
    }
}

TEST_CASE("cohomology class equivalence") {
    auto fs = projrep::factor_system_of(projrep::pauli_rep());
    auto trivial = projrep::trivial_factor_system(fs.group);

    CHECK(projrep::are_equivalent(fs, fs));
    CHECK_FALSE(projrep::are_equivalent(fs, trivial));
    CHECK(projrep::are_equivalent(trivial, projrep::gauge_transform(trivial,
                                                                    random_lattice_gauge(fs.group, 9))));
    for (unsigned seed : {11u, 12u, 13u}) {
        auto beta = random_lattice_gauge(fs.group, seed);
        CHECK(projrep::are_equivalent(fs, projrep::gauge_transform(fs, beta)));
        CHECK(projrep::are_equivalent(projrep::gauge_transform(fs, beta), fs));
    }
    // transitivity spot check: omega ~ g1(omega), g1(omega) ~ g2(omega) and omega ~ g2(omega)
    auto g1 = projrep::gauge_transform(fs, random_lattice_gauge(fs.group, 21));
    auto g2 = projrep::gauge_transform(fs, random_lattice_gauge(fs.group, 22));
    CHECK(projrep::are_equivalent(g1, g2));

    // half x half cocycle: lattice-valued, equivalent to itself, not to trivial
    auto fs2 = projrep::factor_system_of(projrep::half_half_rep());
    CHECK(projrep::are_equivalent(fs2, fs2));
    CHECK_FALSE(projrep::are_equivalent(fs2, projrep::trivial_factor_system(fs2.group)));

    FactorSystem bad = trivial;
    bad.omega(1, 2) = std::polar(1.0, 0.37);  // not on the phase lattice
    CHECK_THROWS_AS(projrep::are_equivalent(bad, trivial), NotRootOfUnity);
}

TEST_CASE("irreducibility via commutant dimension") {
    auto pauli = projrep::pauli_rep();
    CHECK(projrep::commutant_dimension(pauli) == 1);
    CHECK(projrep::is_irreducible(pauli));

    auto hh = projrep::half_half_rep();
    CHECK(projrep::commutant_dimension(hh) == 1);

    auto doubled = projrep::direct_sum(pauli, pauli);
    CHECK(projrep::commutant_dimension(doubled) >= 2);
    CHECK_FALSE(projrep::is_irreducible(doubled));

    auto trivial = projrep::trivial_rep(pauli.group, 2);
    CHECK(projrep::commutant_dimension(trivial) == 4);
}
