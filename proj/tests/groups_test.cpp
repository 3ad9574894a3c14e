#include <doctest.h>

#include <set>

#include "spchain/errors.hpp"
#include "spchain/groups.hpp"

using namespace spchain;
using groups::FiniteGroup;

namespace {

// Exhaustive axioms, independent of the checks in from_table.
void check_axioms(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a) {
        std::set<int> row, col;
        for (int b = 0; b < g.order; ++b) {
            row.insert(g.mult(a, b));
            col.insert(g.mult(b, a));
        }
        CHECK(row.size() == static_cast<size_t>(g.order));
        CHECK(col.size() == static_cast<size_t>(g.order));
        CHECK(g.mult(g.identity, a) == a);
        CHECK(g.mult(a, g.identity) == a);
        CHECK(g.mult(a, g.inverse(a)) == g.identity);
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                CHECK(g.mult(g.mult(a, b), c) == g.mult(a, g.mult(b, c)));
}

}  // namespace

TEST_CASE("named groups satisfy the group axioms") {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "Z2xZ2_x_Z2xZ2", "D2_semidirect_Z4"}) {
        CAPTURE(name);
        check_axioms(groups::build_named_group(name));
    }
    CHECK_THROWS_AS(groups::build_named_group("Q8"), UnknownGroupName);
}

TEST_CASE("klein four group: all non-identity elements are involutions") {
    auto g = groups::build_named_group("Z2xZ2");
    CHECK(g.order == 4);
    for (int a = 1; a < 4; ++a) CHECK(g.element_order(a) == 2);
    CHECK(g.is_abelian());
}

TEST_CASE("Z4 is cyclic of order 4") {
    auto g = groups::build_named_group("Z4");
    CHECK(g.order == 4);
    int alpha = 1;
    CHECK(g.element_order(alpha) == 4);
    CHECK(g.mult(alpha, alpha) != g.identity);
}

TEST_CASE("G2 structure: center, derived subgroup, abelianization") {
    auto g2 = groups::build_g2();
    const auto& g = g2.group;
    CHECK(g.order == 16);
    CHECK_FALSE(g.is_abelian());

    auto z = groups::center(g);
    CHECK(z.order() == 4);
    // Z(G2) = {1, a^2, (ab)^2, (ab)^2 a^2}, a Klein four group.
    int a2 = g.mult(g2.alpha, g2.alpha);
    int ab = g.mult(g2.alpha, g2.beta);
    int ab2 = g.mult(ab, ab);
    CHECK(z.contains(g.identity));
    CHECK(z.contains(a2));
    CHECK(z.contains(ab2));
    CHECK(z.contains(g.mult(ab2, a2)));
    for (int m : z.members)
        if (m != g.identity) CHECK(g.element_order(m) == 2);

    auto d = groups::derived_subgroup(g);
    CHECK(d.order() == 2);
    CHECK(d.contains(g.mult(ab2, a2)));  // the only nontrivial commutator value

    auto ab_q = groups::abelianization(g);
    CHECK(ab_q.quotient.order == 8);
    CHECK(ab_q.quotient.is_abelian());
    // |G| = |derived| x |abelianization|
    CHECK(g.order == d.order() * ab_q.quotient.order);
    // quotient map is a homomorphism
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            CHECK(ab_q.to_coset[g.mult(x, y)] ==
                  ab_q.quotient.mult(ab_q.to_coset[x], ab_q.to_coset[y]));

    // generator relations: alpha^4 = beta^2 = 1
    CHECK(g.mult(a2, a2) == g.identity);
    CHECK(g.mult(g2.beta, g2.beta) == g.identity);
    CHECK(g.element_order(g2.alpha) == 4);
}

TEST_CASE("abelianization of abelian groups is the identity map") {
    for (const char* name : {"Z2xZ2", "Z4", "Z2xZ2_x_Z2xZ2"}) {
        auto g = groups::build_named_group(name);
        auto ab = groups::abelianization(g);
        CHECK(ab.quotient.order == g.order);
        CHECK(groups::derived_subgroup(g).order() == 1);
    }
}

TEST_CASE("characters are exactly the homomorphisms to U(1)") {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "D2_semidirect_Z4"}) {
        CAPTURE(name);
        auto g = groups::build_named_group(name);
        auto chars = groups::characters(g);
        CHECK(static_cast<int>(chars.size()) == groups::abelianization(g).quotient.order);
        CHECK(chars[0].is_trivial());
        for (const auto& chi : chars) {
            CHECK(std::abs(chi(g.identity) - cx(1, 0)) < 1e-12);
            for (int a = 0; a < g.order; ++a) {
                CHECK(std::abs(std::abs(chi(a)) - 1.0) < 1e-12);
                for (int b = 0; b < g.order; ++b)
                    CHECK(std::abs(chi(a) * chi(b) - chi(g.mult(a, b))) < 1e-12);
            }
        }
        // orthogonality: sum_g chi(g) conj(phi(g)) = |G| delta
        for (size_t i = 0; i < chars.size(); ++i)
            for (size_t j = 0; j < chars.size(); ++j) {
                cx s = 0;
                for (int a = 0; a < g.order; ++a) s += chars[i](a) * std::conj(chars[j](a));
                CHECK(std::abs(s - (i == j ? cx(g.order, 0) : cx(0, 0))) < 1e-12);
            }
    }
}

TEST_CASE("Z4 characters take values in the fourth roots of unity") {
    auto g = groups::build_named_group("Z4");
    auto chars = groups::characters(g);
    REQUIRE(chars.size() == 4);
    std::set<int> phases;
    for (const auto& chi : chars) {
        cx v = chi(1);  // generator
        phases.insert(static_cast<int>(std::lround(std::arg(v) / (std::acos(-1.0) / 2))));
    }
    CHECK(phases.size() == 4);
}

TEST_CASE("Z2xZ2 characters: trivial plus the three chi_m") {
    auto chars = groups::characters(groups::build_named_group("Z2xZ2"));
    REQUIRE(chars.size() == 4);
    // chi_m(e) = chi_m(m) = 1, all other values -1
    for (int m = 1; m <= 3; ++m) {
        bool found = false;
        for (const auto& chi : chars) {
            bool match = std::abs(chi(0) - cx(1, 0)) < 1e-12 && std::abs(chi(m) - cx(1, 0)) < 1e-12;
            for (int other = 1; other <= 3 && match; ++other)
                if (other != m) match = std::abs(chi(other) - cx(-1, 0)) < 1e-12;
            found = found || match;
        }
        CHECK(found);
    }
}

TEST_CASE("isomorphism testing") {
    auto z2z2 = groups::build_named_group("Z2xZ2");
    auto z4 = groups::build_named_group("Z4");
    CHECK_FALSE(groups::is_isomorphic(z2z2, z4));
    CHECK(groups::is_isomorphic(z2z2, z2z2));
    auto g2 = groups::build_named_group("D2_semidirect_Z4");
    CHECK(groups::is_isomorphic(g2, g2));
    // same order but abelian: cannot match the nonabelian semidirect product
    CHECK_FALSE(groups::is_isomorphic(g2, groups::direct_product(z2z2, z4)));
}

TEST_CASE("JSON round trip") {
    auto g = groups::build_named_group("D2_semidirect_Z4");
    auto j = groups::to_json(g);
    auto back = groups::group_from_json(j);
    CHECK(back.order == g.order);
    CHECK(back.table == g.table);
    CHECK(back.labels == g.labels);
}
