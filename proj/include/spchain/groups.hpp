#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spchain/linalg.hpp"

namespace spchain::groups {

/// A finite group stored as an explicit multiplication table.
/// table[a * order + b] is the element index of a*b.  Construction validates
/// the full set of group axioms (Latin square, associativity, identity,
/// inverses), so a FiniteGroup instance is trusted downstream.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;
    int identity = 0;
    std::vector<std::string> labels;

    int mult(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inverse(int a) const;
    int element_order(int a) const;
    bool is_abelian() const;

    /// Validates all invariants; throws InvalidGroup on failure.
    static FiniteGroup from_table(std::vector<std::string> labels, std::vector<int> table);
};

struct Subgroup {
    FiniteGroup parent;
    std::vector<int> members;  // sorted element indices

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int a) const;
};

/// A one-dimensional unitary representation chi: G -> U(1), stored by value.
struct Character {
    std::vector<cx> values;  // indexed by element

    bool is_trivial(double tol = 1e-9) const;
    cx operator()(int g) const { return values[g]; }
};

struct Abelianization {
    FiniteGroup quotient;
    std::vector<int> to_coset;  // element index -> coset index (surjective hom)
};

/// name in {Z2, Z4, Z2xZ2, Z2xZ2_x_Z2xZ2, D2_semidirect_Z4}; throws UnknownGroupName.
FiniteGroup build_named_group(const std::string& name);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
Abelianization abelianization(const FiniteGroup& g);

/// All |G/[G,G]| one-dimensional representations, lifted through the
/// abelianization.  Deterministic order with the trivial character first.
std::vector<Character> characters(const FiniteGroup& g);

/// Backtracking search over generator images with order-profile pruning.
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// A small greedy generating set (used by is_isomorphic and the character
/// enumeration; not guaranteed minimal).
std::vector<int> generating_set(const FiniteGroup& g);

/// Closure of a set of matrices under multiplication, returned as a group
/// together with the matrix realizing each element.  Matrices are compared
/// entrywise with the given tolerance.  Used to recover abstract groups from
/// concrete (sets of commuting-block) rotation generators.
struct MatrixGroup {
    FiniteGroup group;
    std::vector<Mat> elements;
};
MatrixGroup group_from_matrix_generators(const std::vector<Mat>& generators,
                                         const std::vector<std::string>& gen_labels,
                                         int max_order = 256, double tol = 1e-9);

// G2 = D2 semidirect Z4 with its two distinguished generators
// (alpha of order 4, beta of order 2).
struct G2Build {
    FiniteGroup group;
    int alpha;
    int beta;
};
G2Build build_g2();

nlohmann::json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

}  // namespace spchain::groups
