#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spchain/linalg.hpp"

namespace spchain::chain {

struct SpinSite {
    double spin = 1.0;
    int dim = 3;

    static SpinSite one() { return {1.0, 3}; }
    static SpinSite half() { return {0.5, 2}; }
};

/// Ordered list of sites.  State index convention: site 0 is the most
/// significant digit (kron order), strides[last] == 1.
struct ChainLayout {
    std::vector<SpinSite> sites;
    std::ptrdiff_t total_dim = 1;
    std::vector<std::ptrdiff_t> strides;

    /// Computes strides and enforces the dimension cap (env SPCHAIN_DIM_CAP,
    /// default 2^15); throws DimensionCap.
    static ChainLayout make(std::vector<SpinSite> sites);
    int num_sites() const { return static_cast<int>(sites.size()); }
};

std::ptrdiff_t dimension_cap();

/// Hermitian operator on the product space of `support` (listed order = kron
/// order, first site most significant).
struct OperatorTerm {
    std::vector<int> support;
    Mat matrix;
    std::string label;
};

/// Validates hermiticity, support indices and shape against the layout.
OperatorTerm make_term(const ChainLayout& layout, std::vector<int> support, Mat matrix,
                       std::string label);

}  // namespace spchain::chain
