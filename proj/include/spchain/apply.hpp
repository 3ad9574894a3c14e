#pragma once

#include <utility>
#include <vector>

#include "spchain/chain_types.hpp"

namespace spchain::chain {

/// An OperatorTerm bound to a layout with precomputed offsets so it can be
/// applied to state vectors without materializing the full matrix.
struct EmbeddedTerm {
    std::vector<int> sites;
    Mat m;
    int msize = 0;
    std::vector<std::ptrdiff_t> offs;          // state offsets of the support block
    std::vector<int> comp_dims;                // dims of non-support sites
    std::vector<std::ptrdiff_t> comp_strides;  // matching strides
    std::ptrdiff_t comp_count = 1;
    std::string label;
};

EmbeddedTerm build_embedded(const ChainLayout& layout, const OperatorTerm& term);

/// y += coeff * (term (x) identity) x.  Serial reference implementation.
void apply_term_serial(const EmbeddedTerm& t, cx coeff, const cx* x, cx* y);

/// Same contract as apply_term_serial, but OpenMP-parallel over the
/// complement space (distinct iterations touch disjoint amplitudes).
void apply_term_parallel(const EmbeddedTerm& t, cx coeff, const cx* x, cx* y);

/// Scatter coeff * term into a dense Hermitian matrix (OpenMP-parallel over
/// the complement space; blocks touch disjoint entries).
void add_term_dense(const EmbeddedTerm& t, cx coeff, Mat& h);

/// A weighted sum of embedded terms: H = sum_k coeff_k T_k.
struct HamOperator {
    ChainLayout layout;
    std::vector<std::pair<EmbeddedTerm, double>> parts;

    void apply(const cx* x, cx* y, bool parallel) const;  // y = H x
    Vec apply(const Vec& x, bool parallel = true) const;
    Mat dense() const;
    std::ptrdiff_t dim() const { return layout.total_dim; }
};

/// Apply a site-factorized product operator (one matrix per site, identity
/// omitted as nullptr) to a state vector.
Vec apply_product_operator(const ChainLayout& layout, const std::vector<const Mat*>& factors,
                           const Vec& x);

}  // namespace spchain::chain
