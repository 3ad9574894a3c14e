#include "spchain/apply.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "spchain/errors.hpp"

namespace spchain::chain {

namespace {
constexpr int kMaxBlock = 128;  // largest supported term block (two spin-1 sites: 81)
}

ChainLayout ChainLayout::make(std::vector<SpinSite> sites) {
    if (sites.empty()) throw ShapeMismatch("layout needs at least one site");
    ChainLayout l;
    l.sites = std::move(sites);
    l.strides.assign(l.sites.size(), 1);
    std::ptrdiff_t dim = 1;
    for (int i = l.num_sites() - 1; i >= 0; --i) {
        l.strides[i] = dim;
        dim *= l.sites[i].dim;
        if (dim > dimension_cap())
            throw DimensionCap("total dimension " + std::to_string(dim) + " exceeds cap " +
                               std::to_string(dimension_cap()));
    }
    l.total_dim = dim;
    return l;
}

std::ptrdiff_t dimension_cap() {
    static const std::ptrdiff_t cap = [] {
        if (const char* env = std::getenv("SPCHAIN_DIM_CAP")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::ptrdiff_t>(v);
        }
        return static_cast<std::ptrdiff_t>(1) << 15;
    }();
    return cap;
}

OperatorTerm make_term(const ChainLayout& layout, std::vector<int> support, Mat matrix,
                       std::string label) {
    std::ptrdiff_t block = 1;
    for (size_t i = 0; i < support.size(); ++i) {
        int s = support[i];
        if (s < 0 || s >= layout.num_sites()) throw ShapeMismatch("support site out of range");
        for (size_t j = i + 1; j < support.size(); ++j)
            if (support[j] == s) throw ShapeMismatch("support sites must be distinct");
        block *= layout.sites[s].dim;
    }
    if (matrix.rows() != block || matrix.cols() != block)
        throw ShapeMismatch("term matrix does not match support dimensions for " + label);
    if (hermiticity_residual(matrix) > 1e-12 * std::max(1.0, matrix.norm()))
        throw ShapeMismatch("term matrix is not Hermitian: " + label);
    return OperatorTerm{std::move(support), std::move(matrix), std::move(label)};
}

EmbeddedTerm build_embedded(const ChainLayout& layout, const OperatorTerm& term) {
    EmbeddedTerm t;
    t.sites = term.support;
    t.m = term.matrix;
    t.label = term.label;
    t.msize = static_cast<int>(term.matrix.rows());
    if (t.msize > kMaxBlock) throw ShapeMismatch("term block too large");

    // offsets of the support block: first listed site most significant
    t.offs.assign(t.msize, 0);
    for (int j = 0; j < t.msize; ++j) {
        int rem = j;
        for (int k = static_cast<int>(t.sites.size()) - 1; k >= 0; --k) {
            int d = layout.sites[t.sites[k]].dim;
            t.offs[j] += static_cast<std::ptrdiff_t>(rem % d) * layout.strides[t.sites[k]];
            rem /= d;
        }
    }
    for (int s = 0; s < layout.num_sites(); ++s) {
        if (std::find(t.sites.begin(), t.sites.end(), s) != t.sites.end()) continue;
        t.comp_dims.push_back(layout.sites[s].dim);
        t.comp_strides.push_back(layout.strides[s]);
        t.comp_count *= layout.sites[s].dim;
    }
    return t;
}

namespace {

inline std::ptrdiff_t comp_base(const EmbeddedTerm& t, std::ptrdiff_t c) {
    std::ptrdiff_t base = 0;
    for (int k = static_cast<int>(t.comp_dims.size()) - 1; k >= 0; --k) {
        base += (c % t.comp_dims[k]) * t.comp_strides[k];
        c /= t.comp_dims[k];
    }
    return base;
}

inline void apply_block(const EmbeddedTerm& t, cx coeff, const cx* x, cx* y,
                        std::ptrdiff_t base) {
    std::array<cx, kMaxBlock> buf;
    const int m = t.msize;
    for (int j = 0; j < m; ++j) buf[j] = x[base + t.offs[j]];
    for (int r = 0; r < m; ++r) {
        cx acc = 0.0;
        const cx* row = t.m.data() + r;  // column-major: stride m over columns
        for (int j = 0; j < m; ++j) acc += row[static_cast<std::ptrdiff_t>(j) * m] * buf[j];
        y[base + t.offs[r]] += coeff * acc;
    }
}

}  // namespace

void apply_term_serial(const EmbeddedTerm& t, cx coeff, const cx* x, cx* y) {
    for (std::ptrdiff_t c = 0; c < t.comp_count; ++c) apply_block(t, coeff, x, y, comp_base(t, c));
}

void apply_term_parallel(const EmbeddedTerm& t, cx coeff, const cx* x, cx* y) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < t.comp_count; ++c) apply_block(t, coeff, x, y, comp_base(t, c));
}

void add_term_dense(const EmbeddedTerm& t, cx coeff, Mat& h) {
    const int m = t.msize;
    // Distinct complement blocks touch disjoint matrix entries.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < t.comp_count; ++c) {
        std::ptrdiff_t base = comp_base(t, c);
        for (int r = 0; r < m; ++r)
            for (int j = 0; j < m; ++j) h(base + t.offs[r], base + t.offs[j]) += coeff * t.m(r, j);
    }
}

void HamOperator::apply(const cx* x, cx* y, bool parallel) const {
    std::fill(y, y + layout.total_dim, cx(0, 0));
    for (const auto& [term, coeff] : parts) {
        if (coeff == 0.0) continue;
        if (parallel)
            apply_term_parallel(term, coeff, x, y);
        else
            apply_term_serial(term, coeff, x, y);
    }
}

Vec HamOperator::apply(const Vec& x, bool parallel) const {
    Vec y(layout.total_dim);
    apply(x.data(), y.data(), parallel);
    return y;
}

Mat HamOperator::dense() const {
    Mat h = Mat::Zero(layout.total_dim, layout.total_dim);
    for (const auto& [term, coeff] : parts)
        if (coeff != 0.0) add_term_dense(term, coeff, h);
    return h;
}

Vec apply_product_operator(const ChainLayout& layout, const std::vector<const Mat*>& factors,
                           const Vec& x) {
    if (static_cast<int>(factors.size()) != layout.num_sites())
        throw ShapeMismatch("factor count does not match layout");
    Vec cur = x;
    Vec next(layout.total_dim);
    for (int s = 0; s < layout.num_sites(); ++s) {
        if (!factors[s]) continue;
        OperatorTerm tmp;  // not via make_term: factors may be non-Hermitian unitaries
        tmp.support = {s};
        tmp.matrix = *factors[s];
        tmp.label = "factor";
        EmbeddedTerm emb = build_embedded(layout, tmp);
        next.setZero();
        apply_term_serial(emb, 1.0, cur.data(), next.data());
        cur.swap(next);
    }
    return cur;
}

}  // namespace spchain::chain
