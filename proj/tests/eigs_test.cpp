#include <doctest.h>

#include "spchain/chain.hpp"
#include "spchain/eigs.hpp"
#include "spchain/errors.hpp"

using namespace spchain;

namespace {

chain::HamOperator edge_chain_operator(int n, double beta) {
    auto ec = chain::edge_coupled_chain(n, 1.0, beta);
    chain::HamOperator op;
    op.layout = ec.layout;
    for (const auto& t : ec.terms) op.parts.emplace_back(chain::build_embedded(ec.layout, t), 1.0);
    return op;
}

}  // namespace

TEST_CASE("block lanczos agrees with the dense eigensolver") {
    for (double beta : {-1.0 / 3.0, 0.0}) {
        CAPTURE(beta);
        auto op = edge_chain_operator(4, beta);  // dim 162, exactly twofold ground space
        Mat h = op.dense();
        auto dense = eigs::lowest_eigenpairs_dense(h, 6);

        eigs::MatVec apply = [&op](const cx* x, cx* y) { op.apply(x, y, false); };
        eigs::LanczosOptions opts;
        opts.nev = 6;
        auto iter = eigs::lowest_eigenpairs_lanczos(apply, op.dim(), opts);

        for (int k = 0; k < 6; ++k) CHECK(std::abs(dense.values(k) - iter.values(k)) < 1e-8);
        // ground projectors agree (the twofold space, basis-independent)
        Mat pd = dense.vectors.leftCols(2) * dense.vectors.leftCols(2).adjoint();
        Mat pi = iter.vectors.leftCols(2) * iter.vectors.leftCols(2).adjoint();
        CHECK((pd - pi).norm() < 1e-7);
    }
}

TEST_CASE("block lanczos resolves exact degeneracies with a warm start") {
    auto op = edge_chain_operator(4, -1.0 / 3.0);
    eigs::MatVec apply = [&op](const cx* x, cx* y) { op.apply(x, y, false); };
    eigs::LanczosOptions opts;
    opts.nev = 4;
    auto first = eigs::lowest_eigenpairs_lanczos(apply, op.dim(), opts);
    Mat warm = first.vectors;
    auto second = eigs::lowest_eigenpairs_lanczos(apply, op.dim(), opts, &warm);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(first.values(k) - second.values(k)) < 1e-9);
}

TEST_CASE("ground_space clustering") {
    // single spin-1 with a (S^z)^2 field: unique ground state, gap 1
    auto layout = chain::ChainLayout::make({chain::SpinSite::one()});
    chain::HamOperator op;
    op.layout = layout;
    op.parts.emplace_back(
        chain::build_embedded(layout, chain::uniform_field_term(layout, 0, chain::Vec3(0, 0, 1))),
        1.0);
    auto gs = chain::ground_space(op, chain::GroundSpaceOptions{});
    CHECK(gs.degeneracy == 1);
    CHECK(gs.gap == doctest::Approx(1.0).epsilon(1e-12));

    // edge-coupled chains: exact twofold degeneracy at both couplings
    for (double beta : {-1.0 / 3.0, 0.0}) {
        auto chain_op = edge_chain_operator(3, beta);  // dim 54
        auto g = chain::ground_space(chain_op, chain::GroundSpaceOptions{});
        CHECK(g.degeneracy == 2);
        CHECK(g.gap > 0.1);
    }

    // the two-site coupling: unique ground state |xi>, gap 2
    auto w = chain::two_qubit_coupling_matrix();
    auto gsw = chain::ground_space(w);
    CHECK(gsw.degeneracy == 1);
    CHECK(gsw.gap == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(gsw.frame.col(0).dot(chain::xi_state())) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(chain::ground_space(Mat::Zero(4, 4)), NoGap);
}

TEST_CASE("aklt pair term spectrum: spin-0 and spin-1 sectors are the ground cluster") {
    // independent oracle: decompose 3x3 into total-spin sectors via S_tot^2
    auto s = chain::spin_operators(1.0);
    Mat stot2 = Mat::Zero(9, 9);
    for (int k = 0; k < 3; ++k) {
        Mat sk = kron(s[k], Mat::Identity(3, 3)) + kron(Mat::Identity(3, 3), s[k]);
        stot2 += sk * sk;
    }
    Mat term = chain::haldane_coupling(1.0, -1.0 / 3.0);
    CHECK((term * stot2 - stot2 * term).norm() < 1e-12);

    auto es_term = eigs::lowest_eigenpairs_dense(term);
    // j = 0 and j = 1 both sit at -2/3; j = 2 at +4/3 (values from
    // S.S = (j(j+1) - 4)/2 and the beta = -1/3 combination)
    for (int k = 0; k < 4; ++k) CHECK(es_term.values(k) == doctest::Approx(-2.0 / 3).epsilon(1e-12));
    for (int k = 4; k < 9; ++k) CHECK(es_term.values(k) == doctest::Approx(4.0 / 3).epsilon(1e-12));
    // ground cluster states have S_tot^2 eigenvalue 0 or 2 (spin 0 or 1)
    for (int k = 0; k < 4; ++k) {
        Vec v = es_term.vectors.col(k);
        double j2 = std::real(v.dot(stot2 * v));
        CHECK((std::abs(j2) < 1e-10 || std::abs(j2 - 2.0) < 1e-10));
    }
}
