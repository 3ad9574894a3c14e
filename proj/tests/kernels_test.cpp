#include <doctest.h>

#include <random>

#include "spchain/apply.hpp"
#include "spchain/chain.hpp"
#include "spchain/errors.hpp"

using namespace spchain;
using namespace spchain::chain;

namespace {

Vec random_state(std::ptrdiff_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    Vec v(dim);
    for (std::ptrdiff_t i = 0; i < dim; ++i) v(i) = cx(dist(rng), dist(rng));
    return v;
}

Mat random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = cx(dist(rng), dist(rng));
    return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST_CASE("term application: serial, parallel and dense agree") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 6; ++trial) {
        // random mixed layout of 3-5 sites
        std::uniform_int_distribution<int> nsites(3, 5), coin(0, 1);
        std::vector<SpinSite> sites;
        int n = nsites(rng);
        for (int i = 0; i < n; ++i)
            sites.push_back(coin(rng) ? SpinSite::one() : SpinSite::half());
        auto layout = ChainLayout::make(sites);

        HamOperator op;
        op.layout = layout;
        // a couple of one-site and two-site terms on random (also non-adjacent) supports
        std::uniform_int_distribution<int> site(0, n - 1);
        for (int t = 0; t < 3; ++t) {
            int a = site(rng);
            op.parts.emplace_back(
                build_embedded(layout, make_term(layout, {a}, random_hermitian(layout.sites[a].dim, rng),
                                                 "one")),
                0.7 + 0.1 * t);
            int b = site(rng);
            while (b == a) b = site(rng);
            int dim2 = layout.sites[a].dim * layout.sites[b].dim;
            op.parts.emplace_back(
                build_embedded(layout, make_term(layout, {a, b}, random_hermitian(dim2, rng), "two")),
                -0.3 - 0.1 * t);
        }

        Vec x = random_state(layout.total_dim, rng);
        Vec ys(layout.total_dim), yp(layout.total_dim);
        op.apply(x.data(), ys.data(), false);
        op.apply(x.data(), yp.data(), true);
        Vec yd = op.dense() * x;
        CHECK((ys - yp).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((ys - yd).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, yd.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("embedded kron-order convention matches dense kron") {
    // term on sites (0, 2) of a 3-site chain: matrix indexed with site 0 most
    // significant, so the dense embedding is kron over (site0, site1=id, site2)
    auto layout = ChainLayout::make({SpinSite::half(), SpinSite::one(), SpinSite::half()});
    std::mt19937_64 rng(7);
    Mat m = random_hermitian(4, rng);
    HamOperator op;
    op.layout = layout;
    op.parts.emplace_back(build_embedded(layout, make_term(layout, {0, 2}, m, "pair")), 1.0);
    Mat dense = op.dense();

    // manual embedding: reorder m as acting on (s0, s2) with s1 in between
    Mat expected = Mat::Zero(12, 12);
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b0 = 0; b0 < 2; ++b0)
                for (int b2 = 0; b2 < 2; ++b2)
                    for (int mid = 0; mid < 3; ++mid)
                        expected(a0 * 6 + mid * 2 + a2, b0 * 6 + mid * 2 + b2) =
                            m(a0 * 2 + a2, b0 * 2 + b2);
    CHECK((dense - expected).norm() < 1e-14);
}

TEST_CASE("product operator application matches dense kron") {
    auto layout = ChainLayout::make({SpinSite::one(), SpinSite::half()});
    Mat rz = spin_rotation(1.0, Vec3(0, 0, 1), std::acos(-1.0));
    Mat rh = spin_rotation(0.5, Vec3(0, 0, 1), std::acos(-1.0) / 2);
    std::mt19937_64 rng(3);
    Vec x = random_state(6, rng);
    std::vector<const Mat*> factors{&rz, &rh};
    Vec got = apply_product_operator(layout, factors, x);
    Vec expect = kron(rz, rh) * x;
    CHECK((got - expect).norm() < 1e-13);
}

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(ChainLayout::make({}), spchain::ShapeMismatch);
    auto layout = ChainLayout::make({SpinSite::one(), SpinSite::one()});
    CHECK(layout.total_dim == 9);
    CHECK(layout.strides[0] == 3);
    CHECK(layout.strides[1] == 1);
    Mat bad = Mat::Zero(3, 3);
    bad(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS_AS(make_term(layout, {0}, bad, "bad"), spchain::ShapeMismatch);
    CHECK_THROWS_AS(make_term(layout, {0, 0}, Mat::Zero(9, 9), "dup"), spchain::ShapeMismatch);
    CHECK_THROWS_AS(make_term(layout, {5}, Mat::Zero(3, 3), "oob"), spchain::ShapeMismatch);
}
