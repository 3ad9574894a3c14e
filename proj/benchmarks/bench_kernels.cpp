// Compares the serial reference kernels with the OpenMP variants on
// edge-coupled chains of growing size.

#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "spchain/chain.hpp"

using namespace spchain;

namespace {

Vec random_state(std::ptrdiff_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    Vec v(dim);
    for (std::ptrdiff_t i = 0; i < dim; ++i) v(i) = cx(dist(rng), dist(rng));
    v /= v.norm();
    return v;
}

double time_apply(const chain::HamOperator& op, const Vec& x, bool parallel, int reps) {
    Vec y(x.size());
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = omp_get_wtime();
        op.apply(x.data(), y.data(), parallel);
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%4s %8s %12s %12s %8s %10s\n", "N", "dim", "serial (s)", "openmp (s)", "speedup",
                "max |diff|");
    std::mt19937_64 rng(7);
    for (int n = 3; n <= 8; ++n) {
        auto ec = chain::edge_coupled_chain(n, 1.0, -1.0 / 3.0);
        chain::HamOperator op;
        op.layout = ec.layout;
        for (const auto& t : ec.terms) op.parts.emplace_back(chain::build_embedded(ec.layout, t), 1.0);
        Vec x = random_state(ec.layout.total_dim, rng);

        Vec ys(x.size()), yp(x.size());
        op.apply(x.data(), ys.data(), false);
        op.apply(x.data(), yp.data(), true);
        double diff = (ys - yp).cwiseAbs().maxCoeff();

        int reps = ec.layout.total_dim > 4000 ? 5 : 20;
        double ts = time_apply(op, x, false, reps);
        double tp = time_apply(op, x, true, reps);
        std::printf("%4d %8td %12.3e %12.3e %8.2f %10.2e\n", n, ec.layout.total_dim, ts, tp,
                    ts / tp, diff);
    }

    std::printf("\ndense assembly (serial loop, OpenMP scatter):\n");
    std::printf("%4s %8s %12s\n", "N", "dim", "assemble (s)");
    for (int n = 3; n <= 5; ++n) {
        auto sched = chain::transistor_schedule(n, -1.0 / 3.0, chain::Vec3(0, 0, 1));
        double t0 = omp_get_wtime();
        Mat h = sched.at(0.5).dense();
        double dt = omp_get_wtime() - t0;
        std::printf("%4d %8td %12.3e\n", n, sched.layout.total_dim, dt);
        (void)h;
    }
    return 0;
}
