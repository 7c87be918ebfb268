// Timing comparison between the serial reference path and the OpenMP path
// for the two heavy kernels, with a bitwise equality check on the results.
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "hmw/oracle.hpp"
#include "hmw/spinor.hpp"

using namespace hmw;

namespace {

template <typename F> double best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        body();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   bitwise %s\n",
                name, serial, parallel, serial / parallel, equal ? "equal" : "DIFFER");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());

    { // eigenvalue verification sweep
        const ParticleParams p{1.0, 0.05, 1.5};
        const BackgroundParams bg{0.8, 1.2};
        std::vector<QuantumNumbers> qn_set;
        for (int n = 0; n <= 5; ++n)
            for (int l = -4; l <= 4; ++l)
                for (int s : {-1, +1}) qn_set.push_back({n, l, s, 0.0});
        const double delta = coupling_delta(p, bg);
        double beta_max = 0.0;
        for (const QuantumNumbers& qn : qn_set)
            beta_max = std::max(beta_max, analytic_beta(qn.n,
                                                        effective_angular_momentum(
                                                            qn.l, qn.s, bg.eta),
                                                        delta, bg.eta));
        const RadialGrid grid(6000, oracle_domain(36.0, delta, beta_max));
        std::vector<EigenReport> rs, rp;
        const double ts = best_of(2, [&] {
            rs = verify_spectrum(p, bg, qn_set, 1e-4, grid, Exec::serial);
        });
        const double tp = best_of(2, [&] {
            rp = verify_spectrum(p, bg, qn_set, 1e-4, grid, Exec::openmp);
        });
        bool equal = rs.size() == rp.size();
        for (std::size_t i = 0; equal && i < rs.size(); ++i)
            equal = rs[i].beta_numeric == rp[i].beta_numeric;
        report("eigenvalue verification", ts, tp, equal);
    }

    { // spinor assembly and diagnostics on a long grid
        const QuantumNumbers qn{1, 2, +1, 0.0};
        const ParticleParams p{1.0, 0.01, 1.0};
        const BackgroundParams bg{0.5, 1.0};
        const RadialGrid grid(400000, std::sqrt(36.0 / coupling_delta(p, bg)));
        SpinorTable as, ap;
        double resid_s = 0.0, resid_p = 0.0;
        GordonCurrents gs, gp;
        const double ts = best_of(2, [&] {
            as = build_spinor(qn, p, bg, grid, Exec::serial);
            resid_s = dirac_residual(as, p, bg, Exec::serial);
            gs = gordon_currents(as, p, bg, Exec::serial);
        });
        const double tp = best_of(2, [&] {
            ap = build_spinor(qn, p, bg, grid, Exec::openmp);
            resid_p = dirac_residual(ap, p, bg, Exec::openmp);
            gp = gordon_currents(ap, p, bg, Exec::openmp);
        });
        bool equal = resid_s == resid_p && as.prefactor == ap.prefactor;
        for (std::size_t i = 0; equal && i < gs.total.size(); ++i)
            for (int c = 0; c < 4; ++c)
                if (gs.total[i][static_cast<std::size_t>(c)] !=
                    gp.total[i][static_cast<std::size_t>(c)])
                    equal = false;
        report("spinor pipeline", ts, tp, equal);
    }
    return 0;
}
