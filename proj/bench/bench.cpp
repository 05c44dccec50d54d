// Times the OpenMP kernels against their serial reference implementations:
// batched validity grid scans, inverse-transform sampling, and multi-start
// fitting on the embedded Wheaton data.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ctp/distribution.hpp"
#include "ctp/estimation.hpp"
#include "ctp/grid_scan.hpp"
#include "ctp/wheaton.hpp"

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif

    {
        std::mt19937_64 eng(1);
        std::vector<ctp::DeltaCoefficients> deltas;
        for (int i = 0; i < 2000; ++i) {
            auto u = [&] { return -5.0 + 10.0 * std::ldexp(double(eng() >> 11), -53); };
            deltas.emplace_back(u(), u());
        }
        double t0 = now_ms();
        auto serial = ctp::mixing_pdf_grid_min_batch_serial(deltas, 1000001);
        double t1 = now_ms();
        auto parallel = ctp::mixing_pdf_grid_min_batch(deltas, 1000001);
        double t2 = now_ms();
        if (serial != parallel) {
            std::printf("grid scan mismatch!\n");
            return 1;
        }
        report("validity grid scan (2000x1e6)", t1 - t0, t2 - t1);
    }

    {
        const auto dist = ctp::CtpDistribution::checked(ctp::ParetoBase(1.0, 0.5),
                                                        ctp::DeltaCoefficients(0.05, -0.05));
        double t0 = now_ms();
        auto serial = dist.sample_serial(2000000, 42);
        double t1 = now_ms();
        auto parallel = dist.sample(2000000, 42);
        double t2 = now_ms();
        if (serial != parallel) {
            std::printf("sampling mismatch!\n");
            return 1;
        }
        report("inverse-transform draws (2e6)", t1 - t0, t2 - t1);
    }

    {
        const ctp::Sample sample(ctp::wheaton_river());
        ctp::FitConfig cfg;
        cfg.n_starts = 200;
        double serial_total = 0.0, parallel_total = 0.0;
        double best_serial = 0.0, best_parallel = 0.0;
        for (ctp::FamilyId f : ctp::modified_set()) {
            cfg.parallel = false;
            double t0 = now_ms();
            best_serial += ctp::fit(f, sample, cfg).loglik;
            double t1 = now_ms();
            cfg.parallel = true;
            best_parallel += ctp::fit(f, sample, cfg).loglik;
            double t2 = now_ms();
            serial_total += t1 - t0;
            parallel_total += t2 - t1;
        }
        if (best_serial != best_parallel) {
            std::printf("fit mismatch!\n");
            return 1;
        }
        report("multi-start fits (8x200)", serial_total, parallel_total);
    }
    return 0;
}
