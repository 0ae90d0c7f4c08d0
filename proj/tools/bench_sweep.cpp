// Times the OpenMP grid sweeps against their serial references and checks
// that both produce bit-identical results.

#include <cstdio>
#include <omp.h>

#include "sincdens/sinc_smoother.hpp"

using namespace sincdens;

namespace {

void bench(const char* label, const MixtureDensity& density, double R) {
    SmootherConfig cfg = SmootherConfig::for_density(density, R);

    const double t0 = omp_get_wtime();
    const double serial = sup_error_empirical_serial(density, cfg);
    const double t1 = omp_get_wtime();
    const double parallel = sup_error_empirical(density, cfg);
    const double t2 = omp_get_wtime();

    const bool identical = serial == parallel;
    std::printf("%-22s R=%-5.1f serial %8.3fs  openmp %8.3fs  speedup %5.2fx  %s\n", label, R,
                t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
                identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const auto gauss =
        MixtureDensity::univariate(Family::gaussian, {0.5, 0.5}, {-1.0, 1.0}, 0.5);
    const auto laplace = MixtureDensity::univariate(Family::laplace, {1.0}, {0.0}, 1.0);

    bench("gaussian mixture", gauss, 4.0);
    bench("laplace (spectral)", laplace, 8.0);
    bench("laplace (spectral)", laplace, 16.0);
    return 0;
}
