// Benchmark of the OpenMP kernels against their serial reference paths:
// partial-wave assembly, the angular Gram quadrature, batch spectrum
// enumeration and the banded operator products.

#include <cstdio>

#include <omp.h>

#include "sdirac/angular.hpp"
#include "sdirac/lattice.hpp"
#include "sdirac/resolvent.hpp"
#include "sdirac/spectra.hpp"
#include "sdirac/susy.hpp"

using namespace sdirac;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.4f s %10.4f s %8.2fx\n", name, serial, parallel, serial / parallel);
}

} // namespace

int main() {
    const PhysicalParams p;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "openmp", "speedup");

    // partial-wave assembly of the free kernel
    {
        const Complex zeta{0.4, 0.3};
        ChannelKernel kern = [&](const Channel& ch, double ro, double ri) {
            ResolventQuery q{zeta, ro, ri, ch, +1};
            return free_radial_kernel(q, p);
        };
        const Vec3 a{0.4, 0.2, 1.1}, b{-0.3, 0.5, -0.9};
        PartialWaveSum keep;
        const double ts = time_best_of(3, [&] {
            keep = assemble_partial_waves(kern, a, b, 51, 1e-10, false);
        });
        const double tp = time_best_of(3, [&] {
            keep = assemble_partial_waves(kern, a, b, 51, 1e-10, true);
        });
        row("partial_wave_assembly", ts, tp);
    }

    // angular Gram matrix, j <= 9/2
    {
        const auto chans = enumerate_channels(9);
        std::vector<std::vector<Complex>> keep;
        const double ts = time_best_of(3, [&] { keep = spin_harmonic_gram(chans, 64, 128, false); });
        const double tp = time_best_of(3, [&] { keep = spin_harmonic_gram(chans, 64, 128, true); });
        row("spin_harmonic_gram", ts, tp);
    }

    // batch spectrum enumeration
    {
        const ModelSpec ms = DiracOscillator{1.0};
        std::vector<SpectralLine> keep;
        const double ts = time_best_of(3, [&] { keep = spectrum_table(ms, p, 41, 200, false); });
        const double tp = time_best_of(3, [&] { keep = spectrum_table(ms, p, 41, 200, true); });
        row("spectrum_table", ts, tp);
    }

    // banded operator products on the channel lattice
    {
        const ModelSpec ms = DiracOscillator{1.0};
        const ChannelLattice lat = build_radial_lattice(ms, Channel(1, 1, +1), p, 14.0, 60000);
        const BandMatrix HD = lat.hd_matrix();
        BandMatrix keep;
        const double ts = time_best_of(3, [&] { keep = HD.multiply(HD, false); });
        const double tp = time_best_of(3, [&] { keep = HD.multiply(HD, true); });
        row("band_matrix_product", ts, tp);
    }
    return 0;
}
