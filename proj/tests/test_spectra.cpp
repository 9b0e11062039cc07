#include <doctest.h>

#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/spectra.hpp"

using namespace sdirac;

TEST_CASE("oscillator SUSY spectrum: floor, pairing values") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};
    // E+_{0,j,+1} = eps0 = mc^2/2 for every j
    for (int tj : {1, 3, 5, 9})
        CHECK(susy_spectrum_discrete(ms, Channel(tj, 1, +1), +1, 0, p) ==
              doctest::Approx(0.5).epsilon(1e-15));
    // pairing value: E+(n=1, j=1/2, +1) = E-(n=0, j=3/2, -1) = 2.5
    CHECK(susy_spectrum_discrete(ms, Channel(1, 1, +1), +1, 1, p) ==
          doctest::Approx(2.5).epsilon(1e-15));
    CHECK(susy_spectrum_discrete(ms, Channel(3, 1, -1), -1, 0, p) ==
          doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("linear SUSY spectrum with the eps0 shift") {
    const PhysicalParams p;
    const ModelSpec ms = LinearSuperpotential{1.0};
    // sigma=+1, l=0, n=1: 1/2 + 1/2 (1 - 1/4) = 0.875
    CHECK(susy_spectrum_discrete(ms, Channel(1, 1, +1), +1, 1, p) ==
          doctest::Approx(0.875).epsilon(1e-15));
    // repulsive sector has no discrete branch
    CHECK_THROWS_AS(susy_spectrum_discrete(ms, Channel(1, 1, +1), -1, 0, p),
                    NoDiscreteSpectrumError);
    CHECK_THROWS_AS(susy_spectrum_discrete(ms, Channel(1, 1, -1), +1, 0, p),
                    NoDiscreteSpectrumError);
}

TEST_CASE("dirac spectrum: map consistency, zero mode, bound-below-threshold") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};
    // E+_{0,j,1} = mc^2, belongs only to the positive branch
    CHECK(dirac_spectrum_discrete(ms, Channel(1, 1, +1), 0, +1, p) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // the oscillator label (ch, 0) also carries a legitimate H^- line
    CHECK(dirac_spectrum_discrete(ms, Channel(1, 1, +1), 0, -1, p) ==
          doctest::Approx(-std::sqrt(7.0)).epsilon(1e-14));
    // on the linear model the request is the absent -M0 partner
    CHECK_THROWS_AS(
        dirac_spectrum_discrete(LinearSuperpotential{1.0}, Channel(1, 1, +1), 0, -1, p),
        UnpairedLevelError);
    // n=1: sqrt(5)
    CHECK(dirac_spectrum_discrete(ms, Channel(1, 1, +1), 1, +1, p) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    // single code path through the map
    const double eps = susy_spectrum_discrete(ms, Channel(3, 1, -1), -1, 2, p);
    CHECK(dirac_spectrum_discrete(ms, Channel(3, 1, -1), 2, -1, p) ==
          -dirac_energy_from_susy(eps, p, +1));

    const ModelSpec lin = LinearSuperpotential{1.0};
    const double Elin = dirac_spectrum_discrete(lin, Channel(1, 1, +1), 1, +1, p);
    CHECK(Elin == doctest::Approx(std::sqrt(7.0) / 2.0).epsilon(1e-12));
    CHECK(Elin < continuum_branch(lin, p).threshold);
}

TEST_CASE("continuum branches") {
    const PhysicalParams p;
    const ContinuumBranch free = continuum_branch(FreeDirac{}, p);
    CHECK(free.threshold == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(free.dispersion(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(free.dispersion(1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    const ContinuumBranch lin = continuum_branch(LinearSuperpotential{1.0}, p);
    CHECK(lin.threshold == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(continuum_branch(DiracOscillator{1.0}, p), NoContinuumError);
    CHECK_THROWS_AS(susy_spectrum_discrete(FreeDirac{}, Channel(1, 1, +1), +1, 0, p),
                    NoDiscreteSpectrumError);

    // monotone dispersion
    double prev = lin.threshold;
    for (double k = 0.2; k < 3.0; k += 0.2) {
        CHECK(lin.dispersion(k) > prev);
        prev = lin.dispersion(k);
    }
}

TEST_CASE("susy partner index: oscillator and linear pairings") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};

    // zero modes are unpaired
    CHECK(!susy_partner_index(ms, make_line(ms, Channel(1, 1, +1), 0, +1, p), p));
    CHECK(!susy_partner_index(ms, make_line(ms, Channel(7, 1, +1), 0, +1, p), p));

    // (n=1, j=1/2, sigma=+1) -> (n=0, j=3/2, sigma=-1) with eps 2.5
    const auto partner =
        susy_partner_index(ms, make_line(ms, Channel(1, 1, +1), 1, +1, p), p);
    REQUIRE(partner.has_value());
    CHECK(partner->ch.twice_j == 3);
    CHECK(partner->ch.sigma == -1);
    CHECK(partner->n == 0);
    CHECK(partner->branch == -1);
    CHECK(partner->eps == doctest::Approx(2.5).epsilon(1e-12));

    const ModelSpec lin = LinearSuperpotential{1.0};
    const auto lp = susy_partner_index(lin, make_line(lin, Channel(1, 1, +1), 1, +1, p), p);
    REQUIRE(lp.has_value());
    CHECK(lp->ch.twice_j == 1);      // same j
    CHECK(lp->ch.sigma == -1);       // l' = 1
    CHECK(lp->ch.l() == 1);
    CHECK(lp->n == 0);
    CHECK(lp->eps == doctest::Approx(0.875).epsilon(1e-12));
}

TEST_CASE("spectral symmetry of paired levels") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};
    for (int tj : {1, 3, 5})
        for (int sg : {+1, -1})
            for (int n = 0; n <= 4; ++n) {
                const SpectralLine line = make_line(ms, Channel(tj, 1, sg), n, +1, p);
                if (line.zero_mode) continue;
                const auto partner = susy_partner_index(ms, line, p);
                REQUIRE(partner.has_value());
                CHECK(partner->E == doctest::Approx(-line.E).epsilon(1e-14));
            }
}

TEST_CASE("1D oscillator ladder and non-relativistic limit trend") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator1D{1.0};
    const Channel dummy(1, 1, +1);
    CHECK(susy_spectrum_discrete(ms, dummy, +1, 0, p) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(susy_spectrum_discrete(ms, dummy, +1, 3, p) == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(susy_spectrum_discrete(ms, dummy, -1, 0, p) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(dirac_spectrum_discrete(ms, dummy, 0, +1, p) == doctest::Approx(1.0).epsilon(1e-15));
    // E_n = mc^2 sqrt(1 + 2 n hw / mc^2)
    CHECK(dirac_spectrum_discrete(ms, dummy, 2, +1, p) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("spectrum_table: ordering and zero-mode flags") {
    const PhysicalParams p;
    const auto table = spectrum_table(DiracOscillator{1.0}, p, 5, 3, false);
    REQUIRE(!table.empty());
    for (std::size_t i = 1; i < table.size(); ++i) CHECK(table[i].E >= table[i - 1].E);
    int zero_modes = 0;
    for (const auto& line : table)
        if (line.zero_mode) {
            ++zero_modes;
            CHECK(line.E == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(line.branch == +1);
        }
    CHECK(zero_modes == 3); // one per j = 1/2, 3/2, 5/2 at sigma = +1
}
