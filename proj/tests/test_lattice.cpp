#include <doctest.h>

#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/lattice.hpp"
#include "sdirac/oracles.hpp"
#include "sdirac/spectra.hpp"
#include "sdirac/susy.hpp"

using namespace sdirac;

TEST_CASE("band matrix: product and transpose against dense arithmetic") {
    BandMatrix a(6, 1, 1), b(6, 1, 1);
    for (int i = 0; i < 6; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(5, i + 1); ++j) {
            a.set(i, j, 0.3 * i - 0.7 * j + 1.0);
            b.set(i, j, 1.1 * i + 0.2 * j - 0.5);
        }
    const BandMatrix c = a.multiply(b);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double want = 0.0;
            for (int k = 0; k < 6; ++k) want += a.get(i, k) * b.get(k, j);
            CHECK(c.get(i, j) == doctest::Approx(want).epsilon(1e-14));
        }
    const BandMatrix at = a.transpose();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(at.get(i, j) == a.get(j, i));
}

TEST_CASE("tridiag eigensolver: particle in a box") {
    const int n = 400;
    const double L = 1.0, h = L / (n + 1);
    std::vector<double> diag(n, 2.0 / (h * h)), off(n - 1, -1.0 / (h * h));
    const auto sol = tridiag_eigs_lowest(diag, off, 3, true);
    REQUIRE(sol.eigenvalues.size() == 3);
    for (int k = 0; k < 3; ++k) {
        const double want = std::pow((k + 1) * M_PI / L, 2.0);
        CHECK(std::abs(sol.eigenvalues[k] - want) / want < 1e-4);
    }
    CHECK(sol.eigenvectors.size() == 3);
}

TEST_CASE("oscillator lattice: structural zero mode at +M0, paired rest") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};
    const Channel ch(1, 1, +1); // kappa = 1: hosts the zero mode
    const ChannelLattice lat = build_radial_lattice(ms, ch, p, 14.0, 1500);
    CHECK(lat.kind == Staggering::WideUpper);
    CHECK(lat.dim == 2 * 1500 - 1);

    const auto sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off, -4.0, 4.0, false);
    // +M0 = +1 present to near machine precision, -1 absent
    bool plus = false, minus = false;
    for (double e : sol.eigenvalues) {
        if (std::abs(e - 1.0) < 1e-10) plus = true;
        if (std::abs(e + 1.0) < 1e-3) minus = true;
    }
    CHECK(plus);
    CHECK(!minus);

    // paired levels: +-sqrt(1 + 4n) to discretization accuracy
    for (double e : sol.eigenvalues) {
        if (std::abs(e - 1.0) < 1e-10) continue;
        bool matched = false;
        for (int n = 1; n <= 8 && !matched; ++n)
            if (std::abs(std::abs(e) - std::sqrt(1.0 + 4.0 * n)) < 2e-3) matched = true;
        CHECK(matched);
    }
}

TEST_CASE("kappa < 0 oscillator channel: square blocks, no zero mode") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};
    const Channel ch(1, 1, -1);
    const ChannelLattice lat = build_radial_lattice(ms, ch, p, 14.0, 1500);
    CHECK(lat.kind == Staggering::Square);
    const auto sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off, -2.0, 2.0, false);
    for (double e : sol.eigenvalues) CHECK(std::abs(std::abs(e) - 1.0) > 1e-3);
}

TEST_CASE("free lattice: symmetric spectrum of grid momenta") {
    const PhysicalParams p;
    const ChannelLattice lat = build_radial_lattice(FreeDirac{}, Channel(1, 1, +1), p, 20.0, 800);
    CHECK(lat.kind == Staggering::Square);
    const auto sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off, -3.0, 3.0, false);
    // strictly symmetric: for each +E there is a -E
    for (double e : sol.eigenvalues) {
        bool has_mirror = false;
        for (double f : sol.eigenvalues)
            if (std::abs(e + f) < 1e-9) has_mirror = true;
        CHECK(has_mirror);
        CHECK(std::abs(e) > 1.0 - 1e-9); // gap at mc^2
    }
    // low-lying levels follow sqrt(m^2 c^4 + c^2 hbar^2 k_n^2), k_n ~ n pi / R
    int idx = 0;
    for (double e : sol.eigenvalues) {
        if (e <= 1.0) continue;
        ++idx;
        const double k = idx * M_PI / 20.0;
        CHECK(std::abs(e - std::sqrt(1.0 + k * k)) < 4e-3);
        if (idx >= 6) break;
    }
}

TEST_CASE("line lattice: broken free model has the mc^2 gap and no kernel") {
    PhysicalParams p;
    p.m0 = 0.0;
    const ChannelLattice lat = build_line_lattice(FreeDiracBrokenSusy{}, p, 20.0, 1200);
    CHECK(lat.kind == Staggering::Square);
    const auto inside = tridiag_eigs_range(lat.hd_diag, lat.hd_off, -0.95, 0.95, false);
    CHECK(inside.eigenvalues.empty());
}

TEST_CASE("1D oscillator line lattice: zero mode and the Witten ladder") {
    const PhysicalParams p;
    const ChannelLattice lat = build_line_lattice(DiracOscillator1D{1.0}, p, 13.0, 2000);
    CHECK(lat.kind == Staggering::WideUpper);
    const auto sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off, 0.0, 4.0, false);
    REQUIRE(!sol.eigenvalues.empty());
    CHECK(std::abs(sol.eigenvalues[0] - 1.0) < 1e-11); // exact +M0
    // E_n = sqrt(1 + 2n)
    for (int n = 1; n <= 4; ++n)
        CHECK(std::abs(sol.eigenvalues[n] - std::sqrt(1.0 + 2.0 * n)) < 2e-3);
}

TEST_CASE("susy_algebra_check: oscillator channel passes every identity") {
    const PhysicalParams p;
    const VerificationReport rep =
        susy_algebra_check(DiracOscillator{1.0}, Channel(1, 1, +1), 14.0, 1000, p, 5);
    for (const auto& c : rep.checks) {
        INFO(c.name, " measured=", c.measured, " tol=", c.tolerance);
        CHECK(c.pass);
    }
    CHECK(rep.runtime_seconds < 5.0);
}

TEST_CASE("susy_algebra_check: free and broken free") {
    PhysicalParams p;
    const VerificationReport rep =
        susy_algebra_check(FreeDirac{}, Channel(1, 1, +1), 20.0, 900, p, 5);
    for (const auto& c : rep.checks) {
        INFO(c.name, " measured=", c.measured, " tol=", c.tolerance);
        CHECK(c.pass);
    }

    PhysicalParams pb;
    pb.m0 = 0.0;
    const VerificationReport rb =
        susy_algebra_check(FreeDiracBrokenSusy{}, Channel(1, 1, +1), 20.0, 900, pb, 5);
    for (const auto& c : rb.checks) {
        INFO(c.name, " measured=", c.measured, " tol=", c.tolerance);
        CHECK(c.pass);
    }
}
