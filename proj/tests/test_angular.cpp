#include <doctest.h>

#include <cmath>
#include <random>

#include "sdirac/angular.hpp"
#include "sdirac/errors.hpp"

using namespace sdirac;

TEST_CASE("channel arithmetic stays exact") {
    const Channel a(1, 1, +1); // j=1/2, sigma=+1
    CHECK(a.l() == 0);
    CHECK(a.kappa() == 1);
    const Channel b(1, -1, -1);
    CHECK(b.l() == 1);
    CHECK(b.kappa() == -1);
    const Channel c(5, 3, +1); // j=5/2
    CHECK(c.l() == 2);
    CHECK(c.kappa() == 3);
    CHECK(c.flipped().l() == 3);

    CHECK_THROWS_AS(Channel(2, 0, +1), DomainError);  // j must be half-odd
    CHECK_THROWS_AS(Channel(1, 3, +1), DomainError);  // |m_j| <= j
    CHECK_THROWS_AS(Channel(1, 1, 2), DomainError);
}

TEST_CASE("spin_orbit_eigenvalue matches sigma (j + 1/2)") {
    CHECK(spin_orbit_eigenvalue(Channel(1, 1, +1)) == 1);
    CHECK(spin_orbit_eigenvalue(Channel(1, 1, -1)) == -1);
    CHECK(spin_orbit_eigenvalue(Channel(5, 1, +1)) == 3);
}

TEST_CASE("spin spherical harmonic: closed-form samples") {
    // (j=1/2, m=1/2, sigma=+1): (Y_0^0, 0) at any angle
    const Spinor2 s1 = spin_spherical_harmonic(Channel(1, 1, +1), 1.234, 2.345);
    CHECK(std::abs(s1.up.real() - 0.2820947918) < 1e-10);
    CHECK(std::abs(s1.up.imag()) < 1e-15);
    CHECK(std::abs(s1.down) < 1e-15);

    // (j=1/2, m=1/2, sigma=-1) at theta = 0: ( sqrt(1/3) Y_1^0(0), 0 ) = (1/sqrt(4pi), 0)
    const Spinor2 s2 = spin_spherical_harmonic(Channel(1, 1, -1), 0.0, 0.3);
    CHECK(std::abs(s2.up.real() - 0.2820947918) < 1e-10);
    CHECK(std::abs(s2.down) < 1e-14);
}

TEST_CASE("spin spherical harmonics: orthonormality via quadrature") {
    const auto chans = enumerate_channels(7); // j <= 7/2
    const auto gram = spin_harmonic_gram(chans, 64, 128, false);
    for (std::size_t i = 0; i < chans.size(); ++i)
        for (std::size_t k = 0; k < chans.size(); ++k) {
            const double expect = (i == k) ? 1.0 : 0.0;
            CHECK(std::abs(gram[i][k] - expect) < 1e-10);
        }
}

TEST_CASE("sigma.e_r: diagonal at theta=0, flip relation, involution") {
    const Spinor2 probe{Complex{0.8, -0.1}, Complex{0.2, 0.4}};
    const Spinor2 at0 = apply_sigma_er(probe, 0.0, 0.0);
    CHECK(std::abs(at0.up - probe.up) < 1e-15);
    CHECK(std::abs(at0.down + probe.down) < 1e-15);

    std::mt19937 rng(2024u);
    std::uniform_real_distribution<double> uth(0.01, M_PI - 0.01), uph(0.0, 2.0 * M_PI);
    for (const Channel& ch : enumerate_channels(7)) {
        for (int k = 0; k < 20; ++k) {
            const double th = uth(rng), ph = uph(rng);
            const Spinor2 flipped = apply_sigma_er(spin_spherical_harmonic(ch, th, ph), th, ph);
            const Spinor2 expect = spin_spherical_harmonic(ch.flipped(), th, ph);
            CHECK(std::sqrt((flipped - expect).norm2()) < 1e-12);

            const Spinor2 twice = apply_sigma_er(flipped, th, ph);
            const Spinor2 orig = spin_spherical_harmonic(ch, th, ph);
            CHECK(std::sqrt((twice - orig).norm2()) < 1e-15);
        }
    }
}

TEST_CASE("K eigenrelation through the quantum-number formula") {
    for (const Channel& ch : enumerate_channels(7)) {
        const double jj = ch.j() * (ch.j() + 1.0);
        const double ll = static_cast<double>(ch.l()) * (ch.l() + 1);
        CHECK(jj - ll + 0.25 == doctest::Approx(ch.kappa()).epsilon(1e-15));
    }
}
