#include <doctest.h>

#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/spectra.hpp"
#include "sdirac/wavefunctions.hpp"

using namespace sdirac;

namespace {
const PhysicalParams P;
const RadialGrid G(0.0, 13.0, 4000);
} // namespace

TEST_CASE("oscillator radial functions: norm, nodes, orthogonality") {
    const RadialFunction r00 = oscillator_radial(0, 0, P, 1.0, G);
    CHECK(r00.norm_r2() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r00.count_interior_zeros() == 0);

    const RadialFunction r10 = oscillator_radial(1, 0, P, 1.0, G);
    CHECK(r10.count_interior_zeros() == 1);
    CHECK(std::abs(inner_r2(r00, r10)) < 1e-8);

    const RadialFunction r32 = oscillator_radial(3, 2, P, 1.0, G);
    CHECK(r32.count_interior_zeros() == 3);
    CHECK(r32.norm_r2() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("oscillator radial: grid guards") {
    CHECK_THROWS_AS(oscillator_radial(0, 0, P, 1.0, RadialGrid(0.0, 4.0, 3000)), GridError);
    CHECK_THROWS_AS(oscillator_radial(9, 0, P, 1.0, RadialGrid(0.0, 13.0, 40)), GridError);
}

TEST_CASE("coulomb radial functions: zero-mode profile and FD overlap") {
    // n=0, l=0, e^2 = gamma with gamma=1: R ~ e^{-r}
    const RadialGrid g(0.0, 40.0, 6000);
    const RadialFunction c00 = coulomb_radial(0, 0, 1.0, P, g);
    CHECK(c00.count_interior_zeros() == 0);
    // profile proportional to e^{-r}
    const double r1 = 1.0, r2 = 2.5;
    const int i1 = static_cast<int>(r1 / g.h()), i2 = static_cast<int>(r2 / g.h());
    const double ratio = c00.values[i2].real() / c00.values[i1].real();
    CHECK(ratio == doctest::Approx(std::exp(-(g.r(i2) - g.r(i1)))).epsilon(1e-10));

    const RadialFunction c10 = coulomb_radial(1, 0, 1.0, P, g);
    CHECK(c10.count_interior_zeros() == 1);

    CHECK_THROWS_AS(coulomb_radial(4, 0, 1.0, P, RadialGrid(0.0, 12.0, 2000)), GridError);
}

TEST_CASE("susy zero mode: matches the oscillator ground state, linear form") {
    const ModelSpec osc = DiracOscillator{1.0};
    const RadialFunction zm = susy_zero_mode(osc, Channel(1, 1, +1), P, G);
    const RadialFunction r00 = oscillator_radial(0, 0, P, 1.0, G);
    double dev = 0.0;
    for (int i = 0; i < G.n_points; ++i)
        dev = std::max(dev, std::abs(zm.values[i] - r00.values[i]));
    CHECK(dev < 1e-10);

    const RadialGrid gl(0.0, 30.0, 5000);
    const ModelSpec lin = LinearSuperpotential{1.0};
    const RadialFunction lm = susy_zero_mode(lin, Channel(3, 1, +1), P, gl); // l = 1
    // r e^{-r}, normalized (ratio taken at the snapped grid radii)
    const int i1 = static_cast<int>(1.0 / gl.h()), i2 = static_cast<int>(2.0 / gl.h());
    const double want_ratio =
        (gl.r(i2) / gl.r(i1)) * std::exp(-(gl.r(i2) - gl.r(i1)));
    CHECK(lm.values[i2].real() / lm.values[i1].real() ==
          doctest::Approx(want_ratio).epsilon(1e-9));

    // wrong sector rejected
    CHECK_THROWS_AS(susy_zero_mode(osc, Channel(1, 1, -1), P, G), ClassificationError);
    CHECK_THROWS_AS(susy_zero_mode(FreeDirac{}, Channel(1, 1, +1), P, G), ClassificationError);
}

TEST_CASE("apply_d_operator: annihilation and ladder factors") {
    const ModelSpec ms = DiracOscillator{1.0};
    // D^dag annihilates the zero mode
    const RadialFunction zm = susy_zero_mode(ms, Channel(1, 1, +1), P, G);
    auto [dzm, ch_out] = apply_d_operator(zm, Channel(1, 1, +1), ms, P, true);
    CHECK(dzm.norm_r2() < 1e-8);
    CHECK(ch_out.sigma == -1);
    CHECK(ch_out.l() == 1);

    // Ddag Psi+_{1,1/2,+1} = i sqrt(2mc^2 hw 2) Psi-_{0,1/2,-1}
    const RadialFunction psi1 = oscillator_radial(1, 0, P, 1.0, G);
    auto [dpsi, och] = apply_d_operator(psi1, Channel(1, 1, +1), ms, P, true);
    const RadialFunction target = oscillator_radial(0, 1, P, 1.0, G);
    const Complex factor = I * std::sqrt(2.0 * 1.0 * 1.0 * 1.0 * 2.0);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < G.n_points; ++i) {
        const double r = G.r(i);
        num += std::norm(dpsi.values[i] - factor * target.values[i]) * r * r;
        den += std::norm(factor * target.values[i]) * r * r;
    }
    CHECK(std::sqrt(num / den) < 1e-6);

    // D Psi-_{0,1/2,-1} = -i sqrt(2mc^2 hw 2) Psi+_{1,1/2,+1}
    auto [dm, och2] = apply_d_operator(target, Channel(1, 1, -1), ms, P, false);
    num = den = 0.0;
    for (int i = 0; i < G.n_points; ++i) {
        const double r = G.r(i);
        num += std::norm(dm.values[i] - (-factor) * psi1.values[i]) * r * r;
        den += std::norm(factor * psi1.values[i]) * r * r;
    }
    CHECK(std::sqrt(num / den) < 1e-6);

    // boundary-support guard
    std::vector<Complex> flat(G.n_points, Complex{1.0, 0.0});
    CHECK_THROWS_AS(apply_d_operator(RadialFunction(G, flat), Channel(1, 1, +1), ms, P, true),
                    GridError);
}

TEST_CASE("DdagD and DDdag reconstruct the SUSY Hamiltonians") {
    // applying D then Ddag on a basis function reproduces
    // 2mc^2 (H^-+_SUSY - eps0) f pointwise away from the boundaries
    const ModelSpec ms = DiracOscillator{1.0};
    const Channel ch(1, 1, +1);
    const RadialFunction f = oscillator_radial(2, 0, P, 1.0, G);
    auto [df, ch1] = apply_d_operator(f, ch, ms, P, true);
    auto [ddf, ch2] = apply_d_operator(df, ch1, ms, P, false);
    // f is an eigenfunction: D Ddag f = 2mc^2 (eps - eps0) f
    const double eps = susy_spectrum_discrete(ms, ch, +1, 2, P);
    const double want = 2.0 * (eps - epsilon0(P));
    double dev = 0.0;
    for (int i = 40; i < G.n_points - 40; ++i) {
        const double r = G.r(i);
        if (std::abs(f.values[i]) < 1e-3) continue;
        dev = std::max(dev, std::abs(ddf.values[i] - want * f.values[i]) * r);
    }
    CHECK(dev < 1e-5 * want);
}

TEST_CASE("build_4spinor: residual of the discretized Dirac operator") {
    const PhysicalParams p;
    const ModelSpec ms = DiracOscillator{1.0};
    const SpectralLine line = make_line(ms, Channel(1, 1, +1), 1, +1, p);
    const SpinorField psi = build_4spinor(line, ms, p, G);
    const SpinorField hpsi = apply_dirac_radial(psi, ms, p);
    // (H_D - sqrt(5)) Psi small in the grid norm
    double num = 0.0, den = 0.0;
    for (int i = 20; i < G.n_points - 20; ++i) {
        const double r = G.r(i);
        num += std::norm(hpsi.upper.radial.values[i] - line.E * psi.upper.radial.values[i]) * r * r;
        num += std::norm(hpsi.lower.radial.values[i] - line.E * psi.lower.radial.values[i]) * r * r;
        den += std::norm(psi.upper.radial.values[i]) * r * r;
        den += std::norm(psi.lower.radial.values[i]) * r * r;
    }
    CHECK(std::sqrt(num / den) / std::abs(line.E) < 1e-6);

    // zero-mode line gives an upper-block-only spinor
    const SpectralLine zline = make_line(ms, Channel(3, 1, +1), 0, +1, p);
    const SpinorField zpsi = build_4spinor(zline, ms, p, G);
    CHECK(zpsi.lower.radial.norm_r2() == 0.0);
    CHECK(zpsi.upper.radial.norm_r2() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("derivative4 converges at 4th order") {
    auto probe = [](int n) {
        const double h = 2.0 / (n - 1);
        std::vector<Complex> f(n);
        for (int i = 0; i < n; ++i) {
            const double x = -1.0 + i * h;
            f[i] = std::exp(Complex{0.0, 3.0} * x) * std::cos(2.0 * x);
        }
        const auto d = derivative4(f, h);
        double dev = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = -1.0 + i * h;
            const Complex want = Complex{0.0, 3.0} * std::exp(Complex{0.0, 3.0} * x) *
                                     std::cos(2.0 * x) -
                                 2.0 * std::exp(Complex{0.0, 3.0} * x) * std::sin(2.0 * x);
            dev = std::max(dev, std::abs(d[i] - want));
        }
        return dev;
    };
    const double e1 = probe(201), e2 = probe(401);
    CHECK(e1 / e2 > 12.0); // ~16 for a clean 4th-order stencil
}
