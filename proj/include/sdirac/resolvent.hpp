#pragma once

#include <functional>

#include "sdirac/angular.hpp"
#include "sdirac/params.hpp"
#include "sdirac/types.hpp"

namespace sdirac {

// Query for a sector kernel g^{sector}_l(r'', r'; zeta). The kernels use
// the u = rR convention (dr measure): poles have residue -u_n(r'') u_n(r')
// with int u^2 dr = 1; dividing by r'' r' gives the r^2-measure kernel that
// enters partial-wave sums.
struct ResolventQuery {
    Complex zeta{0.0, 0.0};
    double r_out = 1.0;
    double r_in = 0.5;
    Channel ch;
    int sector = +1;

    double r_gt() const { return r_out > r_in ? r_out : r_in; }
    double r_lt() const { return r_out > r_in ? r_in : r_out; }
};

// Parameters entering a closed-form kernel evaluation, reported by the CLI.
struct KernelParams {
    Complex mu{0.0, 0.0};        // mu(zeta)
    Complex mu_pm_sq{0.0, 0.0};  // mu^2(zeta) +- 2 m hbar w (kappa + 1/2) (oscillator)
    Complex nu{0.0, 0.0};        // nu^{sector}(zeta)
    double rho = 0.0;            // l/2 + 1/4 (oscillator), l + 1/2 (linear)
    double Lambda = 0.0;         // 2l + 1/2 (linear)
    Complex Omega{0.0, 0.0};     // (2/m) sqrt(hbar^2 gamma^2 - mu^2) (linear)
};

/// mu(zeta) = sqrt(zeta/c^2 - m^2 c^2) on the physical sheet Im(mu) >= 0;
/// positive real root for real zeta above m^2 c^4.
Complex mu_of_zeta(Complex zeta, const PhysicalParams& p);

/// Free iterated-resolvent kernel
/// g(r'', r'; zeta) = exp{(i/hbar) mu(zeta) |x|} / (4 pi |x| (hbar c)^2),
/// identical in both sectors. Throws DomainError at coincident points.
Complex free_iterated_kernel(const Vec3& r_out, const Vec3& r_in, Complex zeta,
                             const PhysicalParams& p);

/// Full 4x4 free Dirac Green's function in the standard representation.
Matrix4c free_dirac_green(const Vec3& r_out, const Vec3& r_in, Complex z,
                          const PhysicalParams& p);

/// Free radial sector kernel (u convention): elementary Riccati-Bessel
/// product; both sectors coincide.
Complex free_radial_kernel(const ResolventQuery& q, const PhysicalParams& p);

/// Dirac-oscillator radial kernel (u convention)
///   g^s_l = Gamma(rho - nu^s + 1/2) / (2 m c^2 hbar w (r'' r')^{1/2} Gamma(1+2 rho))
///           * W_{nu,rho}(r_>^2 m w / hbar) M_{nu,rho}(r_<^2 m w / hbar),
/// rho = l/2 + 1/4, nu^s = (mu^2 + s 2 m hbar w (kappa+1/2)) / (4 m w hbar).
/// Throws PoleError within tol::kernel_pole_guard of a bound-state pole.
Complex oscillator_radial_kernel(const ResolventQuery& q, double omega, const PhysicalParams& p,
                                 KernelParams* kp = nullptr);

/// Linear-superpotential radial kernel (u convention, Coulomb-type)
///   g^s_l = Gamma(rho - nu^s + 1/2) / (m c^2 hbar Omega Gamma(1+2 rho))
///           * W_{nu,rho}(r_> m Omega / hbar) M_{nu,rho}(r_< m Omega / hbar),
/// rho = l + 1/2, Lambda = 2l + 1/2, Omega = (2/m) sqrt(hbar^2 gamma^2 - mu^2),
/// nu^s = s 2 hbar gamma kappa / (Omega m). Always the logarithmic Whittaker
/// case. Throws BranchCutError on the continuum cut.
Complex linear_radial_kernel(const ResolventQuery& q, double gamma, const PhysicalParams& p,
                             KernelParams* kp = nullptr);

// per-channel radial kernel callback (u convention), zeta fixed by the caller
using ChannelKernel = std::function<Complex(const Channel&, double r_out, double r_in)>;

struct PartialWaveSum {
    Matrix2c value{};
    double tail_estimate = 0.0;
    bool converged = true;
};

/// Truncated partial-wave sum of a 2x2 sector kernel,
///   K(x'', x') = sum_{j sigma m} g_ch(r'', r')/(r'' r') phi_ch(O'') phi_ch^dag(O'),
/// with the tail estimated from the last two j shells. The OpenMP path
/// accumulates per shell, so the result does not depend on thread count.
PartialWaveSum assemble_partial_waves(const ChannelKernel& kernel, const Vec3& r_out,
                                      const Vec3& r_in, int twice_j_max, double rel_tol,
                                      bool parallel);

/// 4x4 Dirac Green evaluator from the two sector kernels:
/// diagonal blocks (z +- M0) g^{+-}, off-diagonal blocks by applying the
/// first-order operator D(r'') (or D^dag) to the r''-dependence with a
/// 5-point radial stencil and the sigma flip of the angular factor.
struct Green4Evaluator {
    ChannelKernel g_plus;
    ChannelKernel g_minus;
    Complex z{0.0, 0.0};
    ModelSpec model;
    PhysicalParams params;
    double stencil_h = 1e-3;

    Matrix4c operator()(const Vec3& r_out, const Vec3& r_in, int twice_j_max) const;
};

Green4Evaluator dirac_green_blocks(ChannelKernel g_plus, ChannelKernel g_minus, Complex z,
                                   const ModelSpec& ms, const PhysicalParams& p);

} // namespace sdirac
