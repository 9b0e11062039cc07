#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdirac/lattice.hpp"
#include "sdirac/radial.hpp"
#include "sdirac/resolvent.hpp"
#include "sdirac/spectra.hpp"

namespace sdirac {

struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string name;
    std::string inputs;
    std::vector<Check> checks;
    double runtime_seconds = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    Check& add(const std::string& check_name, double measured, double tolerance) {
        checks.push_back({check_name, measured, tolerance, measured <= tolerance});
        return checks.back();
    }
};

struct FdEigenResult {
    std::vector<double> eigenvalues;
    std::vector<RadialFunction> functions; // R = u/r, normalised int |R|^2 r^2 dr = 1
};

/// Lowest `count` eigenpairs of -(hbar^2/2m) u'' + [V(r) + l(l+1) hbar^2/(2m r^2)] u,
/// u = r R, Dirichlet at both ends of g, by symmetric tridiagonal
/// diagonalization. With convergence_tol > 0 the grid is doubled once and a
/// GridError is thrown if any eigenvalue moves by more than 10x the
/// tolerance.
FdEigenResult fd_radial_eigensolver(const std::function<double(double)>& V, int l,
                                    const RadialGrid& g, int count, const PhysicalParams& p,
                                    double convergence_tol = 0.0);

/// Lowest eigenvalues of p^2/2m + (hbar^2/2m)(U'^2 -+ U'') + eps0 for the
/// 1D models (Witten1D, DiracOscillator1D, FreeDiracBrokenSusy) on
/// [-x_max, x_max].
std::vector<double> fd_witten1d_eigensolver(const ModelSpec& ms, int sector, double x_max,
                                            int n_points, int count, const PhysicalParams& p);

/// Closed-form radial promotor. Oscillator: Peak-Inomata kernel
///   P^s_{z,l}(r'',r';t) = m w sqrt(r''r')/(i hbar sin wt)
///     exp{ i m w (r''^2+r'^2) cot(wt)/(2 hbar) + i t mu_s^2 / (2 hbar m) }
///     I_{l+1/2}( m w r' r'' / (i hbar sin wt) ).
/// Linear model: the s = sqrt(r) transformed kernel with Omega, Lambda and
/// the 2 nu q phase; `time` is then the transformed time parameter.
/// Complex (Wick-rotated) times are accepted.
Complex promotor_closed_form(double r_out, double r_in, Complex time, Complex zeta,
                             const Channel& ch, int sector, const ModelSpec& ms,
                             const PhysicalParams& p);

/// Wick-rotated time integral of the promotor: equals the closed-form
/// sector kernel on the physical sheet (this is the quadrature oracle the
/// kernels are verified against).
Complex promotor_time_integral(double r_out, double r_in, Complex zeta, const Channel& ch,
                               int sector, const ModelSpec& ms, const PhysicalParams& p,
                               double rel_eps = 1e-9);

/// Euclidean Strang-split propagation of the channel Hamiltonian (DST-I
/// spectral kinetic step) versus the Wick-rotated closed-form promotor.
VerificationReport trotter_propagator_check(const Channel& ch, int sector, const ModelSpec& ms,
                                            const PhysicalParams& p, double tau,
                                            const RadialGrid& g, int steps = 1024);

struct PoleScan {
    std::vector<double> zetas;
    std::vector<int> n_index;
    bool window_truncated = false; // a further pole lies beyond the window
    int first_excluded_n = -1;
};

/// Bound-state poles of the sector kernel inside a real zeta window, found
/// by bracketing nu^s(zeta) = n + rho + 1/2 on the analytic nu map
/// (oscillator and linear models).
PoleScan pole_scan(const ModelSpec& ms, const Channel& ch, int sector, double zeta_lo,
                   double zeta_hi, const PhysicalParams& p);

/// Generic fallback: peak detection of |g(zeta + i eta)| on a sample grid
/// with quadratic refinement.
PoleScan pole_scan_generic(const std::function<Complex(Complex)>& g_of_zeta, double zeta_lo,
                           double zeta_hi, int samples, double eta);

struct BranchCutSample {
    double lambda = 0.0;
    double zeta = 0.0;
    double E_plus = 0.0, E_minus = 0.0;
    Complex g_above{0.0, 0.0}, g_below{0.0, 0.0}; // kernel at zeta +- i eta
};

/// Parameterises the linear-model continuum cut hbar^2 gamma^2 - mu^2 = -lambda^2:
/// zeta = m^2 c^4 + hbar^2 c^2 gamma^2 + c^2 lambda^2, E = +-sqrt(zeta), and
/// samples the kernel on both sides of the cut.
std::vector<BranchCutSample> branch_cut_scan(double gamma, const Channel& ch,
                                             const PhysicalParams& p,
                                             const std::vector<double>& lambdas,
                                             double eta = 1e-6);

/// Contour residue (1/2 pi i) oint g dzeta on a circle; trapezoid in the
/// angle, spectrally accurate for analytic integrands.
Complex kernel_residue(const std::function<Complex(Complex)>& g_of_zeta, Complex center,
                       double radius, int n_points = 32);

/// Discretized SUSY algebra on the channel lattice: structural identities
/// Q^2 = 0, {W,Q} = 0, W^2 = 1; {Q,Qdag} + M0^2 = H_D^2 in norm; block
/// diagonality of H_D^2; eigenvalues of H_D against +-sqrt(2mc^2 eps) of the
/// FD eigensolver (both Richardson-extrapolated over n and 2n cells); FW
/// rotation per eigenpair.
VerificationReport susy_algebra_check(const ModelSpec& ms, const Channel& ch, double extent,
                                      int n_cells, const PhysicalParams& p,
                                      int compare_levels = 6);

} // namespace sdirac
