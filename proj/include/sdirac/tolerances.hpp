#pragma once

// All series/quadrature tolerances and iteration caps live here so the
// numerical contracts of the library are auditable in one place.

namespace sdirac::tol {

// complex Gamma: absolute distance to a non-positive integer that counts
// as hitting a pole
inline constexpr double gamma_pole_guard = 1e-14;

// Kummer / Tricomi series
inline constexpr int    kummer_max_terms = 4000;
inline constexpr double kummer_rel_eps   = 1e-16;

// Whittaker W: |1+2rho - integer| below which the logarithmic-case limit
// (rho perturbed by +-w_log_delta, averaged) is taken
inline constexpr double w_log_guard = 1e-8;
inline constexpr double w_log_delta = 1e-6;
// switch to the asymptotic expansion of W for |x| above this
inline constexpr double w_asymptotic_cut = 35.0;
inline constexpr int    w_asymptotic_max_terms = 60;

// modified Bessel I of half-integer order: use the ascending series when
// |z| < bessel_series_cut * max(1, order), else elementary forms + upward
// recurrence
inline constexpr double bessel_series_cut = 1.5;
inline constexpr int    bessel_max_terms  = 500;

// adaptive Gauss-Kronrod integrator
inline constexpr int    gk_max_depth = 48;
inline constexpr double gk_default_rel_eps = 1e-10;

// promotor time integral: the [0,inf) contour is truncated where the
// integrand tail drops below this fraction of the running integral
inline constexpr double promotor_tail_eps = 1e-13;

// kernel evaluation refuses queries closer to a pole of Gamma(rho-nu+1/2)
// than this (in units of the pole spacing)
inline constexpr double kernel_pole_guard = 1e-8;

// minimum |r'' - r'| separation for kernel queries, in units of the model
// length scale
inline constexpr double kernel_min_separation = 1e-6;

// threshold branch: eps == eps0 decided at this relative tolerance
inline constexpr double zero_mode_rel = 1e-12;

// grid norms: RadialFunction construction must reproduce the norm
// convention to this tolerance
inline constexpr double norm_check = 1e-8;

} // namespace sdirac::tol
