#pragma once

#include "sdirac/types.hpp"

namespace sdirac {

/// Gamma(z) for complex z. Lanczos approximation on Re z > 1/2, reflection
/// formula elsewhere. Relative error <= 1e-12 for |z| <= 50.
/// Throws PoleError within tol::gamma_pole_guard of 0, -1, -2, ...
Complex gamma_complex(Complex z);

/// log Gamma(z) on the principal branch (Re z > 0 only; used internally
/// where ratios of large Gammas would overflow).
Complex log_gamma_right_half(Complex z);

/// Modified Bessel I_order(z) for half-integer order >= 1/2.
/// Elementary sinh/cosh forms with upward recurrence where that is stable,
/// ascending series otherwise. Relative error <= 1e-10 on |z| <= 100.
Complex bessel_i_half_order(HalfInt order, Complex z);

/// Exponentially scaled I_order(z) e^{-z}; stays finite for large Re z > 0
/// (the propagator kernels combine the exponent analytically).
Complex bessel_i_half_order_scaled(HalfInt order, Complex z);

/// Scaled I_nu(z) e^{-z} for real order nu >= 0 (the transformed radial
/// promotor needs integer orders 2l+1). Ascending series for moderate |z|,
/// large-|z| asymptotic expansion beyond.
Complex bessel_i_scaled(double nu, Complex z);

/// Regular modified spherical Bessel i_l(z) = sqrt(pi/2z) I_{l+1/2}(z).
Complex sph_bessel_i(int l, Complex z);

/// Decaying modified spherical Bessel k_l(z) = sqrt(pi/2z) K_{l+1/2}(z);
/// elementary closed form, Re z > 0.
Complex sph_bessel_k(int l, Complex z);

/// Kummer confluent hypergeometric M(a,b,x) by its Taylor series.
Complex kummer_m(Complex a, Complex b, Complex x);

/// Whittaker M_{nu,rho}(x) = e^{-x/2} x^{rho+1/2} M(rho-nu+1/2, 1+2rho, x).
/// Throws PoleError when 1+2rho is a non-positive integer, ConvergenceError
/// if the series fails its tolerance.
Complex whittaker_m(Complex nu, Complex rho, Complex x);

struct WhittakerInfo {
    bool logarithmic_case = false; // 1+2rho within tol::w_log_guard of an integer
    bool asymptotic_used = false;
    int terms = 0;
};

/// Whittaker W_{nu,rho}(x) = e^{-x/2} x^{rho+1/2} U(rho-nu+1/2, 1+2rho, x)
/// via the Tricomi function. The logarithmic case (integer 1+2rho) is taken
/// as the mean of rho +- tol::w_log_delta, which cancels the O(delta) term;
/// info->logarithmic_case flags the reduced accuracy. |x| > tol::w_asymptotic_cut
/// switches to the asymptotic expansion. Re x > 0 required.
Complex whittaker_w(Complex nu, Complex rho, Complex x, WhittakerInfo* info = nullptr);

/// Associated Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
/// Total on n >= 0, alpha > -1.
double assoc_laguerre(int n, double alpha, double x);

/// Orthonormal spherical harmonic Y_l^m(theta, phi) with Condon-Shortley
/// phase. Throws DomainError for |m| > l.
Complex spherical_harmonic(int l, int m, double theta, double phi);

/// Associated Legendre P_l^m(x) including the Condon-Shortley factor,
/// without normalisation. |m| <= l required.
double assoc_legendre(int l, int m, double x);

} // namespace sdirac
