#pragma once

#include <functional>

#include "sdirac/angular.hpp"
#include "sdirac/params.hpp"
#include "sdirac/radial.hpp"

namespace sdirac {

// Convention note: the constant eps0 = M0^2 / (2 m c^2) is always included
// in H_SUSY and in every SUSY eigenvalue handled by this library (the
// Schroedinger reduction is H_SUSY = H_D^2 / 2mc^2, nothing subtracted), so
// the Dirac map E = branch * sqrt(2 m c^2 eps) holds verbatim.

/// eps0 = M0^2 / (2 m c^2), the SUSY floor energy.
double epsilon0(const PhysicalParams& p);

/// E = branch * sqrt(2 m c^2 eps). Throws DomainError for eps < 0.
double dirac_energy_from_susy(double eps, const PhysicalParams& p, int branch);

struct FwCoefficients {
    double c_plus;
    double c_minus;
};

/// Foldy-Wouthuysen mixing weights of the positive-energy state,
/// c+ = (1+sqrt(eps0/eps)) / sqrt(2+2 sqrt(eps0/eps)),
/// c- = sqrt(1-eps0/eps)  / sqrt(2+2 sqrt(eps0/eps)).
/// Requires eps > eps0 >= 0 strictly; the threshold case is assembled
/// directly by assemble_dirac_state.
FwCoefficients fw_mixing_coefficients(double eps, double eps0);

// Superpotential of a spherical model as callable U, U', U''.
struct RadialSuperpotentialTerms {
    std::function<double(double)> U;
    std::function<double(double)> dU;
    std::function<double(double)> d2U;
};

/// U(r) of the spherical models: 0 (free), m w r^2 / 2 hbar (oscillator),
/// gamma r (linear), or the sampled table. Throws DomainError for
/// non-spherical models.
RadialSuperpotentialTerms radial_superpotential(const ModelSpec& ms, const PhysicalParams& p);

/// Channel-reduced potential of H^{sector}_SUSY acting on the angular
/// channel ch:
///   V_s(r) = (hbar^2/2m)(U'^2 - s U'') - s kappa hbar^2 U'/(m r)
///            + l(l+1) hbar^2/(2 m r^2) + eps0,
/// with l and kappa those of ch. Spherical models only.
std::function<double(double)> effective_radial_potential(const ModelSpec& ms, const Channel& ch,
                                                         int sector, const PhysicalParams& p);

/// Square-integrability test of the candidate zero modes exp(-+U) by
/// quadrature with tail extrapolation. Throws ClassificationError when the
/// sampled range does not determine convergence.
SusyClassification classify_susy(const ModelSpec& ms, const PhysicalParams& p);

/// Rotate a SUSY partner pair into the Dirac eigenstate of the given branch:
/// (c+ psi+, c- psi-) for branch=+1, (-c- psi+, c+ psi-) for branch=-1.
/// At eps = eps0 (within tol::zero_mode_rel) the state is the bare zero mode
/// (psi+, 0) or (0, psi-). When a model is supplied, the partner relation
/// D^dag psi+ = sqrt((eps-eps0)/a) psi- is verified on the grid first.
SpinorField assemble_dirac_state(const SpinorBlock& psi_plus, const SpinorBlock& psi_minus,
                                 double eps, int branch, const PhysicalParams& p,
                                 const ModelSpec* verify_model = nullptr);

} // namespace sdirac
