#pragma once

#include <utility>

#include "sdirac/radial.hpp"
#include "sdirac/spectra.hpp"
#include "sdirac/susy.hpp"

namespace sdirac {

/// Default grid for a model: [0, 20 * length scale] for the oscillator and
/// free models, a Coulomb-sized extent for the linear model, 4000 points.
RadialGrid default_grid(const ModelSpec& ms, const PhysicalParams& p, int n_points = 4000);

/// Normalised sigma=+1 zero-mode profile r^l exp(-U(r)). Throws
/// ClassificationError when SUSY is broken or the channel sector is wrong,
/// GridError when the profile is not normalizable on the grid.
RadialFunction susy_zero_mode(const ModelSpec& ms, const Channel& ch, const PhysicalParams& p,
                              const RadialGrid& g);

/// First-order SUSY operator on a radial amplitude:
///   dagger=true  : D^dag f = -i hbar c [f' - (kappa-1) f / r + U' f]
///   dagger=false : D      f = -i hbar c [f' - (kappa-1) f / r - U' f]
/// with kappa that of the input channel; the output channel has sigma
/// flipped (j, m_j kept). Derivatives are 4th-order central stencils.
/// Throws GridError when |f| at r_max exceeds 1e-8 of its maximum.
std::pair<RadialFunction, Channel> apply_d_operator(const RadialFunction& f, const Channel& ch,
                                                    const ModelSpec& ms, const PhysicalParams& p,
                                                    bool dagger);

/// H^+-ladder basis function R_{n, ch} of the model (oscillator or Coulomb
/// radial function with the channel's effective charge).
RadialFunction hplus_basis(const ModelSpec& ms, const Channel& ch, int n, const PhysicalParams& p,
                           const RadialGrid& g);

/// H^--ladder basis function on the channel.
RadialFunction hminus_basis(const ModelSpec& ms, const Channel& ch, int n, const PhysicalParams& p,
                            const RadialGrid& g);

/// Build the 4-spinor Dirac eigenstate of a discrete line: the SUSY partner
/// of the analytic basis function is produced by apply_d_operator (so the
/// relative phase is automatic) and the pair is rotated by
/// assemble_dirac_state.
SpinorField build_4spinor(const SpectralLine& line, const ModelSpec& ms, const PhysicalParams& p,
                          const RadialGrid& g);

/// Radial action of H_D on a 4-spinor channel field (used by residual
/// oracles): upper' = M0 u + D l, lower' = D^dag u - M0 l.
SpinorField apply_dirac_radial(const SpinorField& field, const ModelSpec& ms,
                               const PhysicalParams& p);

} // namespace sdirac
