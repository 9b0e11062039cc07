#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdirac/angular.hpp"
#include "sdirac/params.hpp"
#include "sdirac/susy.hpp"

namespace sdirac {

// One discrete level of the Dirac spectrum. branch=+1 rows carry the
// H^+ ladder on the channel (eps = E+_{n,ch}), branch=-1 rows the H^-
// ladder, so E = branch * sqrt(2 m c^2 eps) throughout.
struct SpectralLine {
    ModelSpec model;
    Channel ch;
    int n = 0;
    int branch = +1;
    double eps = 0.0;
    double E = 0.0;
    bool zero_mode = false;
};

struct ContinuumBranch {
    double threshold = 0.0;
    std::function<double(double)> dispersion; // |k| -> E on the positive branch
};

/// Discrete SUSY eigenvalue E^{sector}_{n, ch} (eps0 included).
/// Throws NoDiscreteSpectrumError when the model has no discrete branch in
/// (ch, sector).
double susy_spectrum_discrete(const ModelSpec& ms, const Channel& ch, int sector, int n,
                              const PhysicalParams& p);

/// Dirac eigenvalue through the map E = branch * sqrt(2mc^2 eps); single
/// code path via susy_spectrum_discrete(sector = branch). Throws
/// UnpairedLevelError when branch=-1 of an unbroken zero mode is requested.
double dirac_spectrum_discrete(const ModelSpec& ms, const Channel& ch, int n, int branch,
                               const PhysicalParams& p);

/// True when (ch, n) labels a zero mode of the model (eps = eps0, sector +1).
bool is_zero_mode_level(const ModelSpec& ms, const Channel& ch, int n, const PhysicalParams& p);

/// Continuum threshold and dispersion. Throws NoContinuumError for the
/// purely discrete oscillator models.
ContinuumBranch continuum_branch(const ModelSpec& ms, const PhysicalParams& p);

SpectralLine make_line(const ModelSpec& ms, const Channel& ch, int n, int branch,
                       const PhysicalParams& p);

/// SUSY partner of a discrete line, matched by eps-equality (the canonical
/// index shift is tried first). Returns nullopt for unpaired zero modes.
std::optional<SpectralLine> susy_partner_index(const ModelSpec& ms, const SpectralLine& line,
                                               const PhysicalParams& p);

/// All discrete lines with j <= j_max (doubled), n <= n_max, both branches,
/// sorted by E then (j, sigma, n, branch). One row per (j, sigma); the
/// m_j degeneracy 2j+1 is implied. `parallel` enables the OpenMP path.
std::vector<SpectralLine> spectrum_table(const ModelSpec& ms, const PhysicalParams& p,
                                         int twice_j_max, int n_max, bool parallel);

} // namespace sdirac
