#include "sdirac/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/tolerances.hpp"

namespace sdirac {

namespace {

double oscillator_eps(double hw, const Channel& ch, int sector, int n, double e0) {
    const double j = ch.j();
    if (sector > 0) return hw * (2.0 * n + j + 1.0 - ch.sigma * (j + 1.0)) + e0;
    return hw * (2.0 * (n + 1) + j + ch.sigma * j) + e0;
}

double linear_eps(double gamma, const PhysicalParams& p, const Channel& ch, int sector, int n,
                  double e0) {
    const double scale = p.hbar * p.hbar * gamma * gamma / (2.0 * p.m);
    const int l = ch.l();
    if (sector > 0 && ch.sigma > 0) {
        const double ratio = static_cast<double>(l + 1) / (n + l + 1);
        return e0 + scale * (1.0 - ratio * ratio);
    }
    if (sector < 0 && ch.sigma < 0) {
        const double ratio = static_cast<double>(l) / (n + 1 + l);
        return e0 + scale * (1.0 - ratio * ratio);
    }
    throw NoDiscreteSpectrumError(
        "linear superpotential: the spin-orbit coupling is repulsive in this sector; the "
        "spectrum is purely continuous there");
}

} // namespace

double susy_spectrum_discrete(const ModelSpec& ms, const Channel& ch, int sector, int n,
                              const PhysicalParams& p) {
    if (n < 0) throw DomainError("susy_spectrum_discrete: n >= 0");
    if (sector != 1 && sector != -1) throw DomainError("susy_spectrum_discrete: sector = +-1");
    const double e0 = epsilon0(p);

    if (const auto* osc = std::get_if<DiracOscillator>(&ms))
        return oscillator_eps(p.hbar * osc->omega, ch, sector, n, e0);
    if (const auto* lin = std::get_if<LinearSuperpotential>(&ms))
        return linear_eps(lin->gamma, p, ch, sector, n, e0);
    if (const auto* osc1 = std::get_if<DiracOscillator1D>(&ms)) {
        const double hw = p.hbar * osc1->omega;
        return sector > 0 ? e0 + n * hw : e0 + (n + 1) * hw;
    }
    if (std::holds_alternative<FreeDirac>(ms) || std::holds_alternative<FreeDiracBrokenSusy>(ms))
        throw NoDiscreteSpectrumError("free Dirac models have a purely continuous spectrum");
    throw NoDiscreteSpectrumError(model_name(ms) +
                                  ": no closed-form discrete spectrum (oracle-only model)");
}

bool is_zero_mode_level(const ModelSpec& ms, const Channel& ch, int n, const PhysicalParams& p) {
    try {
        const double eps = susy_spectrum_discrete(ms, ch, +1, n, p);
        const double e0 = epsilon0(p);
        return std::abs(eps - e0) <= tol::zero_mode_rel * std::max(1.0, std::abs(e0));
    } catch (const NoDiscreteSpectrumError&) {
        return false;
    }
}

double dirac_spectrum_discrete(const ModelSpec& ms, const Channel& ch, int n, int branch,
                               const PhysicalParams& p) {
    if (branch != 1 && branch != -1) throw DomainError("dirac_spectrum_discrete: branch = +-1");
    double eps;
    try {
        eps = susy_spectrum_discrete(ms, ch, branch, n, p);
    } catch (const NoDiscreteSpectrumError&) {
        // a sector with no H^- ladder at all: if (ch, n) labels the zero
        // mode, branch=-1 asks for its absent negative partner
        if (branch < 0 && is_zero_mode_level(ms, ch, n, p)) {
            const auto cls = classify_susy(ms, p);
            if (cls.unbroken() && cls.zero_mode_sector == +1)
                throw UnpairedLevelError(
                    "dirac_spectrum_discrete: the zero mode is unpaired; branch=-1 does not "
                    "exist");
        }
        throw;
    }
    // an eps0 hit on the negative branch would be the missing -M0 partner
    const double e0 = epsilon0(p);
    if (branch < 0 && std::abs(eps - e0) <= tol::zero_mode_rel * std::max(1.0, e0)) {
        const auto cls = classify_susy(ms, p);
        if (cls.unbroken() && cls.zero_mode_sector == +1)
            throw UnpairedLevelError(
                "dirac_spectrum_discrete: branch=-1 at eps = eps0 does not exist for an "
                "unbroken +1-sector zero mode");
    }
    return dirac_energy_from_susy(eps, p, branch);
}

ContinuumBranch continuum_branch(const ModelSpec& ms, const PhysicalParams& p) {
    const double c = p.c, hb = p.hbar;
    double thr2 = 0.0;
    if (std::holds_alternative<FreeDirac>(ms)) {
        thr2 = p.M0() * p.M0();
    } else if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) {
        // M0 = 0 here, but |D|^2 = c^2 p^2 + m^2 c^4 supplies the same gap
        const double mc2 = p.m * c * c;
        thr2 = mc2 * mc2;
    } else if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        const double M0 = p.M0();
        thr2 = M0 * M0 + hb * hb * c * c * lin->gamma * lin->gamma;
    } else if (std::holds_alternative<DiracOscillator>(ms) ||
               std::holds_alternative<DiracOscillator1D>(ms)) {
        throw NoContinuumError("the Dirac oscillator spectrum is purely discrete");
    } else {
        throw NoContinuumError(model_name(ms) + ": continuum branch not available in closed form");
    }
    ContinuumBranch out;
    out.threshold = std::sqrt(thr2);
    out.dispersion = [thr2, hb, c](double k) { return std::sqrt(thr2 + hb * hb * c * c * k * k); };
    return out;
}

SpectralLine make_line(const ModelSpec& ms, const Channel& ch, int n, int branch,
                       const PhysicalParams& p) {
    SpectralLine line;
    line.model = ms;
    line.ch = ch;
    line.n = n;
    line.branch = branch;
    line.eps = susy_spectrum_discrete(ms, ch, branch, n, p);
    line.zero_mode = is_zero_mode_level(ms, ch, n, p) && branch > 0;
    line.E = dirac_spectrum_discrete(ms, ch, n, branch, p);
    return line;
}

std::optional<SpectralLine> susy_partner_index(const ModelSpec& ms, const SpectralLine& line,
                                               const PhysicalParams& p) {
    if (line.zero_mode) return std::nullopt;
    if (line.branch > 0 && is_zero_mode_level(ms, line.ch, line.n, p)) return std::nullopt;

    const double eps = susy_spectrum_discrete(ms, line.ch, line.branch, line.n, p);
    const double tol_eps = 1e-10 * std::max(1.0, std::abs(eps));

    // candidate (n', ch') lists, canonical shift first
    std::vector<std::pair<int, Channel>> cands;
    const int tj = line.ch.twice_j, tmj = line.ch.twice_mj, sg = line.ch.sigma;
    auto add = [&](int nn, int ttj, int ssigma) {
        if (nn < 0 || ttj < 1) return;
        if (std::abs(tmj) > ttj) return;
        cands.emplace_back(nn, Channel(ttj, tmj, ssigma));
    };
    if (line.branch > 0) {
        if (std::holds_alternative<DiracOscillator>(ms)) add(line.n - 1, tj + 2, -sg);
        add(line.n - 1, tj, -sg); // linear-model canonical shift, same j
    } else {
        if (std::holds_alternative<DiracOscillator>(ms)) add(line.n + 1, tj - 2, -sg);
        add(line.n + 1, tj, -sg);
    }
    for (int dj = -2; dj <= 2; dj += 2)
        for (int dn = -3; dn <= 3; ++dn) add(line.n + dn, tj + dj, -sg);

    for (const auto& [nn, cch] : cands) {
        try {
            const double other = susy_spectrum_discrete(ms, cch, -line.branch, nn, p);
            if (std::abs(other - eps) <= tol_eps) {
                SpectralLine partner = make_line(ms, cch, nn, -line.branch, p);
                return partner;
            }
        } catch (const Error&) {
            continue;
        }
    }
    return std::nullopt;
}

std::vector<SpectralLine> spectrum_table(const ModelSpec& ms, const PhysicalParams& p,
                                         int twice_j_max, int n_max, bool parallel) {
    // one channel per (j, sigma); m_j fixed at its minimum, degeneracy implied
    std::vector<Channel> chans;
    if (is_one_dimensional(ms)) {
        chans.emplace_back(1, 1, +1); // placeholder channel, ignored by 1D formulas
    } else {
        for (int tj = 1; tj <= twice_j_max; tj += 2)
            for (int sg : {+1, -1}) chans.emplace_back(tj, 1, sg);
    }

    const int nch = static_cast<int>(chans.size());
    std::vector<std::vector<SpectralLine>> per_channel(nch);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int ic = 0; ic < nch; ++ic) {
        for (int n = 0; n <= n_max; ++n) {
            for (int branch : {+1, -1}) {
                try {
                    per_channel[ic].push_back(make_line(ms, chans[ic], n, branch, p));
                } catch (const Error&) {
                    // no level in this (sector, branch): skip the row
                }
            }
        }
    }

    std::vector<SpectralLine> out;
    for (auto& v : per_channel) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), [](const SpectralLine& a, const SpectralLine& b) {
        if (a.E != b.E) return a.E < b.E;
        if (a.ch.twice_j != b.ch.twice_j) return a.ch.twice_j < b.ch.twice_j;
        if (a.ch.sigma != b.ch.sigma) return a.ch.sigma > b.ch.sigma;
        if (a.n != b.n) return a.n < b.n;
        return a.branch > b.branch;
    });
    return out;
}

} // namespace sdirac
