#include <algorithm>
#include <chrono>
#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/oracles.hpp"
#include "sdirac/susy.hpp"

namespace sdirac {

namespace {

struct LatticeSpectrum {
    std::vector<double> bound;       // |E| below the window edge, ascending in E
    bool has_plus_m0 = false;        // eigenvalue at +M0 (zero mode)
    bool has_minus_m0 = false;
    double min_abs_eps_minus_e0 = 0; // distance of spec(H_SUSY) to eps0
};

// bound-window spectrum of the staggered H_D
LatticeSpectrum lattice_spectrum(const ChannelLattice& lat, double window, double M0) {
    LatticeSpectrum out;
    TridiagEigen sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off, -window, window, false);
    out.min_abs_eps_minus_e0 = std::numeric_limits<double>::infinity();
    for (double e : sol.eigenvalues) {
        if (std::abs(e - M0) < 1e-9 * std::max(1.0, M0)) out.has_plus_m0 = true;
        if (std::abs(e + M0) < 1e-9 * std::max(1.0, M0)) out.has_minus_m0 = true;
        out.bound.push_back(e);
    }
    return out;
}

// Richardson-extrapolated bound eigenvalues (h^2 scheme): two lattices with
// n and 2n cells
std::vector<double> extrapolated_bound_levels(const ModelSpec& ms, const Channel& ch,
                                              const PhysicalParams& p, double extent, int n_cells,
                                              double window, bool positive_side, int count) {
    auto solve = [&](int cells) {
        ChannelLattice lat = build_radial_lattice(ms, ch, p, extent, cells);
        TridiagEigen sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off,
                                              positive_side ? 0.0 : -window,
                                              positive_side ? window : 0.0, false);
        std::vector<double> ev = sol.eigenvalues;
        if (!positive_side) std::reverse(ev.begin(), ev.end()); // ascending |E|
        return ev;
    };
    const std::vector<double> coarse = solve(n_cells);
    const std::vector<double> fine = solve(2 * n_cells);
    std::vector<double> out;
    for (std::size_t k = 0; k < coarse.size() && k < fine.size() && k < std::size_t(count); ++k)
        out.push_back((4.0 * fine[k] - coarse[k]) / 3.0);
    return out;
}

} // namespace

VerificationReport susy_algebra_check(const ModelSpec& ms, const Channel& ch, double extent,
                                      int n_cells, const PhysicalParams& p, int compare_levels) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.name = "susy_algebra";
    rep.inputs = model_name(ms) + " 2j=" + std::to_string(ch.twice_j) +
                 " sigma=" + std::to_string(ch.sigma) + " cells=" + std::to_string(n_cells);

    const bool line_model =
        is_one_dimensional(ms) || std::holds_alternative<FreeDiracBrokenSusy>(ms);
    const ChannelLattice lat = line_model ? build_line_lattice(ms, p, extent, n_cells)
                                          : build_radial_lattice(ms, ch, p, extent, n_cells);
    double M0 = p.M0();
    if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) M0 = 0.0;

    const BandMatrix Q = lat.q_matrix();
    const BandMatrix Qd = lat.qdag_matrix();
    const BandMatrix W = lat.witten_matrix();
    const BandMatrix HD = lat.hd_matrix();

    // structural identities (exact zeros)
    rep.add("Q_squared", Q.multiply(Q, true).frobenius(), 0.0);
    {
        BandMatrix W2 = W.multiply(W);
        W2.add_diagonal(-1.0);
        rep.add("W_involution", W2.frobenius(), 0.0);
    }
    rep.add("WQ_anticommutator", W.multiply(Q).plus(Q.multiply(W)).frobenius(), 0.0);

    // {Q, Qdag} + M0^2 == H_D^2 in Frobenius norm
    const BandMatrix HD2 = HD.multiply(HD, true);
    {
        BandMatrix lhs = Q.multiply(Qd, true).plus(Qd.multiply(Q, true));
        lhs.add_diagonal(M0 * M0);
        const double resid = lhs.plus(HD2, -1.0).frobenius() / HD2.frobenius();
        rep.add("algebra_residual", resid, 1e-10);
    }
    rep.add("HD2_block_diagonal", HD2.max_cross_block(lat.witten_sign) / HD2.frobenius(), 1e-14);

    // spectral map against the FD SUSY eigensolver (both Richardson-extrapolated)
    const double e0 = epsilon0(p) * (std::holds_alternative<FreeDiracBrokenSusy>(ms) ? 0.0 : 1.0);
    double window = 0.0;
    bool purely_discrete = false;
    try {
        window = continuum_branch(ms, p).threshold * (1.0 - 1e-9);
    } catch (const NoContinuumError&) {
        purely_discrete = true;
    }

    if (!line_model && purely_discrete) {
        // oscillator-type: compare the lowest discrete |E| on both signs
        const auto* osc = std::get_if<DiracOscillator>(&ms);
        const double hw = p.hbar * osc->omega;
        window = std::sqrt(2.0 * p.m * p.c * p.c *
                           (e0 + hw * (2.0 * compare_levels + 2.0 * ch.j() + 4.0)));
        double dev = 0.0;
        for (int side : {+1, -1}) {
            const std::vector<double> hd_levels = extrapolated_bound_levels(
                ms, ch, p, extent, n_cells, window, side > 0, compare_levels);
            // FD eigensolver on the matching SUSY sector: positive branch
            // pairs with H^+ on ch, negative with H^- on ch.flipped()...
            // both ladders live in this H_D block:
            const Channel fd_ch = (side > 0) ? ch : ch.flipped();
            const int fd_sector = side;
            auto refine = [&](int npts) {
                RadialGrid g(0.0, extent, npts);
                return fd_radial_eigensolver(effective_radial_potential(ms, fd_ch, fd_sector, p),
                                             0, g, compare_levels + 2, p)
                    .eigenvalues;
            };
            const std::vector<double> eps_c = refine(n_cells + 1);
            const std::vector<double> eps_f = refine(2 * n_cells + 1);
            for (std::size_t k = 0; k < hd_levels.size(); ++k) {
                if (k >= eps_c.size() || k >= eps_f.size()) break;
                const double eps = (4.0 * eps_f[k] - eps_c[k]) / 3.0;
                const double expect = dirac_energy_from_susy(eps, p, side);
                dev = std::max(dev, std::abs(hd_levels[k] - expect) / std::abs(expect));
            }
        }
        rep.add("spectral_map", dev, 1e-5);

        // unpaired zero mode on the kappa > 0 channel
        const LatticeSpectrum ls = lattice_spectrum(lat, 1.5 * M0 + 1e-9, M0);
        const SusyClassification cls = classify_susy(ms, p);
        if (cls.unbroken() && cls.zero_mode_sector == +1 && ch.kappa() > 0) {
            rep.add("zero_mode_plus_M0", ls.has_plus_m0 ? 0.0 : 1.0, 0.0);
            rep.add("zero_mode_unpaired", ls.has_minus_m0 ? 1.0 : 0.0, 0.0);
        }
    } else if (!line_model) {
        // models with a continuum: compare bound states below the threshold
        double dev = 0.0;
        bool any = false;
        for (int side : {+1, -1}) {
            std::vector<double> hd_levels;
            try {
                hd_levels = extrapolated_bound_levels(ms, ch, p, extent, n_cells, window,
                                                      side > 0, compare_levels);
            } catch (const Error&) {
                continue;
            }
            const Channel fd_ch = (side > 0) ? ch : ch.flipped();
            std::vector<double> eps_bound;
            try {
                auto refine = [&](int npts) {
                    RadialGrid g(0.0, extent, npts);
                    return fd_radial_eigensolver(
                               effective_radial_potential(ms, fd_ch, side, p), 0, g,
                               compare_levels + 2, p)
                        .eigenvalues;
                };
                const std::vector<double> eps_c = refine(n_cells + 1);
                const std::vector<double> eps_f = refine(2 * n_cells + 1);
                const double eps_edge = window * window / (2.0 * p.m * p.c * p.c);
                for (std::size_t k = 0; k < eps_c.size() && k < eps_f.size(); ++k) {
                    const double eps = (4.0 * eps_f[k] - eps_c[k]) / 3.0;
                    if (eps < eps_edge) eps_bound.push_back(eps);
                }
            } catch (const Error&) {
                continue;
            }
            for (std::size_t k = 0; k < hd_levels.size() && k < eps_bound.size(); ++k) {
                const double expect = dirac_energy_from_susy(eps_bound[k], p, side);
                dev = std::max(dev, std::abs(hd_levels[k] - expect) / std::abs(expect));
                any = true;
            }
        }
        if (any) rep.add("spectral_map", dev, 1e-5);
    } else {
        // 1D models: FD Witten eigensolver supplies the SUSY side
        const SusyClassification cls = classify_susy(ms, p);
        const auto hd_sol = tridiag_eigs_range(lat.hd_diag, lat.hd_off, 0.0,
                                               std::sqrt(2.0 * p.m * p.c * p.c *
                                                         (e0 + compare_levels + 4.0)),
                                               false);
        std::vector<double> eps_fd = fd_witten1d_eigensolver(ms, +1, extent, n_cells + 1,
                                                             compare_levels + 2, p);
        std::vector<double> eps_fd_fine = fd_witten1d_eigensolver(ms, +1, extent, 2 * n_cells + 1,
                                                                  compare_levels + 2, p);
        double dev = 0.0;
        if (std::holds_alternative<DiracOscillator1D>(ms)) {
            ChannelLattice lat2 = build_line_lattice(ms, p, extent, 2 * n_cells);
            const auto hd_fine = tridiag_eigs_range(lat2.hd_diag, lat2.hd_off, 0.0,
                                                    std::sqrt(2.0 * p.m * p.c * p.c *
                                                              (e0 + compare_levels + 4.0)),
                                                    false);
            for (int k = 0; k < compare_levels; ++k) {
                if (k >= static_cast<int>(hd_sol.eigenvalues.size()) ||
                    k >= static_cast<int>(hd_fine.eigenvalues.size()) ||
                    k >= static_cast<int>(eps_fd.size()))
                    break;
                const double ehd = (4.0 * hd_fine.eigenvalues[k] - hd_sol.eigenvalues[k]) / 3.0;
                const double eps = (4.0 * eps_fd_fine[k] - eps_fd[k]) / 3.0;
                const double expect = dirac_energy_from_susy(eps, p, +1);
                dev = std::max(dev, std::abs(ehd - expect) / std::abs(expect));
            }
            rep.add("spectral_map", dev, 1e-5);
        }
        if (cls.status == SusyStatus::Broken) {
            // no eigenvalue of H_SUSY at eps0: smallest eps must sit at a
            // finite gap above e0 (here eps0 = 0 for the broken free model)
            const double eps_min = (4.0 * eps_fd_fine[0] - eps_fd[0]) / 3.0;
            const double gap_expected = 0.5 * p.m * p.c * p.c; // mc^2/2 for broken free
            rep.add("broken_no_zero_mode",
                    std::abs(eps_min - e0) > 0.5 * gap_expected ? 0.0 : 1.0, 0.0);
            // and the H_D lattice shows the same gap: no state inside (-mc^2, mc^2)
            const double mc2 = p.m * p.c * p.c;
            const auto inside = tridiag_eigs_range(lat.hd_diag, lat.hd_off, -0.9 * mc2,
                                                   0.9 * mc2, false);
            rep.add("broken_hd_gap", static_cast<double>(inside.eigenvalues.size()), 0.0);
        }
    }

    // FW rotation per bound eigenpair: the 2x2 restriction of H_D onto the
    // (u, v) components of an eigenvector rotates to diag(+sqrt, -sqrt)
    {
        TridiagEigen sol = tridiag_eigs_range(
            lat.hd_diag, lat.hd_off, M0 * 1.0000001,
            std::sqrt(M0 * M0 + 2.0 * p.m * p.c * p.c * (2.0 * compare_levels + 6.0)), true);
        double worst = 0.0;
        int used = 0;
        for (std::size_t k = 0; k < sol.eigenvalues.size() && used < 3; ++k, ++used) {
            const std::vector<double>& vec = sol.eigenvectors[k];
            // split into the upper/lower components
            std::vector<double> u, v;
            for (int i = 0; i < lat.dim; ++i)
                (lat.witten_sign[i] > 0 ? u : v).push_back(vec[i]);
            double nu = 0.0, nv = 0.0;
            for (double x : u) nu += x * x;
            for (double x : v) nv += x * x;
            nu = std::sqrt(nu);
            nv = std::sqrt(nv);
            if (nu < 1e-12 || nv < 1e-12) continue;
            // s = <u_hat | D | v_hat> via the Q-block action
            double s = 0.0;
            std::vector<double> Dv(lat.dim, 0.0);
            {
                std::vector<double> vfull(lat.dim, 0.0);
                for (int i = 0, iv = 0; i < lat.dim; ++i)
                    if (lat.witten_sign[i] < 0) vfull[i] = v[iv++] / nv;
                const BandMatrix Qm = lat.q_matrix();
                for (int i = 0; i < lat.dim; ++i) {
                    double acc = 0.0;
                    for (int j = std::max(0, i - 1); j <= std::min(lat.dim - 1, i + 1); ++j)
                        acc += Qm.get(i, j) * vfull[j];
                    Dv[i] = acc;
                }
            }
            for (int i = 0, iu = 0; i < lat.dim; ++i)
                if (lat.witten_sign[i] > 0) s += (u[iu++] / nu) * Dv[i];
            const double lam = std::sqrt(M0 * M0 + s * s);
            const double eps = lam * lam / (2.0 * p.m * p.c * p.c);
            const FwCoefficients fw = fw_mixing_coefficients(eps, M0 * M0 / (2.0 * p.m * p.c * p.c));
            // U = [[c+, c-], [-c-, c+]] with the sign of s carried by c-;
            // B = U [[M0, s],[s, -M0]] U^T must equal diag(+lam, -lam)
            const double cp = fw.c_plus, cm = (s >= 0.0 ? 1.0 : -1.0) * fw.c_minus;
            const double a11 = cp * M0 + cm * s, a12 = cp * s - cm * M0;
            const double a21 = -cm * M0 + cp * s, a22 = -cm * s - cp * M0;
            const double b11 = a11 * cp + a12 * cm;
            const double b12 = -a11 * cm + a12 * cp;
            const double b21 = a21 * cp + a22 * cm;
            const double b22 = -a21 * cm + a22 * cp;
            worst = std::max({worst, std::abs(b12) / lam, std::abs(b21) / lam,
                              std::abs(b11 - lam) / lam, std::abs(b22 + lam) / lam});
        }
        rep.add("fw_rotation", worst, 1e-10);
    }

    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace sdirac
