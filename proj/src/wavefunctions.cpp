#include "sdirac/wavefunctions.hpp"

#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/tolerances.hpp"

namespace sdirac {

RadialGrid default_grid(const ModelSpec& ms, const PhysicalParams& p, int n_points) {
    if (const auto* osc = std::get_if<DiracOscillator>(&ms))
        return RadialGrid(0.0, 20.0 * std::sqrt(p.hbar / (p.m * osc->omega)), n_points);
    if (const auto* lin = std::get_if<LinearSuperpotential>(&ms))
        return RadialGrid(0.0, 120.0 / lin->gamma, n_points);
    if (const auto* rad = std::get_if<RadialSuperpotential>(&ms))
        return RadialGrid(std::max(0.0, rad->U.x.front()), rad->U.x.back(), n_points);
    return RadialGrid(0.0, 20.0 * p.hbar / (p.m * p.c), n_points);
}

RadialFunction susy_zero_mode(const ModelSpec& ms, const Channel& ch, const PhysicalParams& p,
                              const RadialGrid& g) {
    const SusyClassification cls = classify_susy(ms, p);
    if (!cls.unbroken()) throw ClassificationError("susy_zero_mode: SUSY is broken for this model");
    if (cls.zero_mode_sector != +1 || ch.sigma != +1)
        throw ClassificationError("susy_zero_mode: only the sigma=+1 sector is supported");

    const auto terms = radial_superpotential(ms, p);
    const int l = ch.l();
    std::vector<Complex> v(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double r = g.r(i);
        const double e = -terms.U(r);
        v[i] = (e > -700.0) ? std::pow(r, l) * std::exp(e) : 0.0;
    }
    RadialFunction f(g, std::move(v));
    const double body = f.norm_r2();
    if (!(body > 0.0) || std::norm(f.values.back()) * g.r_max * g.r_max > 1e-10 * body * body)
        throw GridError("susy_zero_mode: profile not normalizable on this grid");
    f.normalize();
    return f;
}

std::pair<RadialFunction, Channel> apply_d_operator(const RadialFunction& f, const Channel& ch,
                                                    const ModelSpec& ms, const PhysicalParams& p,
                                                    bool dagger) {
    if (!is_spherical(ms)) throw DomainError("apply_d_operator: spherical models only");
    double fmax = 0.0;
    for (const auto& v : f.values) fmax = std::max(fmax, std::abs(v));
    if (std::abs(f.values.back()) > 1e-8 * fmax)
        throw GridError("apply_d_operator: input not supported away from r_max");

    const auto terms = radial_superpotential(ms, p);
    const double kap = ch.kappa();
    const double sign_u = dagger ? +1.0 : -1.0;
    const Complex pref = -I * p.hbar * p.c;

    const std::vector<Complex> df = derivative4(f.values, f.grid.h());
    std::vector<Complex> out(f.grid.n_points);
    for (int i = 0; i < f.grid.n_points; ++i) {
        const double r = f.grid.r(i);
        Complex over_r;
        if (r > 0.0) {
            over_r = f.values[i] / r;
        } else {
            // f(0) = 0 for l >= 1, so f/r -> f'(0); for l = 0 inputs kappa = 1
            // and the (kappa-1) factor removes the term
            over_r = df[i];
        }
        out[i] = pref * (df[i] - (kap - 1.0) * over_r + sign_u * terms.dU(r) * f.values[i]);
    }
    return {RadialFunction(f.grid, std::move(out)), ch.flipped()};
}

RadialFunction hplus_basis(const ModelSpec& ms, const Channel& ch, int n, const PhysicalParams& p,
                           const RadialGrid& g) {
    if (const auto* osc = std::get_if<DiracOscillator>(&ms))
        return oscillator_radial(n, ch.l(), p, osc->omega, g);
    if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        if (ch.sigma != +1)
            throw NoDiscreteSpectrumError("linear model: H^+ bound states need sigma = +1");
        const double e2 = p.hbar * p.hbar * lin->gamma * (ch.l() + 1) / p.m;
        return coulomb_radial(n, ch.l(), e2, p, g);
    }
    throw NoDiscreteSpectrumError(model_name(ms) + ": no closed-form radial basis");
}

RadialFunction hminus_basis(const ModelSpec& ms, const Channel& ch, int n, const PhysicalParams& p,
                            const RadialGrid& g) {
    if (const auto* osc = std::get_if<DiracOscillator>(&ms))
        return oscillator_radial(n, ch.l(), p, osc->omega, g);
    if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        if (ch.sigma != -1)
            throw NoDiscreteSpectrumError("linear model: H^- bound states need sigma = -1");
        const double e2 = p.hbar * p.hbar * lin->gamma * ch.l() / p.m;
        if (!(e2 > 0.0)) throw NoDiscreteSpectrumError("linear model: l = 0 has no H^- bound state");
        return coulomb_radial(n, ch.l(), e2, p, g);
    }
    throw NoDiscreteSpectrumError(model_name(ms) + ": no closed-form radial basis");
}

SpinorField assemble_dirac_state(const SpinorBlock& psi_plus, const SpinorBlock& psi_minus,
                                 double eps, int branch, const PhysicalParams& p,
                                 const ModelSpec* verify_model) {
    if (branch != 1 && branch != -1) throw DomainError("assemble_dirac_state: branch = +-1");
    if (!(psi_minus.ch == psi_plus.ch.flipped()))
        throw DomainError("assemble_dirac_state: psi- must live on the sigma-flipped channel");
    const double e0 = epsilon0(p);
    const bool at_floor = std::abs(eps - e0) <= tol::zero_mode_rel * std::max(1.0, e0);

    if (verify_model && !at_floor) {
        // partner relation D^dag psi+ = sqrt((eps-eps0)/a) psi-
        auto [dpsi, och] = apply_d_operator(psi_plus.radial, psi_plus.ch, *verify_model, p, true);
        const double factor = std::sqrt((eps - e0) / p.a());
        double num = 0.0, den = 0.0;
        for (int i = 0; i < dpsi.grid.n_points; ++i) {
            const double r = dpsi.grid.r(i);
            num += std::norm(dpsi.values[i] - factor * psi_minus.radial.values[i]) * r * r;
            den += std::norm(factor * psi_minus.radial.values[i]) * r * r;
        }
        if (den > 0.0 && std::sqrt(num / den) > 1e-4)
            throw InconsistentPairError(
                "assemble_dirac_state: (psi+, psi-) fail the SUSY partner relation");
    }

    SpinorField out;
    out.upper = psi_plus;
    out.lower = psi_minus;
    if (at_floor) {
        if (branch > 0) {
            for (auto& v : out.lower.radial.values) v = 0.0;
        } else {
            for (auto& v : out.upper.radial.values) v = 0.0;
        }
        return out;
    }
    const FwCoefficients fw = fw_mixing_coefficients(eps, e0);
    const double cu = (branch > 0) ? fw.c_plus : -fw.c_minus;
    const double cl = (branch > 0) ? fw.c_minus : fw.c_plus;
    for (auto& v : out.upper.radial.values) v *= cu;
    for (auto& v : out.lower.radial.values) v *= cl;
    return out;
}

SpinorField build_4spinor(const SpectralLine& line, const ModelSpec& ms, const PhysicalParams& p,
                          const RadialGrid& g) {
    const double e0 = epsilon0(p);
    const bool at_floor = std::abs(line.eps - e0) <= tol::zero_mode_rel * std::max(1.0, e0);

    SpinorBlock plus, minus;
    if (line.branch > 0) {
        plus.ch = line.ch;
        minus.ch = line.ch.flipped();
        plus.radial = hplus_basis(ms, plus.ch, line.n, p, g);
        if (at_floor) {
            minus.radial = RadialFunction(g, std::vector<Complex>(g.n_points, Complex{0.0, 0.0}));
        } else {
            auto [dpsi, och] = apply_d_operator(plus.radial, plus.ch, ms, p, true);
            const double factor = std::sqrt((line.eps - e0) / p.a());
            for (auto& v : dpsi.values) v /= factor;
            minus.radial = std::move(dpsi);
        }
    } else {
        // branch = -1 line: eps is the H^- ladder value on ch
        minus.ch = line.ch;
        plus.ch = line.ch.flipped();
        minus.radial = hminus_basis(ms, minus.ch, line.n, p, g);
        auto [dpsi, och] = apply_d_operator(minus.radial, minus.ch, ms, p, false);
        const double factor = std::sqrt((line.eps - e0) / p.a());
        for (auto& v : dpsi.values) v /= factor;
        plus.radial = std::move(dpsi);
        // the 4-spinor layout wants (upper, lower) = (sigma, -sigma) of plus.ch
    }
    SpinorField out = assemble_dirac_state(plus, minus, line.eps, line.branch, p);
    out.check_consistency();
    return out;
}

SpinorField apply_dirac_radial(const SpinorField& field, const ModelSpec& ms,
                               const PhysicalParams& p) {
    field.check_consistency();
    const double M0 = p.M0();
    auto [d_lower, up_ch] = apply_d_operator(field.lower.radial, field.lower.ch, ms, p, false);
    auto [d_upper, low_ch] = apply_d_operator(field.upper.radial, field.upper.ch, ms, p, true);

    SpinorField out;
    out.upper.ch = field.upper.ch;
    out.lower.ch = field.lower.ch;
    out.upper.radial = field.upper.radial;
    for (int i = 0; i < out.upper.radial.grid.n_points; ++i)
        out.upper.radial.values[i] = M0 * field.upper.radial.values[i] + d_lower.values[i];
    out.lower.radial = field.lower.radial;
    for (int i = 0; i < out.lower.radial.grid.n_points; ++i)
        out.lower.radial.values[i] = d_upper.values[i] - M0 * field.lower.radial.values[i];
    return out;
}

} // namespace sdirac
