#include "sdirac/susy.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "sdirac/errors.hpp"
#include "sdirac/tolerances.hpp"

namespace sdirac {

double epsilon0(const PhysicalParams& p) {
    const double M0 = p.M0();
    return M0 * M0 / (2.0 * p.m * p.c * p.c);
}

double dirac_energy_from_susy(double eps, const PhysicalParams& p, int branch) {
    if (eps < 0.0) throw DomainError("dirac_energy_from_susy: eps >= 0 required");
    if (branch != 1 && branch != -1) throw DomainError("dirac_energy_from_susy: branch = +-1");
    return branch * std::sqrt(2.0 * p.m * p.c * p.c * eps);
}

FwCoefficients fw_mixing_coefficients(double eps, double eps0) {
    if (!(eps > eps0) || eps0 < 0.0)
        throw DomainError("fw_mixing_coefficients: require eps > eps0 >= 0");
    const double q = std::sqrt(eps0 / eps);
    const double den = std::sqrt(2.0 + 2.0 * q);
    return {(1.0 + q) / den, std::sqrt(1.0 - eps0 / eps) / den};
}

RadialSuperpotentialTerms radial_superpotential(const ModelSpec& ms, const PhysicalParams& p) {
    if (std::holds_alternative<FreeDirac>(ms)) {
        auto zero = [](double) { return 0.0; };
        return {zero, zero, zero};
    }
    if (const auto* osc = std::get_if<DiracOscillator>(&ms)) {
        const double b = p.m * osc->omega / p.hbar;
        return {[b](double r) { return 0.5 * b * r * r; }, [b](double r) { return b * r; },
                [b](double) { return b; }};
    }
    if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        const double g = lin->gamma;
        return {[g](double r) { return g * r; }, [g](double) { return g; },
                [](double) { return 0.0; }};
    }
    if (const auto* rad = std::get_if<RadialSuperpotential>(&ms)) {
        const SampledFunction U = rad->U;
        return {[U](double r) { return U.value(r); }, [U](double r) { return U.deriv(r); },
                [U](double r) { return U.deriv2(r); }};
    }
    throw DomainError("radial_superpotential: model is not spherical");
}

std::function<double(double)> effective_radial_potential(const ModelSpec& ms, const Channel& ch,
                                                         int sector, const PhysicalParams& p) {
    if (!is_spherical(ms)) throw DomainError("effective_radial_potential: spherical models only");
    if (sector != 1 && sector != -1)
        throw DomainError("effective_radial_potential: sector = +-1");
    const RadialSuperpotentialTerms terms = radial_superpotential(ms, p);
    const double hb2_2m = p.hbar * p.hbar / (2.0 * p.m);
    const double kap = ch.kappa();
    const double ll1 = static_cast<double>(ch.l()) * (ch.l() + 1);
    const double e0 = epsilon0(p);
    const double s = sector;
    auto dU = terms.dU;
    auto d2U = terms.d2U;
    return [=](double r) {
        const double up = dU(r);
        double v = hb2_2m * (up * up - s * d2U(r)) + e0;
        if (r > 0.0) v += -s * kap * 2.0 * hb2_2m * up / r + ll1 * hb2_2m / (r * r);
        return v;
    };
}

namespace {

enum class TailVerdict { Convergent, Divergent, Inconclusive };

// Log-log slope over a window of strictly positive samples.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& f, std::size_t lo,
                    std::size_t hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        if (!(f[i] > 0.0) || !(x[i] > 0.0)) continue;
        const double lx = std::log(x[i]), ly = std::log(f[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 4) return 0.0;
    const double det = n * sxx - sx * sx;
    return det != 0.0 ? (n * sxy - sx * sy) / det : 0.0;
}

// Verdict for int f dx near the upper end of the sampled range.
TailVerdict tail_verdict(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    const std::size_t lo = (3 * n) / 4;
    double fmax = 0.0;
    for (double v : f) fmax = std::max(fmax, v);
    // underflow to ~0 over the whole tail window: certainly convergent
    bool all_tiny = true;
    for (std::size_t i = lo; i < n; ++i)
        if (f[i] > 1e-280 && f[i] > 1e-200 * fmax) all_tiny = false;
    if (all_tiny) return TailVerdict::Convergent;
    if (f[n - 1] > f[lo] && f[n - 1] > 1e-12 * fmax) return TailVerdict::Divergent;
    const double p = loglog_slope(x, f, lo, n);
    if (p < -1.5) return TailVerdict::Convergent;
    if (p > -0.5) return TailVerdict::Divergent;
    return TailVerdict::Inconclusive;
}

// Verdict near x -> 0 for radial integrands.
TailVerdict origin_verdict(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    std::size_t hi = std::max<std::size_t>(8, n / 8);
    const double p = loglog_slope(x, f, 1, hi);
    if (p > -0.5) return TailVerdict::Convergent;
    if (p < -1.5) return TailVerdict::Divergent;
    return TailVerdict::Inconclusive;
}

// Square-integrability of exp(sign*U) against the r^2 measure on (0, R].
TailVerdict radial_zero_mode_verdict(const std::function<double(double)>& U, double R, int sign) {
    const int n = 3000;
    std::vector<double> x(n), f(n);
    for (int i = 0; i < n; ++i) {
        x[i] = R * (i + 1) / static_cast<double>(n);
        const double e = 2.0 * sign * U(x[i]);
        f[i] = (e < 700.0) ? x[i] * x[i] * std::exp(e) : std::numeric_limits<double>::infinity();
        if (std::isinf(f[i])) return TailVerdict::Divergent;
    }
    const TailVerdict t = tail_verdict(x, f);
    if (t != TailVerdict::Convergent) return t;
    return origin_verdict(x, f);
}

// Same for a 1D superpotential on the full line.
TailVerdict line_zero_mode_verdict(const std::function<double(double)>& U, double X, int sign) {
    const int n = 3000;
    std::vector<double> xr(n), fr(n), xl(n), fl(n);
    for (int i = 0; i < n; ++i) {
        const double xv = X * (i + 1) / static_cast<double>(n);
        xr[i] = xv;
        xl[i] = xv;
        const double er = 2.0 * sign * U(xv);
        const double el = 2.0 * sign * U(-xv);
        if (er > 700.0 || el > 700.0) return TailVerdict::Divergent;
        fr[i] = std::exp(er);
        fl[i] = std::exp(el);
    }
    const TailVerdict r = tail_verdict(xr, fr);
    const TailVerdict l = tail_verdict(xl, fl);
    if (r == TailVerdict::Divergent || l == TailVerdict::Divergent) return TailVerdict::Divergent;
    if (r == TailVerdict::Inconclusive || l == TailVerdict::Inconclusive)
        return TailVerdict::Inconclusive;
    return TailVerdict::Convergent;
}

double radial_test_extent(const ModelSpec& ms, const PhysicalParams& p) {
    if (const auto* osc = std::get_if<DiracOscillator>(&ms))
        return 12.0 * std::sqrt(p.hbar / (p.m * osc->omega));
    if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) return 30.0 / lin->gamma;
    if (const auto* rad = std::get_if<RadialSuperpotential>(&ms)) return rad->U.x.back();
    return 40.0 * p.hbar / (p.m * p.c); // free: scale is immaterial, r^2 grows anyway
}

} // namespace

SusyClassification classify_susy(const ModelSpec& ms, const PhysicalParams& p) {
    p.validate();
    validate(ms);
    SusyClassification out;

    auto conclude = [&](TailVerdict plus, TailVerdict minus) {
        if (plus == TailVerdict::Inconclusive || minus == TailVerdict::Inconclusive)
            throw ClassificationError(
                "classify_susy: integrand tail not convergent within the sampled range");
        if (plus == TailVerdict::Convergent) {
            out.status = SusyStatus::Unbroken;
            out.zero_mode_sector = +1;
        } else if (minus == TailVerdict::Convergent) {
            out.status = SusyStatus::Unbroken;
            out.zero_mode_sector = -1;
        } else {
            out.status = SusyStatus::Broken;
            out.zero_mode_sector = 0;
        }
    };

    if (is_spherical(ms)) {
        const auto terms = radial_superpotential(ms, p);
        const double R = radial_test_extent(ms, p);
        conclude(radial_zero_mode_verdict(terms.U, R, -1),
                 radial_zero_mode_verdict(terms.U, R, +1));
        if (out.unbroken())
            out.degeneracy_note =
                "zero modes at eps0 in every channel j; infinitely degenerate in j";
        return out;
    }

    if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) {
        // supersymmetric representation: D = c sigma.p - i m c^2 is the
        // 1D Witten form with hbar U' = -m c along each axis
        const double slope = -p.m * p.c / p.hbar;
        auto U = [slope](double x) { return slope * x; };
        const double X = 40.0 * p.hbar / (p.m * p.c);
        conclude(line_zero_mode_verdict(U, X, -1), line_zero_mode_verdict(U, X, +1));
        out.degeneracy_note = "eps0 = 0 is below the spectrum floor mc^2/2";
        return out;
    }

    // one-dimensional models
    std::function<double(double)> U;
    double X = 20.0;
    if (const auto* osc1 = std::get_if<DiracOscillator1D>(&ms)) {
        const double b = p.m * osc1->omega / p.hbar;
        U = [b](double x) { return 0.5 * b * x * x; };
        X = 12.0 / std::sqrt(b);
    } else if (const auto* wit = std::get_if<Witten1D>(&ms)) {
        const SampledFunction tab = wit->U;
        U = [tab](double x) { return tab.value(x); };
        X = std::min(std::abs(tab.x.front()), std::abs(tab.x.back()));
    } else {
        throw DomainError("classify_susy: unsupported model");
    }
    conclude(line_zero_mode_verdict(U, X, -1), line_zero_mode_verdict(U, X, +1));
    if (out.unbroken()) out.degeneracy_note = "single zero mode at eps0";
    return out;
}

} // namespace sdirac
