#include <cmath>
#include <limits>

#include "sdirac/errors.hpp"
#include "sdirac/oracles.hpp"
#include "sdirac/susy.hpp"

namespace sdirac {

namespace {

// bisection for f(zeta) = 0, f strictly monotone on [a, b] with a sign change
double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0 || (b - a) < 1e-14 * std::max(1.0, std::abs(m))) return m;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

PoleScan pole_scan(const ModelSpec& ms, const Channel& ch, int sector, double zeta_lo,
                   double zeta_hi, const PhysicalParams& p) {
    if (!(zeta_hi > zeta_lo)) throw DomainError("pole_scan: empty window");
    PoleScan out;
    const double kap = ch.kappa();
    const int l = ch.l();

    std::function<double(double)> nu_of_zeta;
    double rho;
    double window_hi = zeta_hi;

    if (const auto* osc = std::get_if<DiracOscillator>(&ms)) {
        const double w = osc->omega;
        rho = 0.5 * l + 0.25;
        nu_of_zeta = [=](double zeta) {
            const double mu2 = zeta / (p.c * p.c) - p.m * p.m * p.c * p.c;
            return (mu2 + 2.0 * sector * p.m * p.hbar * w * (kap + 0.5)) /
                   (4.0 * p.m * w * p.hbar);
        };
    } else if (const auto* lin = std::get_if<LinearSuperpotential>(&ms)) {
        rho = l + 0.5;
        const double g = lin->gamma;
        const double thr = continuum_branch(ms, p).threshold;
        window_hi = std::min(zeta_hi, thr * thr * (1.0 - 1e-12)); // poles live below the cut
        nu_of_zeta = [=](double zeta) {
            const double mu2 = zeta / (p.c * p.c) - p.m * p.m * p.c * p.c;
            const double under = p.hbar * p.hbar * g * g - mu2;
            if (under <= 0.0) return std::numeric_limits<double>::infinity();
            const double Om = 2.0 / p.m * std::sqrt(under);
            return 2.0 * sector * p.hbar * g * kap / (Om * p.m);
        };
    } else {
        throw DomainError("pole_scan: closed-form nu maps exist for oscillator and linear only");
    }

    // nu(zeta) is increasing in zeta on the physical window for both models;
    // bracket each n with nu(zeta) - (n + rho + 1/2) changing sign
    for (int n = 0; n < 4096; ++n) {
        const double target = n + rho + 0.5;
        auto f = [&](double z) { return nu_of_zeta(z) - target; };
        const double flo = f(zeta_lo), fhi = f(window_hi);
        if (fhi < 0.0) {
            // every later n is even further beyond the window
            break;
        }
        if (flo > 0.0) continue; // pole below the window
        const double z = bisect(f, zeta_lo, window_hi);
        if (z >= zeta_lo && z <= zeta_hi) {
            out.zetas.push_back(z);
            out.n_index.push_back(n);
        }
    }
    // truncation note: either the next pole lies beyond the window, or the
    // sequence accumulates inside it past the enumeration cap
    const int n_next = out.n_index.empty() ? 0 : out.n_index.back() + 1;
    out.window_truncated = true;
    out.first_excluded_n = n_next;
    return out;
}

PoleScan pole_scan_generic(const std::function<Complex(Complex)>& g_of_zeta, double zeta_lo,
                           double zeta_hi, int samples, double eta) {
    if (samples < 8) throw DomainError("pole_scan_generic: need at least 8 samples");
    PoleScan out;
    std::vector<double> mag(samples);
    const double dz = (zeta_hi - zeta_lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const Complex z{zeta_lo + i * dz, eta};
        try {
            mag[i] = std::abs(g_of_zeta(z));
        } catch (const Error&) {
            mag[i] = std::numeric_limits<double>::infinity();
        }
    }
    for (int i = 1; i + 1 < samples; ++i) {
        if (!(mag[i] > mag[i - 1] && mag[i] > mag[i + 1])) continue;
        double z0 = zeta_lo + i * dz;
        if (std::isfinite(mag[i - 1]) && std::isfinite(mag[i]) && std::isfinite(mag[i + 1])) {
            // quadratic refinement on 1/|g| (smooth through the pole)
            const double ym = 1.0 / mag[i - 1], y0 = 1.0 / mag[i], yp = 1.0 / mag[i + 1];
            const double den = ym - 2.0 * y0 + yp;
            if (std::abs(den) > 0.0) z0 += dz * 0.5 * (ym - yp) / den;
        }
        out.zetas.push_back(z0);
        out.n_index.push_back(static_cast<int>(out.zetas.size()) - 1);
    }
    return out;
}

std::vector<BranchCutSample> branch_cut_scan(double gamma, const Channel& ch,
                                             const PhysicalParams& p,
                                             const std::vector<double>& lambdas, double eta) {
    std::vector<BranchCutSample> out;
    const double mc2 = p.m * p.c * p.c;
    for (double lam : lambdas) {
        if (lam < 0.0) throw DomainError("branch_cut_scan: lambda >= 0");
        BranchCutSample s;
        s.lambda = lam;
        s.zeta = mc2 * mc2 + p.hbar * p.hbar * p.c * p.c * gamma * gamma + p.c * p.c * lam * lam;
        s.E_plus = std::sqrt(s.zeta);
        s.E_minus = -s.E_plus;
        if (gamma > 0.0 && lam > 0.0) {
            ResolventQuery q;
            q.ch = ch;
            q.sector = +1;
            q.r_out = 1.2 / gamma;
            q.r_in = 0.7 / gamma;
            q.zeta = Complex{s.zeta, +eta};
            s.g_above = linear_radial_kernel(q, gamma, p);
            q.zeta = Complex{s.zeta, -eta};
            s.g_below = linear_radial_kernel(q, gamma, p);
        }
        out.push_back(s);
    }
    return out;
}

Complex kernel_residue(const std::function<Complex(Complex)>& g_of_zeta, Complex center,
                       double radius, int n_points) {
    Complex acc{0.0, 0.0};
    for (int k = 0; k < n_points; ++k) {
        const double th = 2.0 * M_PI * k / n_points;
        const Complex e{std::cos(th), std::sin(th)};
        acc += g_of_zeta(center + radius * e) * e;
    }
    return acc * (radius / n_points);
}

} // namespace sdirac
