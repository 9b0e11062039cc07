#include "sdirac/angular.hpp"

#include <cmath>

#include "sdirac/complexfn.hpp"
#include "sdirac/errors.hpp"
#include "sdirac/quadrature.hpp"

namespace sdirac {

Channel::Channel(int tj, int tmj, int s) : twice_j(tj), twice_mj(tmj), sigma(s) {
    if (tj < 1 || tj % 2 == 0) throw DomainError("Channel: j must be a positive half-odd integer");
    if (std::abs(tmj) > tj || (tmj - tj) % 2 != 0)
        throw DomainError("Channel: m_j must run over -j..j in integer steps");
    if (s != 1 && s != -1) throw DomainError("Channel: sigma must be +1 or -1");
    // l = (twice_j - sigma)/2 >= 0 holds automatically: twice_j >= 1
}

int spin_orbit_eigenvalue(const Channel& ch) { return ch.kappa(); }

Spinor2 spin_spherical_harmonic(const Channel& ch, double theta, double phi) {
    const int l = ch.l();
    const int two_l_plus_1 = 2 * l + 1;
    // m_l for the two components: m_j -/+ 1/2
    const int m_up = (ch.twice_mj - 1) / 2;
    const int m_dn = (ch.twice_mj + 1) / 2;
    // coefficients sqrt((l + 1/2 +/- sigma m_j) / (2l+1))
    const double c_up = (2.0 * l + 1.0 + ch.sigma * ch.twice_mj) / (2.0 * two_l_plus_1);
    const double c_dn = (2.0 * l + 1.0 - ch.sigma * ch.twice_mj) / (2.0 * two_l_plus_1);

    Spinor2 out;
    if (std::abs(m_up) <= l && c_up > 0.0)
        out.up = std::sqrt(c_up) * spherical_harmonic(l, m_up, theta, phi);
    if (std::abs(m_dn) <= l && c_dn > 0.0)
        out.down = static_cast<double>(ch.sigma) * std::sqrt(c_dn) *
                   spherical_harmonic(l, m_dn, theta, phi);
    return out;
}

Spinor2 apply_sigma_er(const Spinor2& s, double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const Complex em = std::exp(-I * phi), ep = std::exp(I * phi);
    return {ct * s.up + st * em * s.down, st * ep * s.up - ct * s.down};
}

std::vector<Channel> enumerate_channels(int twice_j_max) {
    std::vector<Channel> out;
    for (int tj = 1; tj <= twice_j_max; tj += 2)
        for (int sigma : {+1, -1})
            for (int tmj = -tj; tmj <= tj; tmj += 2) out.emplace_back(tj, tmj, sigma);
    return out;
}

std::vector<std::vector<Complex>> spin_harmonic_gram(const std::vector<Channel>& chans,
                                                     int n_theta, int n_phi, bool parallel) {
    const GaussLegendre gl(n_theta, -1.0, 1.0); // nodes in cos(theta)
    const double hphi = 2.0 * M_PI / n_phi;
    const int nc = static_cast<int>(chans.size());

    // sample all channels on the product grid once
    std::vector<std::vector<Spinor2>> samples(nc);
    const int npts = n_theta * n_phi;
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < nc; ++i) {
        samples[i].resize(npts);
        for (int it = 0; it < n_theta; ++it) {
            const double theta = std::acos(gl.x[it]);
            for (int ip = 0; ip < n_phi; ++ip)
                samples[i][it * n_phi + ip] = spin_spherical_harmonic(chans[i], theta, ip * hphi);
        }
    }

    std::vector<std::vector<Complex>> gram(nc, std::vector<Complex>(nc));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < nc; ++i) {
        for (int k = i; k < nc; ++k) {
            Complex acc{0.0, 0.0};
            for (int it = 0; it < n_theta; ++it) {
                Complex row{0.0, 0.0};
                for (int ip = 0; ip < n_phi; ++ip)
                    row += dot(samples[i][it * n_phi + ip], samples[k][it * n_phi + ip]);
                acc += gl.w[it] * row;
            }
            acc *= hphi;
            gram[i][k] = acc;
            gram[k][i] = std::conj(acc);
        }
    }
    return gram;
}

} // namespace sdirac
