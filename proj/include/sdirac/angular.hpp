#pragma once

#include <vector>

#include "sdirac/types.hpp"

namespace sdirac {

// Angular channel (j, m_j, sigma). Half-integers are stored doubled; l and
// kappa are derived: l = j - sigma/2, kappa = sigma (j + 1/2).
struct Channel {
    int twice_j = 1;
    int twice_mj = 1;
    int sigma = +1;

    Channel() = default;
    Channel(int tj, int tmj, int s);

    double j() const { return 0.5 * twice_j; }
    double mj() const { return 0.5 * twice_mj; }
    int l() const { return (twice_j - sigma) / 2; }
    int kappa() const { return sigma * (twice_j + 1) / 2; }
    // l of the sigma-flipped partner channel (same j, m_j)
    int l_flipped() const { return (twice_j + sigma) / 2; }
    Channel flipped() const { return Channel(twice_j, twice_mj, -sigma); }

    friend bool operator==(const Channel& a, const Channel& b) {
        return a.twice_j == b.twice_j && a.twice_mj == b.twice_mj && a.sigma == b.sigma;
    }
};

struct Spinor2 {
    Complex up{0.0, 0.0};
    Complex down{0.0, 0.0};

    Spinor2 operator+(const Spinor2& o) const { return {up + o.up, down + o.down}; }
    Spinor2 operator-(const Spinor2& o) const { return {up - o.up, down - o.down}; }
    Spinor2 operator*(Complex c) const { return {c * up, c * down}; }
    double norm2() const { return std::norm(up) + std::norm(down); }
};

inline Complex dot(const Spinor2& a, const Spinor2& b) {
    return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

/// kappa = sigma (j + 1/2), the spin-orbit eigenvalue of the channel.
int spin_orbit_eigenvalue(const Channel& ch);

/// Spin spherical harmonic phi^{(sigma)}_{j m_j}(theta, phi).
Spinor2 spin_spherical_harmonic(const Channel& ch, double theta, double phi);

/// Multiplication by sigma.e_r = [[cos t, sin t e^{-i p}], [sin t e^{i p}, -cos t]].
Spinor2 apply_sigma_er(const Spinor2& s, double theta, double phi);

/// All channels with j <= j_max (doubled), every m_j, both sigma
/// (sigma = -1 requires l >= 1, which holds for every j).
std::vector<Channel> enumerate_channels(int twice_j_max);

/// Gram matrix of spin spherical harmonics over S^2 by Gauss-Legendre x
/// trapezoid quadrature; entry (i,k) = <phi_i, phi_k>. `parallel` selects
/// the OpenMP path; the serial path is the test reference.
std::vector<std::vector<Complex>> spin_harmonic_gram(const std::vector<Channel>& chans,
                                                     int n_theta, int n_phi, bool parallel);

} // namespace sdirac
