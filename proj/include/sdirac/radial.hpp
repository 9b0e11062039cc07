#pragma once

#include <vector>

#include "sdirac/angular.hpp"
#include "sdirac/params.hpp"
#include "sdirac/types.hpp"

namespace sdirac {

// Uniform radial grid including both endpoints.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 20.0;
    int n_points = 4000;

    RadialGrid() = default;
    RadialGrid(double rmin, double rmax, int n);

    double h() const { return (r_max - r_min) / (n_points - 1); }
    double r(int i) const { return r_min + i * h(); }
    bool same_as(const RadialGrid& o) const {
        return r_min == o.r_min && r_max == o.r_max && n_points == o.n_points;
    }
};

// Sampled radial profile R(r). The norm convention of the library is
// int |R|^2 r^2 dr = 1; basis constructors enforce it, generic operator
// output need not be normalised.
struct RadialFunction {
    RadialGrid grid;
    std::vector<Complex> values;

    RadialFunction() = default;
    RadialFunction(const RadialGrid& g, std::vector<Complex> v);

    // sqrt(int |R|^2 r^2 dr) on the grid (Simpson)
    double norm_r2() const;
    void normalize();
    int count_interior_zeros() const; // sign changes of Re R strictly inside
};

/// <f, g> with the r^2 measure.
Complex inner_r2(const RadialFunction& f, const RadialFunction& g);

/// 4th-order first derivative on a uniform grid, one-sided closures at the
/// two boundary points of each end.
std::vector<Complex> derivative4(const std::vector<Complex>& f, double h);

// One radial amplitude attached to an angular channel: R(r) phi_ch(omega).
struct SpinorBlock {
    RadialFunction radial;
    Channel ch;
};

// 4-spinor field made of an upper and a lower block; the blocks share
// (j, m_j) and carry opposite sigma.
struct SpinorField {
    SpinorBlock upper;
    SpinorBlock lower;

    void check_consistency() const;
    double norm() const; // sqrt(|upper|^2 + |lower|^2), r^2 measure
};

Complex inner(const SpinorField& a, const SpinorField& b);

/// Harmonic-oscillator radial eigenfunction
/// R_{nl} = N r^l exp(-m w r^2 / 2 hbar) L_n^{l+1/2}(m w r^2 / hbar).
/// Throws GridError when the grid cannot resolve the node structure or hold
/// the Gaussian tail.
RadialFunction oscillator_radial(int n, int l, const PhysicalParams& p, double omega,
                                 const RadialGrid& g);

/// Hydrogen-like bound radial function for principal number n+l+1 with the
/// given squared effective charge. Throws GridError when the exponential
/// tail is truncated above 1e-10 of the norm.
RadialFunction coulomb_radial(int n, int l, double eff_charge_sq, const PhysicalParams& p,
                              const RadialGrid& g);

} // namespace sdirac
