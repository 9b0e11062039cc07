#include "sdirac/radial.hpp"

#include <cmath>

#include "sdirac/complexfn.hpp"
#include "sdirac/errors.hpp"
#include "sdirac/quadrature.hpp"

namespace sdirac {

RadialGrid::RadialGrid(double rmin, double rmax, int n) : r_min(rmin), r_max(rmax), n_points(n) {
    if (!(rmax > rmin) || rmin < 0.0) throw DomainError("RadialGrid: need r_max > r_min >= 0");
    if (n < 16) throw DomainError("RadialGrid: need at least 16 points");
}

RadialFunction::RadialFunction(const RadialGrid& g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n_points)
        throw DomainError("RadialFunction: sample count does not match grid");
}

double RadialFunction::norm_r2() const {
    std::vector<double> y(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double r = grid.r(static_cast<int>(i));
        y[i] = std::norm(values[i]) * r * r;
    }
    return std::sqrt(simpson(y, grid.h()));
}

void RadialFunction::normalize() {
    const double n = norm_r2();
    if (!(n > 0.0)) throw DomainError("RadialFunction::normalize: zero norm");
    for (auto& v : values) v /= n;
}

int RadialFunction::count_interior_zeros() const {
    int zeros = 0;
    double prev = 0.0;
    bool have_prev = false;
    // skip a boundary margin where the amplitude is negligible
    double vmax = 0.0;
    for (const auto& v : values) vmax = std::max(vmax, std::abs(v.real()));
    for (int i = 1; i + 1 < grid.n_points; ++i) {
        const double x = values[i].real();
        if (std::abs(x) < 1e-9 * vmax) continue;
        if (have_prev && x * prev < 0.0) ++zeros;
        prev = x;
        have_prev = true;
    }
    return zeros;
}

Complex inner_r2(const RadialFunction& f, const RadialFunction& g) {
    if (!f.grid.same_as(g.grid)) throw DomainError("inner_r2: grids differ");
    std::vector<Complex> y(f.values.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = f.grid.r(static_cast<int>(i));
        y[i] = std::conj(f.values[i]) * g.values[i] * r * r;
    }
    // Simpson with complex samples
    const double h = f.grid.h();
    Complex s{0.0, 0.0};
    std::size_t i = 0;
    for (; i + 2 < y.size(); i += 2) s += y[i] + 4.0 * y[i + 1] + y[i + 2];
    s *= h / 3.0;
    if (i + 1 < y.size()) s += 0.5 * h * (y[i] + y[i + 1]);
    return s;
}

std::vector<Complex> derivative4(const std::vector<Complex>& f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 7) throw DomainError("derivative4: at least 7 samples required");
    std::vector<Complex> d(n);
    const double ih = 1.0 / h;
    // one-sided 4th order at the edges
    auto fwd = [&](int i) {
        return (-25.0 * f[i] + 48.0 * f[i + 1] - 36.0 * f[i + 2] + 16.0 * f[i + 3] -
                3.0 * f[i + 4]) *
               (ih / 12.0);
    };
    auto bwd = [&](int i) {
        return (25.0 * f[i] - 48.0 * f[i - 1] + 36.0 * f[i - 2] - 16.0 * f[i - 3] +
                3.0 * f[i - 4]) *
               (ih / 12.0);
    };
    d[0] = fwd(0);
    d[1] = fwd(1);
    d[n - 2] = bwd(n - 2);
    d[n - 1] = bwd(n - 1);
    for (int i = 2; i < n - 2; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * (ih / 12.0);
    return d;
}

void SpinorField::check_consistency() const {
    if (upper.ch.twice_j != lower.ch.twice_j || upper.ch.twice_mj != lower.ch.twice_mj ||
        upper.ch.sigma != -lower.ch.sigma)
        throw DomainError("SpinorField: blocks must share (j, m_j) and have opposite sigma");
    if (!upper.radial.grid.same_as(lower.radial.grid))
        throw DomainError("SpinorField: blocks must share the radial grid");
}

double SpinorField::norm() const {
    const double nu = upper.radial.norm_r2();
    const double nl = lower.radial.norm_r2();
    return std::sqrt(nu * nu + nl * nl);
}

Complex inner(const SpinorField& a, const SpinorField& b) {
    // upper pairs with upper and lower with lower; the orthonormal angular
    // factors kill any block whose channels differ
    Complex acc{0.0, 0.0};
    if (a.upper.ch == b.upper.ch) acc += inner_r2(a.upper.radial, b.upper.radial);
    if (a.lower.ch == b.lower.ch) acc += inner_r2(a.lower.radial, b.lower.radial);
    return acc;
}

RadialFunction oscillator_radial(int n, int l, const PhysicalParams& p, double omega,
                                 const RadialGrid& g) {
    if (n < 0 || l < 0) throw DomainError("oscillator_radial: n, l >= 0");
    if (!(omega > 0.0)) throw DomainError("oscillator_radial: omega > 0");
    const double b = p.m * omega / p.hbar; // inverse length^2
    const double losc = 1.0 / std::sqrt(b);

    // resolution: innermost node spacing of L_n is ~ pi*losc / (2 sqrt(2n+l+2));
    // ask for >= 8 points across it
    const double node_scale = M_PI * losc / (2.0 * std::sqrt(2.0 * n + l + 2.0));
    if (g.h() > node_scale / 8.0)
        throw GridError("oscillator_radial: fewer than 8 points per node oscillation");

    std::vector<Complex> v(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double r = g.r(i);
        const double x = b * r * r;
        v[i] = std::pow(r, l) * std::exp(-0.5 * x) * assoc_laguerre(n, l + 0.5, x);
    }
    RadialFunction f(g, std::move(v));
    // tail must be negligible before normalising
    const double tail = std::norm(f.values.back()) * g.r_max * g.r_max * losc;
    const double body = f.norm_r2();
    if (tail > 1e-10 * body * body)
        throw GridError("oscillator_radial: Gaussian tail truncated by r_max");
    f.normalize();
    return f;
}

RadialFunction coulomb_radial(int n, int l, double eff_charge_sq, const PhysicalParams& p,
                              const RadialGrid& g) {
    if (n < 0 || l < 0) throw DomainError("coulomb_radial: n, l >= 0");
    if (!(eff_charge_sq > 0.0)) throw DomainError("coulomb_radial: eff_charge_sq > 0");
    const double a = p.hbar * p.hbar / (p.m * eff_charge_sq); // Bohr-like radius
    const int npr = n + l + 1;                                // principal number
    const double scale = 2.0 / (npr * a);

    std::vector<Complex> v(g.n_points);
    for (int i = 0; i < g.n_points; ++i) {
        const double x = scale * g.r(i);
        v[i] = std::pow(x, l) * std::exp(-0.5 * x) * assoc_laguerre(n, 2 * l + 1, x);
    }
    RadialFunction f(g, std::move(v));
    const double tail = std::norm(f.values.back()) * g.r_max * g.r_max / scale;
    const double body = f.norm_r2();
    if (tail > 1e-10 * body * body)
        throw GridError("coulomb_radial: exponential tail truncated by r_max");
    f.normalize();
    return f;
}

} // namespace sdirac
