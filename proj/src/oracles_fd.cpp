#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/oracles.hpp"
#include "sdirac/susy.hpp"

namespace sdirac {

namespace {

// lowest eigenpairs of the Dirichlet u-problem on the interior nodes of g
TridiagEigen solve_u_problem(const std::function<double(double)>& V, int l, const RadialGrid& g,
                             int count, const PhysicalParams& p, bool vectors) {
    const int n = g.n_points - 2; // interior nodes
    const double h = g.h();
    const double kin = p.hbar * p.hbar / (2.0 * p.m * h * h);
    const double cent = l * (l + 1) * p.hbar * p.hbar / (2.0 * p.m);
    std::vector<double> diag(n), off(n - 1, -kin);
    for (int i = 0; i < n; ++i) {
        const double r = g.r(i + 1);
        diag[i] = 2.0 * kin + V(r) + (l > 0 ? cent / (r * r) : 0.0);
    }
    return tridiag_eigs_lowest(std::move(diag), std::move(off), count, vectors);
}

} // namespace

FdEigenResult fd_radial_eigensolver(const std::function<double(double)>& V, int l,
                                    const RadialGrid& g, int count, const PhysicalParams& p,
                                    double convergence_tol) {
    if (count < 1 || count > 20) throw DomainError("fd_radial_eigensolver: need 1 <= count <= 20");
    TridiagEigen sol = solve_u_problem(V, l, g, count, p, true);

    if (convergence_tol > 0.0) {
        RadialGrid g2(g.r_min, g.r_max, 2 * g.n_points - 1);
        TridiagEigen fine = solve_u_problem(V, l, g2, count, p, false);
        for (std::size_t k = 0; k < sol.eigenvalues.size() && k < fine.eigenvalues.size(); ++k) {
            const double shift = std::abs(sol.eigenvalues[k] - fine.eigenvalues[k]);
            if (shift > 10.0 * convergence_tol * std::max(1.0, std::abs(sol.eigenvalues[k])))
                throw GridError("fd_radial_eigensolver: eigenvalue not grid-converged");
        }
    }

    FdEigenResult out;
    out.eigenvalues = sol.eigenvalues;
    const double h = g.h();
    for (auto& uvec : sol.eigenvectors) {
        // u includes the Dirichlet zeros at both ends; R = u/r with the
        // r=0 sample linearly extrapolated
        std::vector<Complex> R(g.n_points, Complex{0.0, 0.0});
        for (int i = 1; i + 1 < g.n_points; ++i) {
            const double r = g.r(i);
            R[i] = (r > 0.0) ? Complex{uvec[i - 1] / r, 0.0} : Complex{0.0, 0.0};
        }
        if (g.r_min == 0.0) R[0] = Complex{uvec[0] / h, 0.0}; // l = 0 limit u'(0)
        RadialFunction f(g, std::move(R));
        f.normalize();
        // fix the overall sign so the first antinode is positive
        for (int i = 0; i < g.n_points; ++i)
            if (std::abs(f.values[i]) > 0.1 * h) {
                if (f.values[i].real() < 0.0)
                    for (auto& v : f.values) v = -v;
                break;
            }
        out.functions.push_back(std::move(f));
    }
    return out;
}

std::vector<double> fd_witten1d_eigensolver(const ModelSpec& ms, int sector, double x_max,
                                            int n_points, int count, const PhysicalParams& p) {
    if (sector != 1 && sector != -1) throw DomainError("fd_witten1d_eigensolver: sector = +-1");
    if (count < 1 || count > 20) throw DomainError("fd_witten1d_eigensolver: 1 <= count <= 20");

    std::function<double(double)> dU, d2U;
    if (const auto* osc1 = std::get_if<DiracOscillator1D>(&ms)) {
        const double b = p.m * osc1->omega / p.hbar;
        dU = [b](double x) { return b * x; };
        d2U = [b](double) { return b; };
    } else if (const auto* wit = std::get_if<Witten1D>(&ms)) {
        const SampledFunction tab = wit->U;
        dU = [tab](double x) { return tab.deriv(x); };
        d2U = [tab](double x) { return tab.deriv2(x); };
    } else if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) {
        const double slope = -p.m * p.c / p.hbar;
        dU = [slope](double) { return slope; };
        d2U = [](double) { return 0.0; };
    } else {
        throw DomainError("fd_witten1d_eigensolver: one-dimensional models only");
    }

    double e0 = epsilon0(p);
    if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) e0 = 0.0; // M0 = 0 in this realisation

    const int n = n_points - 2;
    const double h = 2.0 * x_max / (n_points - 1);
    const double kin = p.hbar * p.hbar / (2.0 * p.m * h * h);
    const double hb2_2m = p.hbar * p.hbar / (2.0 * p.m);
    std::vector<double> diag(n), off(n - 1, -kin);
    for (int i = 0; i < n; ++i) {
        const double x = -x_max + (i + 1) * h;
        const double up = dU(x);
        diag[i] = 2.0 * kin + hb2_2m * (up * up - sector * d2U(x)) + e0;
    }
    return tridiag_eigs_lowest(std::move(diag), std::move(off), count, false).eigenvalues;
}

} // namespace sdirac
