#pragma once

#include <functional>
#include <vector>

#include "sdirac/types.hpp"

namespace sdirac {

// Gauss-Legendre nodes/weights on [a, b]
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
    GaussLegendre(int order, double a, double b);
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
    bool converged = false;
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b] for complex integrands.
QuadResult integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                        double rel_eps, double abs_floor = 0.0);

/// Integral over [0, inf) of an exponentially decaying integrand: panels
/// [0,T], [T,2T], ... are added until a panel falls below the tail cutoff.
QuadResult integrate_decaying(const std::function<Complex(double)>& f, double first_panel,
                              double rel_eps);

/// Trapezoid sum of uniformly sampled values with spacing h (real weights).
double trapezoid(const std::vector<double>& y, double h);
Complex trapezoid(const std::vector<Complex>& y, double h);

/// Composite Simpson on uniform samples (n odd preferred; falls back to
/// trapezoid on the last interval when even).
double simpson(const std::vector<double>& y, double h);

} // namespace sdirac
