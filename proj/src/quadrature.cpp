#include "sdirac/quadrature.hpp"

#include <cmath>

#include "sdirac/errors.hpp"
#include "sdirac/tolerances.hpp"

namespace sdirac {

GaussLegendre::GaussLegendre(int order, double a, double b) {
    if (order < 1) throw DomainError("GaussLegendre: order >= 1");
    x.resize(order);
    w.resize(order);
    const int m = (order + 1) / 2;
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = xm - xl * z;
        x[order - 1 - i] = xm + xl * z;
        w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        w[order - 1 - i] = w[i];
    }
}

namespace {

// Kronrod 15 / Gauss 7 nodes and weights on [-1, 1]
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    Complex k15;
    double err;
};

PanelEstimate gk15(const std::function<Complex(double)>& f, double a, double b, long* evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex resg = wg[3] * fc;
    Complex resk = wgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const Complex f1 = f(c - dx), f2 = f(c + dx);
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    *evals += 15;
    const Complex k15 = resk * h;
    const double err = std::abs((resk - resg) * h);
    return {k15, err};
}

void adapt(const std::function<Complex(double)>& f, double a, double b, double rel_eps,
           double abs_floor, int depth, QuadResult& out) {
    long ev = 0;
    const PanelEstimate e = gk15(f, a, b, &ev);
    out.evaluations += ev;
    const double target = std::max(abs_floor, rel_eps * std::abs(e.k15));
    if (e.err <= target || depth >= tol::gk_max_depth) {
        out.value += e.k15;
        out.abs_error += e.err;
        if (depth >= tol::gk_max_depth && e.err > target) out.converged = false;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, rel_eps, 0.5 * abs_floor, depth + 1, out);
    adapt(f, c, b, rel_eps, 0.5 * abs_floor, depth + 1, out);
}

} // namespace

QuadResult integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                        double rel_eps, double abs_floor) {
    QuadResult out;
    out.converged = true;
    // a whole-interval estimate bounds the subdivision depth in regions
    // where the integrand is negligible relative to the total
    long ev = 0;
    const PanelEstimate whole = gk15(f, a, b, &ev);
    out.evaluations += ev;
    const double scale_floor = 0.05 * rel_eps * std::abs(whole.k15);
    adapt(f, a, b, rel_eps, std::max(abs_floor, scale_floor), 0, out);
    return out;
}

QuadResult integrate_decaying(const std::function<Complex(double)>& f, double first_panel,
                              double rel_eps) {
    QuadResult total;
    total.converged = true;
    double a = 0.0, width = first_panel;
    double running = 0.0;
    for (int panel = 0; panel < 80; ++panel) {
        QuadResult part = integrate_gk(f, a, a + width, rel_eps, running * rel_eps * 0.1);
        total.value += part.value;
        total.abs_error += part.abs_error;
        total.evaluations += part.evaluations;
        total.converged = total.converged && part.converged;
        running = std::abs(total.value);
        if (std::abs(part.value) < tol::promotor_tail_eps * std::max(running, 1e-300) && panel > 1)
            return total;
        a += width;
        if (panel >= 2) width *= 1.6; // stretch panels into the tail
    }
    throw ConvergenceError("integrate_decaying: tail not reached within panel budget");
}

double trapezoid(const std::vector<double>& y, double h) {
    if (y.size() < 2) return 0.0;
    double s = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
    return s * h;
}

Complex trapezoid(const std::vector<Complex>& y, double h) {
    if (y.size() < 2) return {0.0, 0.0};
    Complex s = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) s += y[i];
    return s * h;
}

double simpson(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (y[0] + y[1]);
    double s = 0.0;
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) s += y[i] + 4.0 * y[i + 1] + y[i + 2];
    s *= h / 3.0;
    if (i + 1 < n) s += 0.5 * h * (y[i] + y[i + 1]); // leftover interval
    return s;
}

} // namespace sdirac
