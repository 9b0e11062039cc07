#include "sdirac/lattice.hpp"

#include <cmath>
#include <cstring>
#include <functional>

#include <lapacke.h>

#include "sdirac/errors.hpp"
#include "sdirac/susy.hpp"

namespace sdirac {

BandMatrix::BandMatrix(int n, int kl, int ku) : n_(n), kl_(kl), ku_(ku) {
    data_.assign(static_cast<std::size_t>(kl + ku + 1) * n, 0.0);
}

double BandMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return 0.0;
    if (i - j > kl_ || j - i > ku_) return 0.0;
    return data_[idx(i, j)];
}

void BandMatrix::set(int i, int j, double v) {
    if (i - j > kl_ || j - i > ku_) throw DomainError("BandMatrix::set outside band");
    data_[idx(i, j)] = v;
}

void BandMatrix::add(int i, int j, double v) {
    if (i - j > kl_ || j - i > ku_) throw DomainError("BandMatrix::add outside band");
    data_[idx(i, j)] += v;
}

BandMatrix BandMatrix::transpose() const {
    BandMatrix t(n_, ku_, kl_);
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
            t.set(j, i, data_[idx(i, j)]);
    return t;
}

BandMatrix BandMatrix::multiply(const BandMatrix& other, bool parallel) const {
    if (other.n_ != n_) throw DomainError("BandMatrix::multiply size mismatch");
    BandMatrix c(n_, std::min(n_ - 1, kl_ + other.kl_), std::min(n_ - 1, ku_ + other.ku_));
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < n_; ++i) {
        const int jlo = std::max(0, i - c.kl_), jhi = std::min(n_ - 1, i + c.ku_);
        for (int j = jlo; j <= jhi; ++j) {
            double s = 0.0;
            const int klo = std::max({0, i - kl_, j - other.ku_});
            const int khi = std::min({n_ - 1, i + ku_, j + other.kl_});
            for (int k = klo; k <= khi; ++k) s += get(i, k) * other.get(k, j);
            c.set(i, j, s);
        }
    }
    return c;
}

BandMatrix BandMatrix::plus(const BandMatrix& other, double scale_other) const {
    BandMatrix c(n_, std::max(kl_, other.kl_), std::max(ku_, other.ku_));
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - c.ku_); i <= std::min(n_ - 1, j + c.kl_); ++i)
            c.set(i, j, get(i, j) + scale_other * other.get(i, j));
    return c;
}

void BandMatrix::add_diagonal(double v) {
    for (int i = 0; i < n_; ++i) data_[idx(i, i)] += v;
}

void BandMatrix::scale(double v) {
    for (auto& x : data_) x *= v;
}

double BandMatrix::frobenius() const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i) {
            const double v = data_[idx(i, j)];
            s += v * v;
        }
    return std::sqrt(s);
}

double BandMatrix::max_cross_block(const std::vector<int>& signs) const {
    double m = 0.0;
    for (int j = 0; j < n_; ++j)
        for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
            if (signs[i] != signs[j]) m = std::max(m, std::abs(data_[idx(i, j)]));
    return m;
}

TridiagEigen tridiag_eigs_range(std::vector<double> diag, std::vector<double> off, double vl,
                                double vu, bool vectors) {
    const lapack_int n = static_cast<lapack_int>(diag.size());
    if (off.size() + 1 != diag.size()) throw DomainError("tridiag_eigs: off size must be n-1");
    std::vector<double> w(n), z(vectors ? static_cast<std::size_t>(n) * n : 1);
    std::vector<lapack_int> isuppz(2 * std::max<lapack_int>(1, n));
    lapack_int m = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'V', n, diag.data(), off.data(), vl, vu, 0, 0,
        0.0, &m, w.data(), vectors ? z.data() : nullptr, n, isuppz.data());
    if (info != 0) throw ConvergenceError("LAPACKE_dstevr failed, info = " + std::to_string(info));
    TridiagEigen out;
    out.eigenvalues.assign(w.begin(), w.begin() + m);
    if (vectors) {
        out.eigenvectors.resize(m);
        for (lapack_int k = 0; k < m; ++k)
            out.eigenvectors[k].assign(z.begin() + static_cast<std::size_t>(k) * n,
                                       z.begin() + static_cast<std::size_t>(k + 1) * n);
    }
    return out;
}

TridiagEigen tridiag_eigs_lowest(std::vector<double> diag, std::vector<double> off, int count,
                                 bool vectors) {
    const lapack_int n = static_cast<lapack_int>(diag.size());
    if (off.size() + 1 != diag.size()) throw DomainError("tridiag_eigs: off size must be n-1");
    count = std::min<int>(count, n);
    std::vector<double> w(n), z(vectors ? static_cast<std::size_t>(n) * count : 1);
    std::vector<lapack_int> isuppz(2 * std::max<lapack_int>(1, count));
    lapack_int m = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'I', n, diag.data(), off.data(), 0, 0, 1, count,
        0.0, &m, w.data(), vectors ? z.data() : nullptr, n, isuppz.data());
    if (info != 0) throw ConvergenceError("LAPACKE_dstevr failed, info = " + std::to_string(info));
    TridiagEigen out;
    out.eigenvalues.assign(w.begin(), w.begin() + m);
    if (vectors) {
        out.eigenvectors.resize(m);
        for (lapack_int k = 0; k < m; ++k)
            out.eigenvectors[k].assign(z.begin() + static_cast<std::size_t>(k) * n,
                                       z.begin() + static_cast<std::size_t>(k + 1) * n);
    }
    return out;
}

namespace {

// Assemble the interleaved tridiagonal H_D and the compressed D-block from
// the staggered geometry. `wfun` is the first-order coefficient:
//   D^dag ~ -hbar c (d/dr - W(r)),  D ~ hbar c (d/dr + W(r)),
// with W = kappa/r - U' in the radial case and W = U' on the line.
ChannelLattice assemble(Staggering kind, double lo, double hi, int n_cells, double M0, double hc,
                        const std::function<double(double)>& wfun) {
    ChannelLattice lat;
    lat.kind = kind;
    lat.h = (hi - lo) / n_cells;
    const double h = lat.h;

    // grids: wide side gets the midpoints of every cell, narrow side the
    // interior nodes (Dirichlet). Square puts u on nodes and v on midpoints
    // with ONE midpoint pinned to zero; the pinned end must be where the
    // D-block kernel profile exp(-int W) is largest, otherwise an
    // exponentially small singular value fakes a state at -+M0. The sign of
    // int W picks that end.
    bool pin_bottom = false;
    if (kind == Staggering::Square) {
        double wsum = 0.0;
        for (int i = 1; i <= n_cells; ++i) wsum += wfun(lo + (i - 0.5) * h);
        pin_bottom = wsum > 0.0;
    }
    if (kind == Staggering::WideUpper) {
        lat.n_upper = n_cells;
        lat.n_lower = n_cells - 1;
        for (int i = 1; i <= lat.n_upper; ++i) lat.upper_points.push_back(lo + (i - 0.5) * h);
        for (int i = 1; i <= lat.n_lower; ++i) lat.lower_points.push_back(lo + i * h);
    } else if (kind == Staggering::WideLower) {
        lat.n_lower = n_cells;
        lat.n_upper = n_cells - 1;
        for (int i = 1; i <= lat.n_lower; ++i) lat.lower_points.push_back(lo + (i - 0.5) * h);
        for (int i = 1; i <= lat.n_upper; ++i) lat.upper_points.push_back(lo + i * h);
    } else {
        lat.n_upper = n_cells - 1;
        lat.n_lower = n_cells - 1;
        for (int i = 1; i <= lat.n_upper; ++i) lat.upper_points.push_back(lo + i * h);
        for (int i = 1; i <= lat.n_lower; ++i)
            lat.lower_points.push_back(lo + (i - 0.5 + (pin_bottom ? 1.0 : 0.0)) * h);
    }
    lat.dim = lat.n_upper + lat.n_lower;
    lat.hd_diag.assign(lat.dim, 0.0);
    lat.hd_off.assign(lat.dim - 1, 0.0);
    lat.witten_sign.assign(lat.dim, 0);

    // interleaved ordering by spatial position; record positions of each
    // lower sample and its two upper neighbours
    //   WideUpper, Square(pin bottom): u1 v1 u2 v2 ...   (u at 2i-2, v at 2i-1)
    //   WideLower, Square(pin top)   : v1 u1 v2 u2 ...   (v at 2i-2, u at 2i-1)
    const bool upper_first = (kind == Staggering::WideUpper) ||
                             (kind == Staggering::Square && pin_bottom);
    auto upper_pos = [&](int i) { // 1-based
        return upper_first ? 2 * i - 2 : 2 * i - 1;
    };
    auto lower_pos = [&](int i) {
        return upper_first ? 2 * i - 1 : 2 * i - 2;
    };
    for (int i = 1; i <= lat.n_upper; ++i) lat.witten_sign[upper_pos(i)] = +1;
    for (int i = 1; i <= lat.n_lower; ++i) lat.witten_sign[lower_pos(i)] = -1;
    for (int i = 0; i < lat.dim; ++i) lat.hd_diag[i] = lat.witten_sign[i] * M0;

    // D^dag block row at each lower point couples the straddling upper
    // samples: (L u)(y_i) = -hc [ (u_right - u_left)/h - W(y_i) (u_right + u_left)/2 ]
    // and the D block is its transpose. Out-of-range neighbours are the
    // Dirichlet zeros of the node grid.
    for (int i = 1; i <= lat.n_lower; ++i) {
        const double W = wfun(lat.lower_points[i - 1]);
        const double ca = hc * (1.0 / h + 0.5 * W);  // coupling to the left upper sample
        const double cb = hc * (0.5 * W - 1.0 / h);  // coupling to the right upper sample
        int ia, ib;                                   // 1-based indices of left/right u samples
        if (kind == Staggering::WideUpper) {
            ia = i;
            ib = i + 1;
        } else if (kind == Staggering::Square && pin_bottom) {
            // lower point i sits at (i+1/2) h, between nodes i and i+1
            ia = i;
            ib = i + 1;
        } else {
            // lower point i sits at (i-1/2) h, between nodes i-1 and i
            ia = i - 1;
            ib = i;
        }
        lat.d_a.push_back(ca);
        lat.d_b.push_back(cb);
        lat.pos_lower.push_back(lower_pos(i));
        lat.pos_upper_a.push_back(ia >= 1 && ia <= lat.n_upper ? upper_pos(ia) : -1);
        lat.pos_upper_b.push_back(ib >= 1 && ib <= lat.n_upper ? upper_pos(ib) : -1);
    }

    for (std::size_t k = 0; k < lat.pos_lower.size(); ++k) {
        const int pl = lat.pos_lower[k];
        if (lat.pos_upper_a[k] >= 0) {
            const int pa = lat.pos_upper_a[k];
            if (std::abs(pa - pl) != 1) throw GridError("lattice: interleaving not tridiagonal");
            lat.hd_off[std::min(pa, pl)] += lat.d_a[k];
        }
        if (lat.pos_upper_b[k] >= 0) {
            const int pb = lat.pos_upper_b[k];
            if (std::abs(pb - pl) != 1) throw GridError("lattice: interleaving not tridiagonal");
            lat.hd_off[std::min(pb, pl)] += lat.d_b[k];
        }
    }
    return lat;
}

} // namespace

BandMatrix ChannelLattice::q_matrix() const {
    // Q = [[0, D], [0, 0]]: rows upper, columns lower
    BandMatrix q(dim, 1, 1);
    for (std::size_t k = 0; k < pos_lower.size(); ++k) {
        if (pos_upper_a[k] >= 0) q.add(pos_upper_a[k], pos_lower[k], d_a[k]);
        if (pos_upper_b[k] >= 0) q.add(pos_upper_b[k], pos_lower[k], d_b[k]);
    }
    return q;
}

BandMatrix ChannelLattice::qdag_matrix() const { return q_matrix().transpose(); }

BandMatrix ChannelLattice::witten_matrix() const {
    BandMatrix w(dim, 0, 0);
    for (int i = 0; i < dim; ++i) w.set(i, i, static_cast<double>(witten_sign[i]));
    return w;
}

BandMatrix ChannelLattice::hd_matrix() const {
    BandMatrix m(dim, 1, 1);
    for (int i = 0; i < dim; ++i) m.set(i, i, hd_diag[i]);
    for (int i = 0; i + 1 < dim; ++i) {
        m.set(i, i + 1, hd_off[i]);
        m.set(i + 1, i, hd_off[i]);
    }
    return m;
}

ChannelLattice build_radial_lattice(const ModelSpec& ms, const Channel& ch,
                                    const PhysicalParams& p, double r_max, int n_cells) {
    if (!is_spherical(ms)) throw DomainError("build_radial_lattice: spherical models only");
    if (n_cells < 16) throw GridError("build_radial_lattice: too few cells");
    const auto terms = radial_superpotential(ms, p);
    const double kap = ch.kappa();
    auto W = [terms, kap](double r) { return kap / r - terms.dU(r); };

    const SusyClassification cls = classify_susy(ms, p);
    Staggering kind = Staggering::Square;
    if (cls.unbroken() && cls.zero_mode_sector == +1 && ch.kappa() > 0)
        kind = Staggering::WideUpper;
    if (cls.unbroken() && cls.zero_mode_sector == -1 && ch.kappa() < 0)
        kind = Staggering::WideLower;

    return assemble(kind, 0.0, r_max, n_cells, p.M0(), p.hbar * p.c, W);
}

ChannelLattice build_line_lattice(const ModelSpec& ms, const PhysicalParams& p, double x_max,
                                  int n_cells) {
    if (n_cells < 16) throw GridError("build_line_lattice: too few cells");
    std::function<double(double)> W;
    if (const auto* osc1 = std::get_if<DiracOscillator1D>(&ms)) {
        const double b = p.m * osc1->omega / p.hbar;
        W = [b](double x) { return -b * x; };
    } else if (const auto* wit = std::get_if<Witten1D>(&ms)) {
        const SampledFunction tab = wit->U;
        W = [tab](double x) { return -tab.deriv(x); };
    } else if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) {
        const double slope = p.m * p.c / p.hbar; // hbar U' = -m c
        W = [slope](double) { return slope; };
    } else {
        throw DomainError("build_line_lattice: one-dimensional models only");
    }

    double M0 = p.M0();
    if (std::holds_alternative<FreeDiracBrokenSusy>(ms)) M0 = 0.0;

    const SusyClassification cls = classify_susy(ms, p);
    Staggering kind = Staggering::Square;
    if (cls.unbroken() && cls.zero_mode_sector == +1) kind = Staggering::WideUpper;
    if (cls.unbroken() && cls.zero_mode_sector == -1) kind = Staggering::WideLower;

    return assemble(kind, -x_max, x_max, n_cells, M0, p.hbar * p.c, W);
}

} // namespace sdirac
