#pragma once

#include <vector>

#include "sdirac/angular.hpp"
#include "sdirac/params.hpp"

namespace sdirac {

// Real band matrix in LAPACK band storage; entry (i,j) exists for
// j-ku <= i <= j+kl. Used for the discretized SUSY operators, whose
// bandwidths stay tiny in the interleaved ordering.
class BandMatrix {
public:
    BandMatrix() = default;
    BandMatrix(int n, int kl, int ku);

    int size() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }

    double get(int i, int j) const;
    void set(int i, int j, double v);
    void add(int i, int j, double v);

    BandMatrix transpose() const;
    BandMatrix multiply(const BandMatrix& other, bool parallel = false) const;
    BandMatrix plus(const BandMatrix& other, double scale_other = 1.0) const;
    void add_diagonal(double v);
    void scale(double v);
    double frobenius() const;
    // largest |entry (i,j)| over pairs with sign_i != sign_j (block-coupling test)
    double max_cross_block(const std::vector<int>& signs) const;

private:
    int n_ = 0, kl_ = 0, ku_ = 0;
    std::vector<double> data_;
    int idx(int i, int j) const { return ku_ + i - j + j * (kl_ + ku_ + 1); }
};

struct TridiagEigen {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors; // empty unless requested
};

/// Eigenvalues of a symmetric tridiagonal matrix inside [vl, vu]
/// (LAPACK dstevr, range 'V').
TridiagEigen tridiag_eigs_range(std::vector<double> diag, std::vector<double> off, double vl,
                                double vu, bool vectors);

/// Lowest `count` eigenvalues (range 'I').
TridiagEigen tridiag_eigs_lowest(std::vector<double> diag, std::vector<double> off, int count,
                                 bool vectors);

// How the two component grids interlock. The wide grid hosts a structural
// kernel of the first-order block, realising the operator's index: a channel
// that carries the zero mode gets a grid one point wider on that side, so
// the unpaired +-M0 eigenvalue exists exactly; all other channels get square
// blocks and a strictly paired spectrum.
enum class Staggering { WideUpper, WideLower, Square };

// Staggered channel discretization of H_D = [[M0, D],[D^dag, -M0]], reduced
// to the real tridiagonal form in the interleaved (u, v) ordering. Upper
// samples live on one of the staggered grids (midpoints or nodes) and lower
// samples on the other; `witten_sign` records which positions are upper (+1).
struct ChannelLattice {
    Staggering kind = Staggering::Square;
    double h = 0.0;
    int dim = 0;
    int n_upper = 0, n_lower = 0;
    std::vector<double> hd_diag, hd_off;
    std::vector<int> witten_sign;
    std::vector<double> upper_points, lower_points;

    // D-block entries, column-compressed: coupling of lower sample i to the
    // two neighbouring upper samples (a: left/lesser index, b: right)
    std::vector<double> d_a, d_b;
    // interleaved positions of lower sample i's neighbours
    std::vector<int> pos_lower, pos_upper_a, pos_upper_b;

    BandMatrix q_matrix() const;    // Q  = [[0, D],[0, 0]]
    BandMatrix qdag_matrix() const; // Q^dag
    BandMatrix witten_matrix() const;
    BandMatrix hd_matrix() const;
};

/// Radial channel lattice on (0, r_max] with n_cells spacing intervals.
ChannelLattice build_radial_lattice(const ModelSpec& ms, const Channel& ch,
                                    const PhysicalParams& p, double r_max, int n_cells);

/// One-dimensional lattice on [-x_max, x_max] (Witten models, broken free).
ChannelLattice build_line_lattice(const ModelSpec& ms, const PhysicalParams& p, double x_max,
                                  int n_cells);

} // namespace sdirac
