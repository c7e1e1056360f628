#pragma once

#include <Eigen/Dense>

#include "routegap/graph.hpp"

namespace routegap {

/// Row-stochastic transition matrix of the simple random walk together with
/// its stationary distribution pi(x) = deg(x) / 2|E|.
struct WalkKernel {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd stationary;

  Eigen::Index size() const { return matrix.rows(); }
};

WalkKernel kernel(const Graph& g);

/// Full spectrum of the walk operator, descending, with the matching
/// eigenfunctions as columns (orthonormal in the pi-weighted inner product).
struct SpectralReport {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenfunctions;
  Eigen::VectorXd stationary;

  double beta1() const { return eigenvalues(1); }
  double beta_star() const {
    return std::max(eigenvalues(1), std::abs(eigenvalues(eigenvalues.size() - 1)));
  }
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm drops to off_tol; throws
/// std::runtime_error if max_sweeps sweeps do not get there.
struct JacobiResult {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // orthonormal columns, same order
  int sweeps;
};
JacobiResult jacobi_symmetric_eigen(Eigen::MatrixXd a, double off_tol = 1e-12,
                                    int max_sweeps = 100);

/// Diagonalizes the walk operator on the symmetrized similar matrix
/// S = D^{1/2} K D^{-1/2}, D = diag(pi); S shares K's eigenvalues and is
/// symmetric because the walk is reversible.
SpectralReport eigenvalues(const WalkKernel& k);

/// Dirichlet form E(phi, phi) = 1/2 sum_{x,y} (phi(x)-phi(y))^2 pi(x) K(x,y).
double dirichlet_form(const WalkKernel& k, const Eigen::VectorXd& phi);

/// Variance of phi under the stationary distribution.
double variance(const WalkKernel& k, const Eigen::VectorXd& phi);

/// 1 - E(phi,phi)/Var(phi): a lower bound on the second-largest eigenvalue
/// for any nonconstant phi, exact at the corresponding eigenfunction.
double rayleigh_lower_bound(const WalkKernel& k, const Eigen::VectorXd& phi);

/// Exact r-step total-variation distances from start, r = 1..r_max, next to
/// the spectral decay bound (1/2) beta_*^r sqrt((1-pi(x))/pi(x)).
struct TvBoundReport {
  int start = 0;
  Eigen::VectorXd tv;      // index r-1 holds step r
  Eigen::VectorXd bound;
  bool holds = false;      // tv <= bound + 1e-10 at every step
};
TvBoundReport tv_bound_check(const Graph& g, int start, int r_max);

}  // namespace routegap
