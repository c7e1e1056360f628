#include "routegap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace routegap {

WalkKernel kernel(const Graph& g) {
  const int n = g.vertex_count();
  WalkKernel k;
  k.matrix = Eigen::MatrixXd::Zero(n, n);
  k.stationary = Eigen::VectorXd::Zero(n);
  const double oriented = 2.0 * static_cast<double>(g.edge_count());
  for (int x = 0; x < n; ++x) {
    const double step = 1.0 / g.degree(x);
    for (int y : g.neighbors(x)) k.matrix(x, y) = step;
    k.stationary(x) = g.degree(x) / oriented;
  }
  return k;
}

JacobiResult jacobi_symmetric_eigen(Eigen::MatrixXd a, double off_tol, int max_sweeps) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  auto off_norm = [&a, n] {
    double s = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  while (off_norm() > off_tol) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("jacobi_symmetric_eigen: no convergence in " +
                               std::to_string(max_sweeps) + " sweeps");
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        // Entries this small cannot move the off-diagonal norm past the
        // tolerance; skipping them also keeps theta^2 finite below.
        if (std::abs(a(p, q)) < 1e-150) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotate rows/columns p and q of a, and columns p and q of v.
        for (Eigen::Index i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  JacobiResult result;
  result.values.resize(n);
  result.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    result.values(j) = a(order[j], order[j]);
    result.vectors.col(j) = v.col(order[j]);
  }
  result.sweeps = sweep;
  return result;
}

SpectralReport eigenvalues(const WalkKernel& k) {
  const Eigen::Index n = k.size();
  const Eigen::VectorXd sqrt_pi = k.stationary.cwiseSqrt();
  const Eigen::MatrixXd sym =
      sqrt_pi.asDiagonal() * k.matrix * sqrt_pi.cwiseInverse().asDiagonal();
  JacobiResult jacobi = jacobi_symmetric_eigen(sym);

  SpectralReport report;
  report.eigenvalues = std::move(jacobi.values);
  report.stationary = k.stationary;
  // Eigenvectors of the symmetrized matrix map back to eigenfunctions of the
  // walk operator via phi = D^{-1/2} v; orthonormality transfers to the
  // pi-weighted inner product.
  report.eigenfunctions.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    report.eigenfunctions.col(j) = jacobi.vectors.col(j).cwiseQuotient(sqrt_pi);
  return report;
}

double dirichlet_form(const WalkKernel& k, const Eigen::VectorXd& phi) {
  if (phi.size() != k.size())
    throw std::invalid_argument("dirichlet_form: dimension mismatch");
  double sum = 0.0;
  for (Eigen::Index x = 0; x < k.size(); ++x) {
    for (Eigen::Index y = 0; y < k.size(); ++y) {
      const double diff = phi(x) - phi(y);
      sum += diff * diff * k.stationary(x) * k.matrix(x, y);
    }
  }
  return 0.5 * sum;
}

double variance(const WalkKernel& k, const Eigen::VectorXd& phi) {
  if (phi.size() != k.size())
    throw std::invalid_argument("variance: dimension mismatch");
  const double mean = k.stationary.dot(phi);
  return (phi.array() - mean).square().matrix().dot(k.stationary);
}

double rayleigh_lower_bound(const WalkKernel& k, const Eigen::VectorXd& phi) {
  if (phi.size() != k.size())
    throw std::invalid_argument("rayleigh_lower_bound: dimension mismatch");
  if (phi.maxCoeff() == phi.minCoeff())
    throw std::invalid_argument("rayleigh_lower_bound: phi must be nonconstant");
  return 1.0 - dirichlet_form(k, phi) / variance(k, phi);
}

TvBoundReport tv_bound_check(const Graph& g, int start, int r_max) {
  if (start < 0 || start >= g.vertex_count())
    throw std::invalid_argument("tv_bound_check: start vertex out of range");
  if (r_max < 1) throw std::invalid_argument("tv_bound_check: r_max must be >= 1");
  const WalkKernel k = kernel(g);
  const SpectralReport spectrum = eigenvalues(k);
  const double beta_star = spectrum.beta_star();
  const double pi_x = k.stationary(start);
  const double mass_ratio = std::sqrt((1.0 - pi_x) / pi_x);

  TvBoundReport report;
  report.start = start;
  report.tv.resize(r_max);
  report.bound.resize(r_max);
  Eigen::VectorXd dist = Eigen::VectorXd::Zero(g.vertex_count());
  dist(start) = 1.0;
  double decay = 1.0;
  report.holds = true;
  for (int r = 1; r <= r_max; ++r) {
    dist = k.matrix.transpose() * dist;
    decay *= beta_star;
    report.tv(r - 1) = 0.5 * (dist - k.stationary).lpNorm<1>();
    report.bound(r - 1) = 0.5 * decay * mass_ratio;
    if (report.tv(r - 1) > report.bound(r - 1) + 1e-10) report.holds = false;
  }
  return report;
}

}  // namespace routegap
