#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "oracles.hpp"
#include "routegap/graph.hpp"
#include "routegap/rng.hpp"
#include "routegap/spectral.hpp"

using namespace routegap;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      a(i, j) = a(j, i) = 2.0 * rng.uniform() - 1.0;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("walk kernel is row-stochastic with the degree stationary law") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_connected_graph(8, 0.4, seed);
    const WalkKernel k = kernel(g);
    for (int x = 0; x < 8; ++x) {
      CHECK(k.matrix.row(x).sum() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(k.stationary(x) ==
            doctest::Approx(static_cast<double>(g.degree(x)) / (2.0 * g.edge_count()))
                .epsilon(1e-15));
      for (int y = 0; y < 8; ++y) {
        const double expected = g.has_edge(x, y) ? 1.0 / g.degree(x) : 0.0;
        CHECK(k.matrix(x, y) == expected);  // exact: 1/deg or 0
      }
    }
    CHECK(k.stationary.sum() == doctest::Approx(1.0).epsilon(1e-14));
    // stationarity: pi K = pi
    const Eigen::VectorXd piK = k.matrix.transpose() * k.stationary;
    CHECK((piK - k.stationary).lpNorm<Eigen::Infinity>() < 1e-14);
    // reversibility: pi(x) K(x,y) symmetric
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        CHECK(k.stationary(x) * k.matrix(x, y) ==
              doctest::Approx(k.stationary(y) * k.matrix(y, x)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("jacobi agrees with Eigen's solver on random symmetric matrices") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Eigen::MatrixXd a = random_symmetric(n, seed);
    const JacobiResult mine = jacobi_symmetric_eigen(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
    REQUIRE(ref.info() == Eigen::Success);
    Eigen::VectorXd expected = ref.eigenvalues().reverse();  // ascending -> descending
    for (int i = 0; i < n; ++i) {
      CHECK(mine.values(i) == doctest::Approx(expected(i)).epsilon(1e-10));
    }
    // vectors form an orthonormal eigenbasis of a
    CHECK((mine.vectors.transpose() * mine.vectors -
           Eigen::MatrixXd::Identity(n, n))
              .lpNorm<Eigen::Infinity>() < 1e-10);
    CHECK((a * mine.vectors - mine.vectors * mine.values.asDiagonal())
              .lpNorm<Eigen::Infinity>() < 1e-9);
    CHECK(mine.sweeps <= 100);
  }
}

TEST_CASE("walk spectra match closed forms") {
  SUBCASE("complete graphs") {
    for (int n = 2; n <= 20; ++n) {
      const SpectralReport sp = eigenvalues(kernel(complete_graph(n)));
      const auto expected = oracle::complete_walk_spectrum(n);
      REQUIRE(sp.eigenvalues.size() == n);
      for (int i = 0; i < n; ++i) {
        CHECK(sp.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-11));
      }
    }
  }
  SUBCASE("cycles: cos(2 pi k / n)") {
    for (int n = 3; n <= 12; ++n) {
      const SpectralReport sp = eigenvalues(kernel(cycle_graph(n)));
      const auto expected = oracle::cycle_walk_spectrum(n);
      for (int i = 0; i < n; ++i) {
        CHECK(sp.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-10));
      }
    }
  }
  SUBCASE("paths: cos(pi k / (n-1))") {
    for (int n = 2; n <= 12; ++n) {
      const SpectralReport sp = eigenvalues(kernel(path_graph(n)));
      const auto expected = oracle::path_walk_spectrum(n);
      for (int i = 0; i < n; ++i) {
        CHECK(sp.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("eigenfunctions are pi-orthonormal eigenvectors of the kernel") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = random_connected_graph(7, 0.5, seed);
    const WalkKernel k = kernel(g);
    const SpectralReport sp = eigenvalues(k);
    const int n = 7;
    REQUIRE(sp.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd phi = sp.eigenfunctions.col(i);
      // K phi = beta_i phi
      CHECK((k.matrix * phi - sp.eigenvalues(i) * phi).lpNorm<Eigen::Infinity>() <
            1e-9);
      for (int j = 0; j < n; ++j) {
        const double inner =
            (phi.array() * sp.eigenfunctions.col(j).array() * k.stationary.array())
                .sum();
        CHECK(inner == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
      }
    }
    // descending order
    for (int i = 0; i + 1 < n; ++i) CHECK(sp.eigenvalues(i) >= sp.eigenvalues(i + 1));
  }
}

TEST_CASE("dirichlet form, variance, and the rayleigh quotient") {
  const Graph g = random_connected_graph(8, 0.45, 4);
  const WalkKernel k = kernel(g);
  const SpectralReport sp = eigenvalues(k);
  const double beta1 = sp.beta1();

  // exact at the second eigenfunction
  const Eigen::VectorXd phi1 = sp.eigenfunctions.col(1);
  CHECK(rayleigh_lower_bound(k, phi1) == doctest::Approx(beta1).epsilon(1e-10));
  CHECK(dirichlet_form(k, phi1) == doctest::Approx(1.0 - beta1).epsilon(1e-10));
  CHECK(variance(k, phi1) == doctest::Approx(1.0).epsilon(1e-10));

  // a genuine lower bound for any nonconstant test function
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd phi(8);
    for (int i = 0; i < 8; ++i) phi(i) = rng.uniform();
    CHECK(rayleigh_lower_bound(k, phi) <= beta1 + 1e-12);
  }

  // constant functions have no variance to normalize by
  CHECK_THROWS_AS(rayleigh_lower_bound(k, Eigen::VectorXd::Ones(8)),
                  std::invalid_argument);
}

TEST_CASE("tv decay bound on hand-checkable chains") {
  SUBCASE("K_2 alternates and the bound is met with equality") {
    const TvBoundReport rep = tv_bound_check(complete_graph(2), 0, 6);
    CHECK(rep.holds);
    for (int r = 0; r < 6; ++r) {
      CHECK(rep.tv(r) == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(rep.bound(r) == doctest::Approx(0.5).epsilon(1e-14));
    }
  }

  SUBCASE("K_3 mixes at rate 1/2") {
    const TvBoundReport rep = tv_bound_check(complete_graph(3), 0, 20);
    CHECK(rep.holds);
    // exact: from vertex 0, TV after r steps is |(-1/2)^r| * (1 - 1/3)... the
    // chain is a doubly stochastic 3-state walk; just pin the decay rate
    for (int r = 1; r < 20; ++r) {
      CHECK(rep.tv(r) == doctest::Approx(rep.tv(r - 1) * 0.5).epsilon(1e-9));
    }
    CHECK(rep.bound(0) == doctest::Approx(0.5 * 0.5 * std::sqrt(2.0)).epsilon(1e-12));
  }

  SUBCASE("holds across random graphs") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Graph g = random_connected_graph(2 + seed % 7, 0.5, seed);
      CHECK(tv_bound_check(g, 0, 30).holds);
    }
  }
}
