// Copyright 2026 The fraccap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random instances and small independent oracles shared by the tests.

#ifndef FRACCAP_TESTS_TEST_UTIL_HPP_
#define FRACCAP_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>

#include <Eigen/Dense>

#include "fraccap/ensemble.hpp"

namespace fraccap::testing {

using Rng = std::mt19937_64;

inline Eigen::VectorXd random_probability(std::size_t n, Rng& rng) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  Eigen::VectorXd q(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < q.size(); ++i) q[i] = gamma(rng);
  return q / q.sum();
}

inline Eigen::Vector3d random_unit(Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
  while (v.norm() < 1e-6) v = Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
  return v.normalized();
}

// Uniform in the ball of the given radius.
inline Eigen::Vector3d random_ball(Rng& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return random_unit(rng) * radius * std::cbrt(unit(rng));
}

inline Eigen::VectorXcd random_state(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] = std::complex<double>(normal(rng), normal(rng));
  }
  return v.normalized();
}

inline Eigen::MatrixXcd random_hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd h(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      h(i, j) = std::complex<double>(normal(rng), normal(rng));
    }
  }
  return 0.5 * (h + h.adjoint());
}

// Random density matrix with eigenvalues bounded away from zero.
inline Eigen::MatrixXcd random_density(std::size_t n, Rng& rng,
                                       double floor = 0.1) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd g = random_hermitian(n, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (1.0 - floor) * rho +
        floor * Eigen::MatrixXcd::Identity(m, m) / static_cast<double>(n);
  return 0.5 * (rho + rho.adjoint());
}

inline Ensemble vertex(std::size_t n, std::size_t i) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  e[static_cast<Eigen::Index>(i)] = 1.0;
  return Ensemble::simplex(e);
}

inline double min_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (m + m.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return eig.eigenvalues()[0];
}

}  // namespace fraccap::testing

#endif  // FRACCAP_TESTS_TEST_UTIL_HPP_
