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

// Inner feasibility tests for the capacity bisection on density matrices:
// given p, is there an a in hull(A) with rho - p a >= 0?

#ifndef FRACCAP_SRC_FEASIBILITY_HPP_
#define FRACCAP_SRC_FEASIBILITY_HPP_

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace fraccap::internal {

// Real coordinates of a Hermitian matrix: the diagonal, then real and
// imaginary parts of the strict upper triangle (n^2 values).
Eigen::VectorXd hermitian_coordinates(const Eigen::MatrixXcd& m);

// Maps a Hermitian matrix of trace ~1 back onto the density matrices by
// clipping negative eigenvalues and renormalizing the trace.
Eigen::MatrixXcd nearest_density(const Eigen::MatrixXcd& m);

// A = finite set of rank-one projectors. Maximizes the concave function
// w -> lambda_min(rho - p sum_i w_i a_i) over the probability simplex of hull
// weights with Kelley's cutting-plane method; each cut is the minimal
// eigenvector at the current weights, so the LP value is an upper bound and
// the eigenvalue at the LP weights a lower bound. Cuts are kept across calls
// (they do not depend on p).
class FiniteHullFeasibility {
 public:
  FiniteHullFeasibility(Eigen::MatrixXcd rho, std::vector<Eigen::MatrixXcd> members);

  // Returns hull weights certifying feasibility, or nullopt if infeasible.
  // Throws ConvergenceError if undecided after the iteration cap.
  std::optional<Eigen::VectorXd> feasible(double p);

  // Whether rho itself is a convex combination of the members.
  bool contains_reference() const;

  Eigen::MatrixXcd mixture(const Eigen::VectorXd& weights) const;

 private:
  void add_cut(const Eigen::VectorXcd& v);

  Eigen::MatrixXcd rho_;
  std::vector<Eigen::MatrixXcd> members_;
  std::vector<double> cut_rho_;                 // <v|rho|v>
  std::vector<Eigen::VectorXd> cut_members_;    // <v|a_i|v>
};

// A = {x pure : Tr(O x) >= s}, whose hull is {sigma : Tr(O sigma) >= s}.
// Feasible iff max { Tr(O X) : 0 <= X <= rho, tr X = p } >= p s; the maximum
// is computed through its one-dimensional convex dual
//   min_nu  sum_j max(0, eig_j(L^H (O - nu) L)) + nu p,   rho = L L^H.
class LevelHullFeasibility {
 public:
  LevelHullFeasibility(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd observable,
                       double threshold);

  // Returns a point a of the hull with p a <= rho, or nullopt.
  std::optional<Eigen::MatrixXcd> feasible(double p) const;

  // Largest Tr(O X) over 0 <= X <= rho with tr X = p.
  double max_level_mass(double p, double* nu_star = nullptr) const;

 private:
  Eigen::MatrixXcd factor_;  // L, n x rank
  Eigen::MatrixXcd observable_;
  double threshold_;
  double obs_min_;
  double obs_max_;
};

}  // namespace fraccap::internal

#endif  // FRACCAP_SRC_FEASIBILITY_HPP_
