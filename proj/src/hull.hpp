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

// Euclidean projections onto the convex bodies that appear as hulls of
// extreme-point sets of the Bloch ball.

#ifndef FRACCAP_SRC_HULL_HPP_
#define FRACCAP_SRC_HULL_HPP_

#include <vector>

#include <Eigen/Dense>

namespace fraccap::internal {

struct HullProjection {
  Eigen::VectorXd point;
  Eigen::VectorXd weights;  // convex weights over the input points
  double distance = 0.0;
};

// Nearest point of conv(points) to `target` (Wolfe's minimum-norm-point
// algorithm on the translated points). Throws ConvergenceError if the
// iteration cap is reached.
HullProjection project_onto_hull(const std::vector<Eigen::VectorXd>& points,
                                 const Eigen::VectorXd& target,
                                 double tol = 1e-10);

// Nearest point of the unit ball.
Eigen::Vector3d project_onto_ball(const Eigen::Vector3d& y);

// Nearest point of {x : |x| <= 1, <u, x> >= c}, the hull of a spherical cap.
// Requires |u| = 1 and c <= 1.
Eigen::Vector3d project_onto_cap_hull(const Eigen::Vector3d& y,
                                      const Eigen::Vector3d& u, double c);

}  // namespace fraccap::internal

#endif  // FRACCAP_SRC_HULL_HPP_
