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

#include "hull.hpp"

#include <algorithm>
#include <cmath>

#include "fraccap/error.hpp"

namespace fraccap::internal {
namespace {

constexpr int kMaxMajorIterations = 1000;
constexpr double kWeightTol = 1e-14;
// Bound on |x|^2 - min_j <x, q_j>, near double rounding of the products.
constexpr double kGapTol = 1e-13;

// Minimum-norm point of the affine hull of the columns of q (weights sum to
// one).
Eigen::VectorXd affine_min_norm(const Eigen::MatrixXd& q) {
  const Eigen::Index k = q.cols();
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  kkt.topLeftCorner(k, k) = q.transpose() * q;
  kkt.block(0, k, k, 1).setOnes();
  kkt.block(k, 0, 1, k).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs[k] = 1.0;
  const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(k);
}

}  // namespace

HullProjection project_onto_hull(const std::vector<Eigen::VectorXd>& points,
                                 const Eigen::VectorXd& target, double tol) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "hull of an empty point set");
  }
  const std::size_t n = points.size();
  std::vector<Eigen::VectorXd> q(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = points[i] - target;
    scale = std::max(scale, q[i].squaredNorm());
  }

  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (q[i].squaredNorm() < q[first].squaredNorm()) first = i;
  }
  std::vector<std::size_t> active{first};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = q[first];

  const auto active_matrix = [&]() {
    Eigen::MatrixXd m(x.size(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k) {
      m.col(static_cast<Eigen::Index>(k)) = q[active[k]];
    }
    return m;
  };

  bool converged = false;
  for (int major = 0; major < kMaxMajorIterations; ++major) {
    std::size_t j = 0;
    double best = x.dot(q[0]);
    for (std::size_t i = 1; i < n; ++i) {
      const double v = x.dot(q[i]);
      if (v < best) {
        best = v;
        j = i;
      }
    }
    // Optimality: the target is inside the hull, or every point lies on the
    // far side of the supporting plane through x.
    if (x.norm() <= tol ||
        x.squaredNorm() - best <= kGapTol * std::max(1.0, scale) ||
        std::find(active.begin(), active.end(), j) != active.end()) {
      converged = true;
      break;
    }
    active.push_back(j);
    lambda.push_back(0.0);

    for (std::size_t minor = 0; minor <= n + 1; ++minor) {
      const Eigen::VectorXd alpha = affine_min_norm(active_matrix());
      if (alpha.minCoeff() > kWeightTol) {
        lambda.assign(alpha.data(), alpha.data() + alpha.size());
        break;
      }
      double theta = 1.0;
      for (std::size_t k = 0; k < active.size(); ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        if (alpha[kk] <= kWeightTol) {
          const double denom = lambda[k] - alpha[kk];
          if (denom > 0.0) theta = std::min(theta, lambda[k] / denom);
        }
      }
      std::vector<std::size_t> next_active;
      std::vector<double> next_lambda;
      for (std::size_t k = 0; k < active.size(); ++k) {
        const double w =
            (1.0 - theta) * lambda[k] + theta * alpha[static_cast<Eigen::Index>(k)];
        if (w > kWeightTol) {
          next_active.push_back(active[k]);
          next_lambda.push_back(w);
        }
      }
      if (next_active.empty()) {
        // Numerical breakdown; fall back to the newest point.
        next_active.push_back(j);
        next_lambda.push_back(1.0);
      }
      double total = 0.0;
      for (double w : next_lambda) total += w;
      for (double& w : next_lambda) w /= total;
      active = std::move(next_active);
      lambda = std::move(next_lambda);
    }
    x.setZero();
    for (std::size_t k = 0; k < active.size(); ++k) x += lambda[k] * q[active[k]];
  }
  if (!converged) {
    throw ConvergenceError("hull projection did not converge", 0.0, x.norm());
  }

  HullProjection out;
  out.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < active.size(); ++k) {
    out.weights[static_cast<Eigen::Index>(active[k])] = lambda[k];
  }
  out.point = x + target;
  out.distance = x.norm();
  return out;
}

Eigen::Vector3d project_onto_ball(const Eigen::Vector3d& y) {
  const double norm = y.norm();
  return norm <= 1.0 ? y : Eigen::Vector3d(y / norm);
}

Eigen::Vector3d project_onto_cap_hull(const Eigen::Vector3d& y,
                                      const Eigen::Vector3d& u, double c) {
  const double height = u.dot(y);
  const Eigen::Vector3d to_ball = project_onto_ball(y);
  if (u.dot(to_ball) >= c) return to_ball;
  const Eigen::Vector3d to_plane = y + (c - height) * u;
  if (to_plane.squaredNorm() <= 1.0) return to_plane;
  // The nearest point lies on the boundary circle of the cap.
  Eigen::Vector3d tangent = y - height * u;
  if (tangent.norm() <= 1e-300) {
    tangent = u.unitOrthogonal();
  }
  tangent.normalize();
  const double radius = std::sqrt(std::max(0.0, 1.0 - c * c));
  return c * u + radius * tangent;
}

}  // namespace fraccap::internal
