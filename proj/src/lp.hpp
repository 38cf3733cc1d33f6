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

// Dense two-phase simplex method for small-row linear programs:
//
//   maximize  c^T x
//   s.t.      E x  = e
//             L x <= l
//             x >= 0
//
// Sized for a handful of rows and up to a few tens of thousands of columns.

#ifndef FRACCAP_SRC_LP_HPP_
#define FRACCAP_SRC_LP_HPP_

#include <Eigen/Dense>

namespace fraccap::internal {

struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd eq;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd le;
  Eigen::VectorXd le_rhs;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  Eigen::VectorXd x;
  double objective = 0.0;
};

LpSolution solve_lp(const LinearProgram& lp, int max_pivots = 200000);

}  // namespace fraccap::internal

#endif  // FRACCAP_SRC_LP_HPP_
