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

#include "lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fraccap/error.hpp"

namespace fraccap::internal {
namespace {

using Tableau =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kReducedCostTol = 1e-10;
constexpr double kPivotTol = 1e-11;
constexpr double kFeasibilityTol = 1e-9;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr int kDegenerateStreak = 50;

// Rows 0..m-1 are constraints, row m holds the reduced costs. The last column
// is the right-hand side; in the cost row it is the current objective value.
class Simplex {
 public:
  Simplex(Tableau t, std::vector<Eigen::Index> basis)
      : t_(std::move(t)), basis_(std::move(basis)) {}

  Tableau& tableau() { return t_; }
  std::vector<Eigen::Index>& basis() { return basis_; }
  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index rhs_col() const { return t_.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    t_.row(r) /= t_(r, c);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double factor = t_(i, c);
      if (factor != 0.0) t_.row(i) -= factor * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Sets the reduced-cost row for maximizing cost^T x.
  void price(const Eigen::VectorXd& cost) {
    const Eigen::Index m = rows();
    t_.row(m).setZero();
    t_.row(m).head(cost.size()) = -cost.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
      const Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      const double cb = b < cost.size() ? cost[b] : 0.0;
      if (cb != 0.0) t_.row(m) += cb * t_.row(i);
    }
  }

  // Runs primal simplex over columns [0, limit).
  LpStatus run(Eigen::Index limit, int& pivots_left) {
    const Eigen::Index m = rows();
    int degenerate = 0;
    while (true) {
      if (pivots_left-- <= 0) return LpStatus::kIterationLimit;
      const bool bland = degenerate >= kDegenerateStreak;
      Eigen::Index enter = -1;
      double best = -kReducedCostTol;
      for (Eigen::Index j = 0; j < limit; ++j) {
        const double rc = t_(m, j);
        if (rc < best) {
          enter = j;
          if (bland) break;
          best = rc;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      Eigen::Index leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotTol) continue;
        const double q = t_(i, rhs_col()) / a;
        if (q < ratio - 1e-15 ||
            (q <= ratio + 1e-15 && leave >= 0 &&
             basis_[static_cast<std::size_t>(i)] <
                 basis_[static_cast<std::size_t>(leave)])) {
          ratio = q;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      degenerate = ratio <= 1e-14 ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
  }

 private:
  Tableau t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, int max_pivots) {
  const Eigen::Index n = lp.objective.size();
  const Eigen::Index m_eq = lp.eq.rows();
  const Eigen::Index m_le = lp.le.rows();
  if ((m_eq > 0 && lp.eq.cols() != n) || (m_le > 0 && lp.le.cols() != n) ||
      lp.eq_rhs.size() != m_eq || lp.le_rhs.size() != m_le) {
    throw Error(ErrorCode::kDimensionMismatch, "inconsistent LP shapes");
  }
  const Eigen::Index m = m_eq + m_le;

  // Columns: [x (n) | slacks (m_le) | artificials (m) | rhs].
  const Eigen::Index art0 = n + m_le;
  const Eigen::Index cols = art0 + m + 1;
  Tableau t = Tableau::Zero(m + 1, cols);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  std::vector<bool> needs_artificial(static_cast<std::size_t>(m), true);

  for (Eigen::Index i = 0; i < m_eq; ++i) {
    const double sign = lp.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * lp.eq.row(i);
    t(i, cols - 1) = sign * lp.eq_rhs[i];
  }
  for (Eigen::Index k = 0; k < m_le; ++k) {
    const Eigen::Index i = m_eq + k;
    const double sign = lp.le_rhs[k] < 0.0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * lp.le.row(k);
    t(i, n + k) = sign;
    t(i, cols - 1) = sign * lp.le_rhs[k];
    if (sign > 0.0) {
      needs_artificial[static_cast<std::size_t>(i)] = false;
      basis[static_cast<std::size_t>(i)] = n + k;
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (needs_artificial[static_cast<std::size_t>(i)]) {
      t(i, art0 + i) = 1.0;
      basis[static_cast<std::size_t>(i)] = art0 + i;
    }
  }

  Simplex simplex(std::move(t), std::move(basis));
  int pivots_left = max_pivots;

  // Phase 1: maximize -sum(artificials).
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(art0 + m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (needs_artificial[static_cast<std::size_t>(i)]) phase1[art0 + i] = -1.0;
  }
  simplex.price(phase1);
  LpSolution out;
  LpStatus status = simplex.run(art0 + m, pivots_left);
  if (status == LpStatus::kIterationLimit) {
    out.status = status;
    return out;
  }
  auto& tab = simplex.tableau();
  // Phase-1 optimum equals -sum(artificials) and sits in the cost row's rhs.
  if (tab(m, cols - 1) < -kFeasibilityTol) {
    out.status = LpStatus::kInfeasible;
    return out;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  std::vector<Eigen::Index> keep_rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (simplex.basis()[static_cast<std::size_t>(i)] < art0) {
      keep_rows.push_back(i);
      continue;
    }
    Eigen::Index col = -1;
    double best = 1e-9;
    for (Eigen::Index j = 0; j < art0; ++j) {
      if (std::abs(tab(i, j)) > best) {
        best = std::abs(tab(i, j));
        col = j;
      }
    }
    if (col >= 0) {
      simplex.pivot(i, col);
      keep_rows.push_back(i);
    }
  }
  if (static_cast<Eigen::Index>(keep_rows.size()) != m) {
    Tableau reduced(static_cast<Eigen::Index>(keep_rows.size()) + 1, cols);
    std::vector<Eigen::Index> reduced_basis;
    for (std::size_t k = 0; k < keep_rows.size(); ++k) {
      reduced.row(static_cast<Eigen::Index>(k)) = tab.row(keep_rows[k]);
      reduced_basis.push_back(
          simplex.basis()[static_cast<std::size_t>(keep_rows[k])]);
    }
    reduced.row(reduced.rows() - 1).setZero();
    simplex = Simplex(std::move(reduced), std::move(reduced_basis));
  }

  // Phase 2 over original and slack columns only.
  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(art0);
  phase2.head(n) = lp.objective;
  simplex.price(phase2);
  status = simplex.run(art0, pivots_left);
  out.status = status;
  if (status != LpStatus::kOptimal) return out;

  auto& fin = simplex.tableau();
  out.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < simplex.rows(); ++i) {
    const Eigen::Index b = simplex.basis()[static_cast<std::size_t>(i)];
    if (b < n) out.x[b] = std::max(0.0, fin(i, fin.cols() - 1));
  }
  out.objective = lp.objective.dot(out.x);
  return out;
}

}  // namespace fraccap::internal
