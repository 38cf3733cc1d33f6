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

#include "feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fraccap/error.hpp"
#include "lp.hpp"

namespace fraccap::internal {
namespace {

using HermitianEigen = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;

constexpr int kKelleyIterationCap = 500;
// lambda_min(rho - p a) >= -kEigenSlack counts as positive semidefinite.
constexpr double kEigenSlack = 1e-13;
constexpr int kGoldenIterations = 200;
constexpr double kRankTol = 1e-14;

double quadratic_form(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v) {
  return v.dot(m * v).real();
}

}  // namespace

Eigen::VectorXd hermitian_coordinates(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd out(n * n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) out[k++] = m(i, i).real();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out[k++] = m(i, j).real();
      out[k++] = m(i, j).imag();
    }
  }
  return out;
}

Eigen::MatrixXcd nearest_density(const Eigen::MatrixXcd& m) {
  HermitianEigen eig(0.5 * (m + m.adjoint()));
  Eigen::VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
  const double total = lambda.sum();
  if (total <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix has no positive part");
  }
  lambda /= total;
  Eigen::MatrixXcd out = eig.eigenvectors() * lambda.asDiagonal() *
                         eig.eigenvectors().adjoint();
  return 0.5 * (out + out.adjoint());
}

FiniteHullFeasibility::FiniteHullFeasibility(
    Eigen::MatrixXcd rho, std::vector<Eigen::MatrixXcd> members)
    : rho_(std::move(rho)), members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty member list");
  }
  HermitianEigen eig(rho_);
  for (Eigen::Index j = 0; j < rho_.rows(); ++j) {
    add_cut(eig.eigenvectors().col(j));
  }
  for (const auto& a : members_) {
    HermitianEigen ea(a);
    add_cut(ea.eigenvectors().col(a.rows() - 1));
  }
}

void FiniteHullFeasibility::add_cut(const Eigen::VectorXcd& v) {
  const Eigen::VectorXcd unit = v.normalized();
  cut_rho_.push_back(quadratic_form(rho_, unit));
  Eigen::VectorXd row(static_cast<Eigen::Index>(members_.size()));
  for (std::size_t i = 0; i < members_.size(); ++i) {
    row[static_cast<Eigen::Index>(i)] = quadratic_form(members_[i], unit);
  }
  cut_members_.push_back(std::move(row));
}

Eigen::MatrixXcd FiniteHullFeasibility::mixture(
    const Eigen::VectorXd& weights) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho_.rows(), rho_.cols());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out += weights[static_cast<Eigen::Index>(i)] * members_[i];
  }
  return out;
}

std::optional<Eigen::VectorXd> FiniteHullFeasibility::feasible(double p) {
  const auto k = static_cast<Eigen::Index>(members_.size());
  if (k == 1) {
    const Eigen::VectorXd w = Eigen::VectorXd::Ones(1);
    HermitianEigen eig(rho_ - p * members_[0], Eigen::EigenvaluesOnly);
    if (eig.eigenvalues()[0] >= -kEigenSlack) return w;
    return std::nullopt;
  }

  double lower = -1.0;
  double upper = 1.0;
  for (int iter = 0; iter < kKelleyIterationCap; ++iter) {
    // Variables (w_1..w_k, tau) with tau = t + 1 >= 0 bounding the eigenvalue.
    const auto cuts = static_cast<Eigen::Index>(cut_rho_.size());
    LinearProgram lp;
    lp.objective = Eigen::VectorXd::Zero(k + 1);
    lp.objective[k] = 1.0;
    lp.eq = Eigen::MatrixXd::Zero(1, k + 1);
    lp.eq.row(0).head(k).setOnes();
    lp.eq_rhs = Eigen::VectorXd::Ones(1);
    lp.le = Eigen::MatrixXd::Zero(cuts, k + 1);
    lp.le_rhs = Eigen::VectorXd(cuts);
    for (Eigen::Index j = 0; j < cuts; ++j) {
      lp.le.row(j).head(k) = p * cut_members_[static_cast<std::size_t>(j)];
      lp.le(j, k) = 1.0;
      lp.le_rhs[j] = cut_rho_[static_cast<std::size_t>(j)] + 1.0;
    }
    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::kOptimal) {
      throw ConvergenceError("cutting-plane LP failed", lower, upper);
    }
    Eigen::VectorXd w = sol.x.head(k).cwiseMax(0.0);
    w /= w.sum();
    upper = std::min(upper, sol.x[k] - 1.0);

    HermitianEigen eig(rho_ - p * mixture(w));
    const double lambda_min = eig.eigenvalues()[0];
    lower = std::max(lower, lambda_min);
    if (lambda_min >= -kEigenSlack) return w;
    if (upper < -kEigenSlack) return std::nullopt;
    if (upper - lambda_min <= kEigenSlack) {
      return std::nullopt;  // both bounds within slack below zero
    }
    add_cut(eig.eigenvectors().col(0));
  }
  throw ConvergenceError("cutting-plane feasibility did not converge", lower,
                         upper);
}

bool FiniteHullFeasibility::contains_reference() const {
  const auto k = static_cast<Eigen::Index>(members_.size());
  const Eigen::VectorXd target = hermitian_coordinates(rho_);
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(k);
  lp.eq = Eigen::MatrixXd(target.size(), k);
  for (Eigen::Index i = 0; i < k; ++i) {
    lp.eq.col(i) = hermitian_coordinates(members_[static_cast<std::size_t>(i)]);
  }
  lp.eq_rhs = target;
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return false;
  return (mixture(sol.x) - rho_).norm() <= 1e-10;
}

LevelHullFeasibility::LevelHullFeasibility(const Eigen::MatrixXcd& rho,
                                           Eigen::MatrixXcd observable,
                                           double threshold)
    : observable_(std::move(observable)), threshold_(threshold) {
  HermitianEigen eig(rho);
  const Eigen::Index n = rho.rows();
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (eig.eigenvalues()[j] > kRankTol) support.push_back(j);
  }
  factor_ = Eigen::MatrixXcd(n, static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) {
    const Eigen::Index j = support[k];
    factor_.col(static_cast<Eigen::Index>(k)) =
        eig.eigenvectors().col(j) * std::sqrt(eig.eigenvalues()[j]);
  }
  HermitianEigen eo(observable_, Eigen::EigenvaluesOnly);
  obs_min_ = eo.eigenvalues()[0];
  obs_max_ = eo.eigenvalues()[n - 1];
}

double LevelHullFeasibility::max_level_mass(double p, double* nu_star) const {
  const Eigen::MatrixXcd sandwich = factor_.adjoint() * observable_ * factor_;
  const Eigen::MatrixXcd gram = factor_.adjoint() * factor_;
  const auto dual = [&](double nu) {
    HermitianEigen eig(sandwich - nu * gram, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseMax(0.0).sum() + nu * p;
  };
  // The dual is convex; its minimizer lies in [min O, max O].
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = obs_min_;
  double hi = obs_max_;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = dual(x1);
  double f2 = dual(x2);
  for (int i = 0; i < kGoldenIterations && hi - lo > 1e-15 * (1.0 + std::abs(hi));
       ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = dual(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = dual(x2);
    }
  }
  const double best_nu = f1 <= f2 ? x1 : x2;
  double best = std::min(f1, f2);
  best = std::min({best, dual(obs_min_), dual(obs_max_)});
  if (nu_star != nullptr) *nu_star = best_nu;
  return best;
}

std::optional<Eigen::MatrixXcd> LevelHullFeasibility::feasible(double p) const {
  double nu = 0.0;
  const double mass = max_level_mass(p, &nu);
  if (mass < p * threshold_ - kEigenSlack) return std::nullopt;

  // Primal point: X = L Y L^H with Y diagonal in the eigenbasis of the dual
  // matrix at nu, filled greedily (fractional knapsack on Tr(O X) per unit
  // of trace).
  const Eigen::MatrixXcd sandwich = factor_.adjoint() * observable_ * factor_;
  const Eigen::MatrixXcd gram = factor_.adjoint() * factor_;
  HermitianEigen eig(sandwich - nu * gram);
  const Eigen::Index r = gram.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  Eigen::VectorXd gain(r);
  Eigen::VectorXd cost(r);
  for (Eigen::Index j = 0; j < r; ++j) {
    const Eigen::VectorXcd e = eig.eigenvectors().col(j);
    gain[j] = quadratic_form(sandwich, e);
    cost[j] = quadratic_form(gram, e);
  }
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return gain[i] * cost[j] > gain[j] * cost[i];
  });
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(r, r);
  double remaining = p;
  for (Eigen::Index j : order) {
    if (remaining <= 0.0) break;
    if (cost[j] <= 0.0) continue;
    const double take = std::min(1.0, remaining / cost[j]);
    const Eigen::VectorXcd e = eig.eigenvectors().col(j);
    y += take * e * e.adjoint();
    remaining -= take * cost[j];
  }
  Eigen::MatrixXcd a = factor_ * y * factor_.adjoint() / p;
  a = 0.5 * (a + a.adjoint());
  return a / a.trace().real();
}

}  // namespace fraccap::internal
