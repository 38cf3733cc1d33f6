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

#include "fraccap/variable.hpp"

#include <cmath>

#include "fraccap/error.hpp"
#include "overloaded.hpp"

namespace fraccap {
namespace {

using internal::Overloaded;

// Hermitian to this absolute tolerance.
constexpr double kHermitianTol = 1e-12;
// A Bloch gradient shorter than this is treated as zero.
constexpr double kDegenerateGradient = 1e-300;

EnsembleSpace space_of(const StatisticalVariable::Form& form) {
  return std::visit(
      Overloaded{
          [](const SimplexValues& f) -> EnsembleSpace {
            return SimplexSpace{static_cast<std::size_t>(f.values.size())};
          },
          [](const BlochAffine&) -> EnsembleSpace { return BlochBallSpace{}; },
          [](const Observable& o) -> EnsembleSpace {
            return DensityMatrixSpace{static_cast<std::size_t>(o.matrix.rows())};
          },
      },
      form);
}

}  // namespace

StatisticalVariable::StatisticalVariable(Form form)
    : space_(space_of(form)), form_(std::move(form)) {
  if (const auto* f = std::get_if<SimplexValues>(&form_)) {
    if (f->values.size() == 0 || !f->values.allFinite()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "simplex variable needs finite values");
    }
  } else if (const auto* g = std::get_if<BlochAffine>(&form_)) {
    if (!g->gradient.allFinite() || !std::isfinite(g->offset)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite Bloch variable");
    }
  } else {
    const auto& o = std::get<Observable>(form_).matrix;
    if (o.rows() == 0 || o.rows() != o.cols()) {
      throw Error(ErrorCode::kInvalidArgument, "observable must be square");
    }
    if ((o - o.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
      throw Error(ErrorCode::kInvalidArgument, "observable is not Hermitian");
    }
  }
}

StatisticalVariable StatisticalVariable::simplex(const Eigen::VectorXd& values) {
  return StatisticalVariable(SimplexValues{values});
}

StatisticalVariable StatisticalVariable::bloch(const Eigen::Vector3d& gradient,
                                               double offset) {
  return StatisticalVariable(BlochAffine{gradient, offset});
}

StatisticalVariable StatisticalVariable::observable(
    const Eigen::MatrixXcd& matrix) {
  return StatisticalVariable(Observable{matrix});
}

StatisticalVariable StatisticalVariable::bloch_with_range(
    double a, double b, const Eigen::Vector3d& top) {
  if (!(a <= b)) {
    throw Error(ErrorCode::kInvalidArgument, "range needs a <= b");
  }
  const double norm = top.norm();
  if (std::abs(norm - 1.0) > kExtremeTol) {
    throw Error(ErrorCode::kInvalidArgument, "direction must be a unit vector");
  }
  return bloch(0.5 * (b - a) * top, 0.5 * (a + b));
}

double evaluate(const StatisticalVariable& f, const Ensemble& e) {
  if (!(f.space() == e.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "variable on " + describe(f.space()) +
                                               " evaluated on " +
                                               describe(e.space()));
  }
  return std::visit(
      Overloaded{
          [&](const SimplexValues& v) {
            return v.values.dot(e.probabilities());
          },
          [&](const BlochAffine& g) {
            return g.gradient.dot(e.bloch_vector()) + g.offset;
          },
          [&](const Observable& o) {
            return (o.matrix * e.density_matrix()).trace().real();
          },
      },
      f.form());
}

VariableRange range_over_extremes(const StatisticalVariable& f) {
  return std::visit(
      Overloaded{
          [&](const SimplexValues& v) {
            const auto n = v.values.size();
            Eigen::Index lo = 0;
            Eigen::Index hi = 0;
            const double a = v.values.minCoeff(&lo);
            const double b = v.values.maxCoeff(&hi);
            return VariableRange{a,
                                 b,
                                 Ensemble::simplex(Eigen::VectorXd::Unit(n, lo)),
                                 Ensemble::simplex(Eigen::VectorXd::Unit(n, hi)),
                                 a == b};
          },
          [&](const BlochAffine& g) {
            const double norm = g.gradient.norm();
            if (norm <= kDegenerateGradient) {
              const Eigen::Vector3d pole = Eigen::Vector3d::UnitZ();
              return VariableRange{g.offset, g.offset, Ensemble::bloch(-pole),
                                   Ensemble::bloch(pole), true};
            }
            const Eigen::Vector3d u = g.gradient / norm;
            return VariableRange{g.offset - norm, g.offset + norm,
                                 Ensemble::bloch(-u), Ensemble::bloch(u),
                                 false};
          },
          [&](const Observable& o) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(o.matrix);
            const auto n = o.matrix.rows();
            const double a = eig.eigenvalues()[0];
            const double b = eig.eigenvalues()[n - 1];
            return VariableRange{
                a, b, Ensemble::density(projector(eig.eigenvectors().col(0))),
                Ensemble::density(projector(eig.eigenvectors().col(n - 1))),
                b - a <= kHermitianTol};
          },
      },
      f.form());
}

StatisticalVariable affine_transform(const StatisticalVariable& f, double scale,
                                     double shift) {
  return std::visit(
      Overloaded{
          [&](const SimplexValues& v) {
            return StatisticalVariable::simplex(
                (scale * v.values.array() + shift).matrix());
          },
          [&](const BlochAffine& g) {
            return StatisticalVariable::bloch(scale * g.gradient,
                                              scale * g.offset + shift);
          },
          [&](const Observable& o) {
            const auto n = o.matrix.rows();
            return StatisticalVariable::observable(
                scale * o.matrix + shift * Eigen::MatrixXcd::Identity(n, n));
          },
      },
      f.form());
}

StatisticalVariable bloch_to_observable(const StatisticalVariable& f) {
  const auto* g = std::get_if<BlochAffine>(&f.form());
  if (g == nullptr) {
    throw Error(ErrorCode::kSpaceMismatch, "expected a Bloch-ball variable");
  }
  Eigen::MatrixXcd o = g->offset * Eigen::MatrixXcd::Identity(2, 2);
  for (int i = 0; i < 3; ++i) o += g->gradient[i] * pauli(i);
  return StatisticalVariable::observable(o);
}

}  // namespace fraccap
