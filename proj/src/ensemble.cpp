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

#include "fraccap/ensemble.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fraccap/error.hpp"
#include "overloaded.hpp"

namespace fraccap {
namespace {

using internal::Overloaded;

const Eigen::VectorXd& require_vector(const Payload& payload,
                                      std::size_t size,
                                      const EnsembleSpace& space) {
  const auto* v = std::get_if<Eigen::VectorXd>(&payload);
  if (v == nullptr || static_cast<std::size_t>(v->size()) != size) {
    throw Error(ErrorCode::kDimensionMismatch,
                "payload does not match " + describe(space));
  }
  return *v;
}

const Eigen::MatrixXcd& require_matrix(const Payload& payload, std::size_t n,
                                       const EnsembleSpace& space) {
  const auto* m = std::get_if<Eigen::MatrixXcd>(&payload);
  if (m == nullptr || static_cast<std::size_t>(m->rows()) != n ||
      static_cast<std::size_t>(m->cols()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "payload does not match " + describe(space));
  }
  return *m;
}

bool is_density_matrix(const Eigen::MatrixXcd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kMembershipTol) {
    return false;
  }
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > kMembershipTol) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
      rho, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -kMembershipTol;
}

}  // namespace

std::string describe(const EnsembleSpace& space) {
  return std::visit(
      Overloaded{
          [](const SimplexSpace& s) {
            return "SimplexSpace(" + std::to_string(s.n) + ")";
          },
          [](const BlochBallSpace&) { return std::string("BlochBallSpace"); },
          [](const DensityMatrixSpace& s) {
            return "DensityMatrixSpace(" + std::to_string(s.n) + ")";
          },
      },
      space);
}

std::size_t ambient_dimension(const EnsembleSpace& space) {
  return std::visit(Overloaded{
                        [](const SimplexSpace& s) { return s.n; },
                        [](const BlochBallSpace&) { return std::size_t{3}; },
                        [](const DensityMatrixSpace& s) { return s.n * s.n; },
                    },
                    space);
}

bool contains(const EnsembleSpace& space, const Payload& payload) {
  return std::visit(
      Overloaded{
          [&](const SimplexSpace& s) {
            const auto& q = require_vector(payload, s.n, space);
            return q.minCoeff() >= -kMembershipTol &&
                   std::abs(q.sum() - 1.0) <= kMembershipTol;
          },
          [&](const BlochBallSpace&) {
            const auto& r = require_vector(payload, 3, space);
            return r.norm() <= 1.0 + kMembershipTol;
          },
          [&](const DensityMatrixSpace& s) {
            return is_density_matrix(require_matrix(payload, s.n, space));
          },
      },
      space);
}

Ensemble::Ensemble(EnsembleSpace space, Payload payload)
    : space_(space), payload_(std::move(payload)) {
  if (const auto* s = std::get_if<SimplexSpace>(&space_); s && s->n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "simplex needs n >= 1");
  }
  if (const auto* s = std::get_if<DensityMatrixSpace>(&space_); s && s->n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "density matrices need n >= 1");
  }
  if (!contains(space_, payload_)) {
    throw Error(ErrorCode::kNotInSpace, "point is not in " + describe(space_));
  }
}

Ensemble Ensemble::simplex(const Eigen::VectorXd& q) {
  return Ensemble(SimplexSpace{static_cast<std::size_t>(q.size())}, q);
}

Ensemble Ensemble::bloch(const Eigen::Vector3d& r) {
  return Ensemble(BlochBallSpace{}, Eigen::VectorXd(r));
}

Ensemble Ensemble::density(const Eigen::MatrixXcd& rho) {
  return Ensemble(DensityMatrixSpace{static_cast<std::size_t>(rho.rows())},
                  rho);
}

const Eigen::VectorXd& Ensemble::probabilities() const {
  if (!std::holds_alternative<SimplexSpace>(space_)) {
    throw Error(ErrorCode::kSpaceMismatch, "not a simplex point");
  }
  return std::get<Eigen::VectorXd>(payload_);
}

Eigen::Vector3d Ensemble::bloch_vector() const {
  if (!std::holds_alternative<BlochBallSpace>(space_)) {
    throw Error(ErrorCode::kSpaceMismatch, "not a Bloch-ball point");
  }
  return std::get<Eigen::VectorXd>(payload_);
}

const Eigen::MatrixXcd& Ensemble::density_matrix() const {
  if (!std::holds_alternative<DensityMatrixSpace>(space_)) {
    throw Error(ErrorCode::kSpaceMismatch, "not a density matrix");
  }
  return std::get<Eigen::MatrixXcd>(payload_);
}

bool extreme_point_check(const Ensemble& point) {
  return std::visit(
      Overloaded{
          [&](const SimplexSpace&) {
            const auto& q = point.probabilities();
            Eigen::Index top = 0;
            q.maxCoeff(&top);
            return std::abs(q[top] - 1.0) <= kExtremeTol;
          },
          [&](const BlochBallSpace&) {
            return std::abs(point.bloch_vector().norm() - 1.0) <= kExtremeTol;
          },
          [&](const DensityMatrixSpace& s) {
            if (s.n == 1) return true;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
                point.density_matrix(), Eigen::EigenvaluesOnly);
            // Ascending order; rank one iff all but the largest vanish.
            return std::abs(eig.eigenvalues()[s.n - 2]) <= kExtremeTol;
          },
      },
      point.space());
}

Ensemble convex_combine(double p, const Ensemble& a, const Ensemble& b) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mixing weight outside [0, 1]");
  }
  if (!(a.space() == b.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "cannot mix points of " +
                                               describe(a.space()) + " and " +
                                               describe(b.space()));
  }
  if (p == 1.0) return a;
  if (p == 0.0) return b;
  if (const auto* m = std::get_if<Eigen::MatrixXcd>(&a.payload())) {
    Eigen::MatrixXcd mix = p * *m + (1.0 - p) * b.density_matrix();
    return Ensemble(a.space(), Eigen::MatrixXcd(0.5 * (mix + mix.adjoint())));
  }
  const auto& va = std::get<Eigen::VectorXd>(a.payload());
  const auto& vb = std::get<Eigen::VectorXd>(b.payload());
  return Ensemble(a.space(), Eigen::VectorXd(p * va + (1.0 - p) * vb));
}

double distance(const Ensemble& a, const Ensemble& b) {
  if (!(a.space() == b.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "distance across spaces");
  }
  if (const auto* m = std::get_if<Eigen::MatrixXcd>(&a.payload())) {
    return (*m - b.density_matrix()).norm();
  }
  return (std::get<Eigen::VectorXd>(a.payload()) -
          std::get<Eigen::VectorXd>(b.payload()))
      .norm();
}

std::vector<Ensemble> sample_extreme_points(const EnsembleSpace& space,
                                            std::size_t count,
                                            std::uint64_t seed) {
  if (count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "count must be positive");
  }
  std::vector<Ensemble> out;
  std::visit(
      Overloaded{
          [&](const SimplexSpace& s) {
            out.reserve(s.n);
            for (std::size_t i = 0; i < s.n; ++i) {
              out.push_back(Ensemble::simplex(
                  Eigen::VectorXd::Unit(static_cast<Eigen::Index>(s.n),
                                        static_cast<Eigen::Index>(i))));
            }
          },
          [&](const BlochBallSpace&) {
            const double golden_angle =
                std::numbers::pi * (3.0 - std::sqrt(5.0));
            const double total = static_cast<double>(count);
            out.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
              const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / total;
              const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
              const double theta = golden_angle * static_cast<double>(i);
              Eigen::Vector3d r(rho * std::cos(theta), rho * std::sin(theta), z);
              out.push_back(Ensemble::bloch(r / r.norm()));
            }
          },
          [&](const DensityMatrixSpace& s) {
            std::mt19937_64 gen(seed);
            std::normal_distribution<double> normal(0.0, 1.0);
            out.reserve(count);
            const auto n = static_cast<Eigen::Index>(s.n);
            for (std::size_t i = 0; i < count; ++i) {
              Eigen::VectorXcd psi(n);
              for (Eigen::Index k = 0; k < n; ++k) {
                const double re = normal(gen);
                const double im = normal(gen);
                psi[k] = {re, im};
              }
              out.push_back(Ensemble::density(projector(psi)));
            }
          },
      },
      space);
  return out;
}

Ensemble barycenter(const EnsembleSpace& space) {
  return std::visit(
      Overloaded{
          [](const SimplexSpace& s) {
            const auto n = static_cast<Eigen::Index>(s.n);
            return Ensemble::simplex(
                Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
          },
          [](const BlochBallSpace&) {
            return Ensemble::bloch(Eigen::Vector3d::Zero());
          },
          [](const DensityMatrixSpace& s) {
            const auto n = static_cast<Eigen::Index>(s.n);
            return Ensemble::density(Eigen::MatrixXcd::Identity(n, n) /
                                     static_cast<double>(n));
          },
      },
      space);
}

const Eigen::Matrix2cd& pauli(int axis) {
  using C = std::complex<double>;
  static const Eigen::Matrix2cd sigma[3] = {
      (Eigen::Matrix2cd() << C(0, 0), C(1, 0), C(1, 0), C(0, 0)).finished(),
      (Eigen::Matrix2cd() << C(0, 0), C(0, -1), C(0, 1), C(0, 0)).finished(),
      (Eigen::Matrix2cd() << C(1, 0), C(0, 0), C(0, 0), C(-1, 0)).finished(),
  };
  if (axis < 0 || axis > 2) {
    throw Error(ErrorCode::kInvalidArgument, "Pauli axis must be 0, 1 or 2");
  }
  return sigma[axis];
}

Eigen::MatrixXcd bloch_to_density(const Eigen::Vector3d& r) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Identity();
  for (int i = 0; i < 3; ++i) rho += r[i] * pauli(i);
  return 0.5 * rho;
}

Eigen::Vector3d density_to_bloch(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a 2 x 2 matrix");
  }
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) {
    r[i] = (rho * pauli(i)).trace().real();
  }
  return r;
}

Eigen::MatrixXcd projector(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "zero state vector");
  }
  const Eigen::VectorXcd unit = psi / norm;
  Eigen::MatrixXcd p = unit * unit.adjoint();
  return 0.5 * (p + p.adjoint());
}

}  // namespace fraccap
