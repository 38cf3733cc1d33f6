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

// Ensemble spaces: compact convex bodies whose points are statistical
// ensembles and whose extreme points are the pure ensembles.
//
// Three concrete families are supported:
//   - SimplexSpace(n): classical distributions over n outcomes,
//   - BlochBallSpace: the unit ball in R^3 (two-level quantum systems),
//   - DensityMatrixSpace(n): n x n trace-one positive semidefinite matrices.
//
// Points of the simplex and the Bloch ball are carried as real vectors,
// density matrices as complex matrices.

#ifndef FRACCAP_ENSEMBLE_HPP_
#define FRACCAP_ENSEMBLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace fraccap {

// Absolute tolerance on membership residuals (sum-to-one, norm, eigenvalues).
inline constexpr double kMembershipTol = 1e-12;
// Tolerance used when deciding whether a point is extreme.
inline constexpr double kExtremeTol = 1e-10;

struct SimplexSpace {
  std::size_t n = 1;
  friend bool operator==(const SimplexSpace&, const SimplexSpace&) = default;
};

struct BlochBallSpace {
  friend bool operator==(const BlochBallSpace&, const BlochBallSpace&) = default;
};

struct DensityMatrixSpace {
  std::size_t n = 2;
  friend bool operator==(const DensityMatrixSpace&,
                         const DensityMatrixSpace&) = default;
};

using EnsembleSpace =
    std::variant<SimplexSpace, BlochBallSpace, DensityMatrixSpace>;

// Raw coordinates of a point: a real vector (simplex, Bloch ball) or a complex
// matrix (density matrices).
using Payload = std::variant<Eigen::VectorXd, Eigen::MatrixXcd>;

std::string describe(const EnsembleSpace& space);

// Number of real coordinates of the ambient vector space.
std::size_t ambient_dimension(const EnsembleSpace& space);

// Throws Error(kDimensionMismatch) if the payload shape does not fit the space.
bool contains(const EnsembleSpace& space, const Payload& payload);

// A validated point of an ensemble space. Immutable.
class Ensemble {
 public:
  // Throws Error(kNotInSpace) or Error(kDimensionMismatch).
  Ensemble(EnsembleSpace space, Payload payload);

  static Ensemble simplex(const Eigen::VectorXd& q);
  static Ensemble bloch(const Eigen::Vector3d& r);
  static Ensemble density(const Eigen::MatrixXcd& rho);

  const EnsembleSpace& space() const { return space_; }
  const Payload& payload() const { return payload_; }

  // Payload accessors; throw Error(kSpaceMismatch) on the wrong family.
  const Eigen::VectorXd& probabilities() const;
  Eigen::Vector3d bloch_vector() const;
  const Eigen::MatrixXcd& density_matrix() const;

 private:
  EnsembleSpace space_;
  Payload payload_;
};

bool extreme_point_check(const Ensemble& point);

// Returns p * a + (1 - p) * b.
Ensemble convex_combine(double p, const Ensemble& a, const Ensemble& b);

// Euclidean (Frobenius for matrices) distance between two points.
double distance(const Ensemble& a, const Ensemble& b);

// Deterministic discretization of the extreme points. The simplex yields its
// n vertices regardless of count; the Bloch ball a Fibonacci lattice of
// `count` unit vectors (seed unused); density matrices `count` Haar-random
// rank-one projectors drawn from a generator seeded with `seed`.
std::vector<Ensemble> sample_extreme_points(const EnsembleSpace& space,
                                            std::size_t count,
                                            std::uint64_t seed);

// The maximally mixed point of the space.
Ensemble barycenter(const EnsembleSpace& space);

// Standard affine bijection between the Bloch ball and 2 x 2 density
// matrices: rho = (I + r . sigma) / 2.
Eigen::MatrixXcd bloch_to_density(const Eigen::Vector3d& r);
Eigen::Vector3d density_to_bloch(const Eigen::MatrixXcd& rho);

// Pauli matrices sigma_x, sigma_y, sigma_z.
const Eigen::Matrix2cd& pauli(int axis);

// Rank-one projector |psi><psi| for a (not necessarily normalized) vector.
Eigen::MatrixXcd projector(const Eigen::VectorXcd& psi);

}  // namespace fraccap

#endif  // FRACCAP_ENSEMBLE_HPP_
