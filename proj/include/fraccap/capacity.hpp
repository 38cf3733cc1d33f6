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

// Fraction capacity of a set of pure ensembles.
//
// For a reference ensemble e and a set A of extreme points,
//
//   phi_e(A) = sup { p in [0, 1] : e = p a + (1 - p) b,
//                    a in the closed convex hull of A, b in the space },
//
// the largest fraction of e that can be prepared from elements of A. The
// value is computed three ways:
//
//   - closed forms: additive vertex sums on the simplex, and the spherical
//     cap formula 1 / (1 + c) at the centre of the Bloch ball;
//   - a numeric solver that bisects on p over the (monotone) feasibility
//     predicate, with a space-specific inner feasibility test;
//   - a brute-force oracle that discretizes the extreme points and solves a
//     linear program over representing measures. It converges from below.

#ifndef FRACCAP_CAPACITY_HPP_
#define FRACCAP_CAPACITY_HPP_

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "fraccap/ensemble.hpp"
#include "fraccap/extreme_set.hpp"

namespace fraccap {

inline constexpr double kDefaultBisectionTol = 1e-10;
inline constexpr int kBisectionIterationCap = 200;
inline constexpr std::size_t kDefaultOracleSamples = 10000;

enum class Strategy { kClosedForm, kNumeric, kOracle };

// Certificate that p is attainable: e = p * inner + (1 - p) * outer.
struct FeasibilityWitness {
  double p = 0.0;
  Ensemble inner;  // in the closed convex hull of A
  Ensemble outer;  // in the space
};

struct NumericCapacity {
  double value = 0.0;  // attainable; within tol below the supremum
  double upper = 0.0;  // smallest p shown infeasible (1 if none)
  FeasibilityWitness witness;
};

// Sum of q over the vertices in A. Throws Error(kInvalidArgument) if a member
// of A is not a vertex.
double simplex_capacity(const Eigen::VectorXd& q, const ExtremeSet& a);

// Capacity of a spherical cap. Closed form at the centre, numeric otherwise.
double bloch_cap_capacity(const Eigen::Vector3d& r, const Cap& cap);

// Bisection on p. Throws ConvergenceError carrying [value, upper] when an
// inner solver or the bisection itself fails to converge.
NumericCapacity numeric_capacity(const Ensemble& reference, const ExtremeSet& a,
                                 double tol = kDefaultBisectionTol);

// Linear program over the sampled extreme points (plus the members of a
// finite A, the apex of a cap, or the top eigenstate of a level set).
double oracle_capacity(const Ensemble& reference, const ExtremeSet& a,
                       std::size_t samples, std::uint64_t seed);

// The set function A -> phi_e(A) for a fixed reference ensemble.
class FractionCapacity {
 public:
  static FractionCapacity closed_form(Ensemble reference);
  static FractionCapacity numeric(Ensemble reference,
                                  double tol = kDefaultBisectionTol);
  static FractionCapacity oracle(Ensemble reference,
                                 std::size_t samples = kDefaultOracleSamples,
                                 std::uint64_t seed = 0);

  // Dispatches on the strategy; closed_form falls back to the numeric solver
  // where no closed form is known.
  double operator()(const ExtremeSet& a) const;

  // phi(X); 1 for every fraction capacity.
  double total() const { return 1.0; }

  const Ensemble& reference() const { return reference_; }
  const EnsembleSpace& space() const { return reference_.space(); }
  Strategy strategy() const { return strategy_; }
  double tolerance() const { return tol_; }
  std::size_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }

  // True for the centre of the Bloch ball, where the cap closed form holds.
  bool at_bloch_center() const;

 private:
  FractionCapacity(Ensemble reference, Strategy strategy, double tol,
                   std::size_t samples, std::uint64_t seed);

  Ensemble reference_;
  Strategy strategy_;
  double tol_;
  std::size_t samples_;
  std::uint64_t seed_;
};

}  // namespace fraccap

#endif  // FRACCAP_CAPACITY_HPP_
