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

// Statistical variables: affine functionals F on an ensemble space whose
// value F(e) is the expectation of the underlying quantity in ensemble e.

#ifndef FRACCAP_VARIABLE_HPP_
#define FRACCAP_VARIABLE_HPP_

#include <variant>

#include <Eigen/Dense>

#include "fraccap/ensemble.hpp"

namespace fraccap {

// F(q) = <values, q> on the simplex.
struct SimplexValues {
  Eigen::VectorXd values;
};

// F(r) = <gradient, r> + offset on the Bloch ball.
struct BlochAffine {
  Eigen::Vector3d gradient = Eigen::Vector3d::Zero();
  double offset = 0.0;
};

// F(rho) = Tr(observable * rho) on density matrices.
struct Observable {
  Eigen::MatrixXcd matrix;
};

class StatisticalVariable {
 public:
  using Form = std::variant<SimplexValues, BlochAffine, Observable>;

  // Throws Error(kInvalidArgument) for an empty value vector or a
  // non-Hermitian observable.
  explicit StatisticalVariable(Form form);

  static StatisticalVariable simplex(const Eigen::VectorXd& values);
  static StatisticalVariable bloch(const Eigen::Vector3d& gradient,
                                   double offset);
  static StatisticalVariable observable(const Eigen::MatrixXcd& matrix);

  // Bloch-ball variable with the given range [a, b] whose maximum sits at the
  // extreme point `top` (unit vector).
  static StatisticalVariable bloch_with_range(double a, double b,
                                              const Eigen::Vector3d& top);

  const EnsembleSpace& space() const { return space_; }
  const Form& form() const { return form_; }

 private:
  EnsembleSpace space_;
  Form form_;
};

struct VariableRange {
  double min_value = 0.0;
  double max_value = 0.0;
  Ensemble argmin;
  Ensemble argmax;
  // Constant variable: min == max and the witnesses are arbitrary.
  bool degenerate = false;
};

// Throws Error(kSpaceMismatch) if the ensemble lives in another space.
double evaluate(const StatisticalVariable& f, const Ensemble& e);

VariableRange range_over_extremes(const StatisticalVariable& f);

// scale * F + shift. Affine in the ensemble because every ensemble has unit
// total weight (sum, trace).
StatisticalVariable affine_transform(const StatisticalVariable& f,
                                     double scale, double shift);

// The observable on 2 x 2 density matrices that agrees with a Bloch-ball
// variable under rho = (I + r . sigma) / 2.
StatisticalVariable bloch_to_observable(const StatisticalVariable& f);

}  // namespace fraccap

#endif  // FRACCAP_VARIABLE_HPP_
