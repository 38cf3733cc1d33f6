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

// Non-additive integrals of a statistical variable F against a capacity phi.
//
// Both integrals are functionals of the survival function
//
//   G(s) = phi({x in X : F(x) >= s}),
//
// which is nonincreasing, equals phi(X) for s <= a = min F and vanishes for
// s > b = max F. The Choquet integral is
//
//   C = int_{-inf}^0 (G(s) - phi(X)) ds + int_0^inf G(s) ds
//     = a phi(X) + int_a^b G(s) ds,
//
// and the Sugeno integral is sup_{s >= 0} min(s, G(s)).

#ifndef FRACCAP_INTEGRALS_HPP_
#define FRACCAP_INTEGRALS_HPP_

#include <cstddef>
#include <functional>
#include <optional>

#include "fraccap/capacity.hpp"
#include "fraccap/ensemble.hpp"
#include "fraccap/variable.hpp"

namespace fraccap {

inline constexpr double kDefaultQuadratureTol = 1e-6;
inline constexpr std::size_t kDefaultMaxEvaluations = 20'000'000;
inline constexpr double kSugenoTol = 1e-10;

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;  // rigorous bound on |value - exact|
  std::size_t evaluations = 0;  // survival-function calls
};

class SurvivalFunction {
 public:
  // s -> phi(level_set(F, s)). With a closed-form capacity the centre of the
  // Bloch ball and the simplex get exact piecewise forms and a known area.
  // Throws Error(kSpaceMismatch) if F and phi live on different spaces.
  SurvivalFunction(const StatisticalVariable& f, const FractionCapacity& phi);

  // An arbitrary nonincreasing g on [a, b] with g = total below a and 0
  // above b. `area` is int_a^b g, if known.
  SurvivalFunction(double a, double b, double total,
                   std::function<double(double)> g,
                   std::optional<double> area = std::nullopt);

  double operator()(double s) const;

  double min_value() const { return a_; }
  double max_value() const { return b_; }
  double total() const { return total_; }

  // int_a^b G(s) ds when known in closed form.
  const std::optional<double>& area() const { return area_; }

 private:
  double a_;
  double b_;
  double total_;
  std::function<double(double)> g_;
  std::optional<double> area_;
};

SurvivalFunction survival(const StatisticalVariable& f,
                          const FractionCapacity& phi);

// Adaptive quadrature of the Choquet integral. Each subinterval contributes
// its trapezoid value and the bound (r - l)(h(l) - h(r)) / 2, valid for any
// nonincreasing integrand; the interval with the largest bound is split until
// the bounds sum to at most tol. Throws Error(kNotConverged) past
// max_evaluations.
IntegralResult choquet_quadrature(const SurvivalFunction& g, double tol,
                                  std::size_t max_evaluations =
                                      kDefaultMaxEvaluations);

// Uses the closed-form area when available, quadrature otherwise.
IntegralResult choquet_integral(const SurvivalFunction& g,
                                double tol = kDefaultQuadratureTol);
IntegralResult choquet_integral(const StatisticalVariable& f,
                                const FractionCapacity& phi,
                                double tol = kDefaultQuadratureTol);

// sup{s >= 0 : s <= G(s)}, which equals sup_s min(s, G(s)) for nonincreasing
// G, located by bisection to kSugenoTol. Throws Error(kUnsupported) if the
// variable takes negative values on X.
double sugeno_integral(const SurvivalFunction& g);
double sugeno_integral(const StatisticalVariable& f,
                       const FractionCapacity& phi);

// F(e).
double expectation(const StatisticalVariable& f, const Ensemble& e);

// Choquet integral against phi_e minus F(e).
double choquet_gap(const StatisticalVariable& f, const Ensemble& e,
                   double tol = kDefaultQuadratureTol);

}  // namespace fraccap

#endif  // FRACCAP_INTEGRALS_HPP_
