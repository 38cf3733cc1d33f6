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

#ifndef FRACCAP_EXTREME_SET_HPP_
#define FRACCAP_EXTREME_SET_HPP_

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fraccap/ensemble.hpp"
#include "fraccap/variable.hpp"

namespace fraccap {

struct FiniteSet {
  std::vector<Ensemble> members;
};

// {x on the unit sphere : <direction, x> >= threshold}. Bloch ball only.
struct Cap {
  Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
  double threshold = 1.0;
};

// {x extreme : F(x) >= threshold}. Only kept in this form where no more
// structured variant exists (density matrices).
struct LevelSet {
  StatisticalVariable variable;
  double threshold = 0.0;
};

struct EmptySet {};
struct FullSet {};

// A subset A of the extreme points X of an ensemble space.
class ExtremeSet {
 public:
  using Form = std::variant<FiniteSet, Cap, LevelSet, EmptySet, FullSet>;

  // Members must be extreme points of `space`; duplicates are dropped.
  static ExtremeSet finite(const EnsembleSpace& space,
                           std::vector<Ensemble> members);
  // Throws unless the direction is a unit vector.
  static ExtremeSet cap(const Eigen::Vector3d& direction, double threshold);
  static ExtremeSet empty(const EnsembleSpace& space);
  static ExtremeSet full(const EnsembleSpace& space);

  const EnsembleSpace& space() const { return space_; }
  const Form& form() const { return form_; }

  bool is_empty() const { return std::holds_alternative<EmptySet>(form_); }
  bool is_full() const { return std::holds_alternative<FullSet>(form_); }

  // Membership of an extreme point.
  bool includes(const Ensemble& x) const;

 private:
  friend ExtremeSet level_set(const StatisticalVariable&, double);
  ExtremeSet(EnsembleSpace space, Form form)
      : space_(space), form_(std::move(form)) {}

  EnsembleSpace space_;
  Form form_;
};

// {x in X : F(x) >= s} in the most structured form available: Full when
// s <= min F, Empty when s > max F, a Cap on the Bloch ball, a FiniteSet of
// vertices on the simplex.
ExtremeSet level_set(const StatisticalVariable& f, double s);

// Union, where the result is representable: finite sets, Empty/Full, and caps
// sharing a direction.
ExtremeSet set_union(const ExtremeSet& a, const ExtremeSet& b);

}  // namespace fraccap

#endif  // FRACCAP_EXTREME_SET_HPP_
