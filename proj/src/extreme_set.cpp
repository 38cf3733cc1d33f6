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

#include "fraccap/extreme_set.hpp"

#include <algorithm>
#include <cmath>

#include "fraccap/error.hpp"
#include "overloaded.hpp"

namespace fraccap {
namespace {

using internal::Overloaded;

constexpr double kSamePointTol = 1e-12;

bool same_point(const Ensemble& a, const Ensemble& b) {
  return distance(a, b) <= kSamePointTol;
}

void append_unique(std::vector<Ensemble>& out, const Ensemble& x) {
  const bool seen = std::any_of(out.begin(), out.end(),
                                [&](const Ensemble& y) { return same_point(x, y); });
  if (!seen) out.push_back(x);
}

}  // namespace

ExtremeSet ExtremeSet::finite(const EnsembleSpace& space,
                              std::vector<Ensemble> members) {
  std::vector<Ensemble> unique;
  unique.reserve(members.size());
  for (const auto& m : members) {
    if (!(m.space() == space)) {
      throw Error(ErrorCode::kSpaceMismatch,
                  "set member is not a point of " + describe(space));
    }
    if (!extreme_point_check(m)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set member is not an extreme point");
    }
    append_unique(unique, m);
  }
  if (unique.empty()) return empty(space);
  return ExtremeSet(space, FiniteSet{std::move(unique)});
}

ExtremeSet ExtremeSet::cap(const Eigen::Vector3d& direction, double threshold) {
  if (std::abs(direction.norm() - 1.0) > kMembershipTol ||
      !std::isfinite(threshold)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cap needs a unit direction and a finite threshold");
  }
  return ExtremeSet(BlochBallSpace{}, Cap{direction, threshold});
}

ExtremeSet ExtremeSet::empty(const EnsembleSpace& space) {
  return ExtremeSet(space, EmptySet{});
}

ExtremeSet ExtremeSet::full(const EnsembleSpace& space) {
  return ExtremeSet(space, FullSet{});
}

bool ExtremeSet::includes(const Ensemble& x) const {
  if (!(x.space() == space_)) {
    throw Error(ErrorCode::kSpaceMismatch, "point of another space");
  }
  return std::visit(
      Overloaded{
          [&](const FiniteSet& s) {
            return std::any_of(
                s.members.begin(), s.members.end(),
                [&](const Ensemble& m) { return same_point(m, x); });
          },
          [&](const Cap& c) {
            return c.direction.dot(x.bloch_vector()) >=
                   c.threshold - kMembershipTol;
          },
          [&](const LevelSet& l) {
            return evaluate(l.variable, x) >= l.threshold - kMembershipTol;
          },
          [](const EmptySet&) { return false; },
          [](const FullSet&) { return true; },
      },
      form_);
}

ExtremeSet level_set(const StatisticalVariable& f, double s) {
  const EnsembleSpace& space = f.space();
  const VariableRange range = range_over_extremes(f);
  if (s <= range.min_value) return ExtremeSet::full(space);
  if (s > range.max_value) return ExtremeSet::empty(space);
  return std::visit(
      Overloaded{
          [&](const SimplexValues& v) {
            std::vector<Ensemble> vertices;
            const auto n = v.values.size();
            for (Eigen::Index i = 0; i < n; ++i) {
              if (v.values[i] >= s) {
                vertices.push_back(
                    Ensemble::simplex(Eigen::VectorXd::Unit(n, i)));
              }
            }
            return ExtremeSet::finite(space, std::move(vertices));
          },
          [&](const BlochAffine& g) {
            const double norm = g.gradient.norm();
            // s <= max F here, so clamp rounding at the top to the apex.
            const double c = std::min(1.0, (s - g.offset) / norm);
            return ExtremeSet::cap(g.gradient / norm, c);
          },
          [&](const Observable&) {
            return ExtremeSet(space, LevelSet{f, s});
          },
      },
      f.form());
}

ExtremeSet set_union(const ExtremeSet& a, const ExtremeSet& b) {
  if (!(a.space() == b.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "union across spaces");
  }
  if (a.is_full() || b.is_full()) return ExtremeSet::full(a.space());
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const auto* fa = std::get_if<FiniteSet>(&a.form());
  const auto* fb = std::get_if<FiniteSet>(&b.form());
  if (fa != nullptr && fb != nullptr) {
    std::vector<Ensemble> members = fa->members;
    for (const auto& m : fb->members) append_unique(members, m);
    return ExtremeSet::finite(a.space(), std::move(members));
  }
  const auto* ca = std::get_if<Cap>(&a.form());
  const auto* cb = std::get_if<Cap>(&b.form());
  if (ca != nullptr && cb != nullptr &&
      (ca->direction - cb->direction).norm() <= kSamePointTol) {
    return ExtremeSet::cap(ca->direction, std::min(ca->threshold, cb->threshold));
  }
  throw Error(ErrorCode::kUnsupported, "union is not representable");
}

}  // namespace fraccap
