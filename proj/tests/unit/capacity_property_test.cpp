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


// Axioms of a fraction capacity on random instances.

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fraccap/capacity.hpp"
#include "test_util.hpp"

namespace fraccap {
namespace {

using testing::Rng;

constexpr double kSlack = 1e-9;

std::vector<Ensemble> random_pure(const EnsembleSpace& space, std::size_t k, Rng& rng) {
  std::vector<Ensemble> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::holds_alternative<BlochBallSpace>(space)) {
      out.push_back(Ensemble::bloch(testing::random_unit(rng)));
    } else {
      const std::size_t n = std::get<DensityMatrixSpace>(space).n;
      out.push_back(Ensemble::density(projector(testing::random_state(n, rng))));
    }
  }
  return out;
}

std::vector<Ensemble> concat(std::vector<Ensemble> a, const std::vector<Ensemble>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST_CASE("simplex: additive on disjoint sets") {
  Rng rng(21);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 6);
    const Ensemble e = Ensemble::simplex(testing::random_probability(n, rng));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    std::vector<Ensemble> a;
    std::vector<Ensemble> b;
    for (std::size_t i = 0; i < n; ++i) {
      (i < cut ? a : b).push_back(testing::vertex(n, idx[i]));
    }
    const auto phi = FractionCapacity::closed_form(e);
    const auto set = [&](const std::vector<Ensemble>& m) {
      return m.empty() ? ExtremeSet::empty(SimplexSpace{n}) : ExtremeSet::finite(SimplexSpace{n}, m);
    };
    CHECK(std::abs(phi(set(concat(a, b))) - phi(set(a)) - phi(set(b))) <= 1e-15);
    const auto numeric = FractionCapacity::numeric(e);
    if (!a.empty()) CHECK(std::abs(numeric(set(a)) - phi(set(a))) <= 1e-10);
  }
}

TEST_CASE("Bloch and density: monotone and subadditive on finite sets") {
  Rng rng(22);
  const std::vector<EnsembleSpace> spaces = {BlochBallSpace{}, DensityMatrixSpace{2},
                                             DensityMatrixSpace{3}};
  for (const auto& space : spaces) {
    for (int t = 0; t < 40; ++t) {
      Ensemble e = barycenter(space);
      if (std::holds_alternative<BlochBallSpace>(space)) {
        e = Ensemble::bloch(testing::random_ball(rng, 0.9));
      } else {
        e = Ensemble::density(testing::random_density(std::get<DensityMatrixSpace>(space).n, rng));
      }
      const auto phi = FractionCapacity::numeric(e);
      const auto a = random_pure(space, 1 + t % 3, rng);
      const auto b = random_pure(space, 1 + t % 2, rng);
      const double fa = phi(ExtremeSet::finite(space, a));
      const double fb = phi(ExtremeSet::finite(space, b));
      const double fab = phi(ExtremeSet::finite(space, concat(a, b)));
      CHECK(fa <= fab + kSlack);
      CHECK(fb <= fab + kSlack);
      CHECK(fab <= fa + fb + kSlack);
      CHECK(fab <= 1.0);
      CHECK(fa >= 0.0);
    }
  }
}

TEST_CASE("Bloch caps: monotone in the threshold and subadditive") {
  Rng rng(23);
  std::uniform_real_distribution<double> threshold(-0.5, 1.0);
  for (int t = 0; t < 200; ++t) {
    const Ensemble r = Ensemble::bloch(testing::random_ball(rng, 0.9));
    const auto phi = FractionCapacity::numeric(r);
    const Eigen::Vector3d u = testing::random_unit(rng);
    double c1 = threshold(rng);
    double c2 = threshold(rng);
    if (c1 > c2) std::swap(c1, c2);
    CHECK(phi(ExtremeSet::cap(u, c2)) <= phi(ExtremeSet::cap(u, c1)) + kSlack);

    // A single point inside the cap is a smaller set.
    Eigen::Vector3d w = testing::random_unit(rng);
    if (w.dot(u) < c1) w = u;
    const auto single = ExtremeSet::finite(BlochBallSpace{}, {Ensemble::bloch(w)});
    CHECK(phi(single) <= phi(ExtremeSet::cap(u, c1)) + kSlack);
  }
}

}  // namespace
}  // namespace fraccap
