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


#include <cmath>
#include <vector>

#include "doctest.h"
#include "feasibility.hpp"
#include "fraccap/capacity.hpp"
#include "fraccap/error.hpp"
#include "hull.hpp"
#include "test_util.hpp"

namespace fraccap {
namespace {

using testing::Rng;
using testing::vertex;

const Eigen::Vector3d kZ = Eigen::Vector3d::UnitZ();

Ensemble bloch_center() { return Ensemble::bloch(Eigen::Vector3d::Zero()); }

// Largest p with |r - p u| <= 1 - p for a unit vector u.
double bloch_singleton(const Eigen::Vector3d& r, const Eigen::Vector3d& u) {
  if ((r - u).norm() <= 1e-15) return 1.0;
  return std::min(1.0, (1.0 - r.squaredNorm()) / (2.0 * (1.0 - r.dot(u))));
}

std::vector<Eigen::VectorXd> coordinates(const std::vector<Ensemble>& members) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& m : members) {
    if (std::holds_alternative<Eigen::VectorXd>(m.payload())) {
      out.push_back(std::get<Eigen::VectorXd>(m.payload()));
    } else {
      out.push_back(internal::hermitian_coordinates(m.density_matrix()));
    }
  }
  return out;
}

Eigen::VectorXd coordinates(const Ensemble& e) {
  return coordinates(std::vector<Ensemble>{e})[0];
}

// Witness invariants: e = p a + (1 - p) b, b in the space, a in the hull.
void check_witness(const Ensemble& e, const NumericCapacity& r,
                   const std::vector<Ensemble>& members) {
  const auto& w = r.witness;
  CHECK(w.p == doctest::Approx(r.value).epsilon(1e-15));
  CHECK(distance(e, convex_combine(w.p, w.inner, w.outer)) <= 1e-9);
  if (!members.empty() && w.p > 0.0) {
    const auto proj = internal::project_onto_hull(coordinates(members),
                                                  coordinates(w.inner));
    CHECK(proj.distance <= 1e-8);
  }
}

TEST_CASE("simplex closed form") {
  const Eigen::Vector3d q(0.2, 0.3, 0.5);
  const EnsembleSpace s3 = SimplexSpace{3};
  CHECK(simplex_capacity(q, ExtremeSet::finite(s3, {vertex(3, 0), vertex(3, 2)})) ==
        doctest::Approx(0.7));
  CHECK(simplex_capacity(q, ExtremeSet::finite(s3, {vertex(3, 0)})) ==
        doctest::Approx(0.2));
  CHECK(simplex_capacity(q, ExtremeSet::full(s3)) == 1.0);
  CHECK(simplex_capacity(q, ExtremeSet::empty(s3)) == 0.0);
  const Eigen::Vector2d q2(1.0, 0.0);
  CHECK(simplex_capacity(q2, ExtremeSet::finite(SimplexSpace{2}, {vertex(2, 1)})) == 0.0);
}

TEST_CASE("simplex: every strategy agrees") {
  const Eigen::Vector3d q(0.2, 0.3, 0.5);
  const Ensemble e = Ensemble::simplex(q);
  const std::vector<Ensemble> members = {vertex(3, 0), vertex(3, 2)};
  const auto a = ExtremeSet::finite(SimplexSpace{3}, members);
  CHECK(FractionCapacity::closed_form(e)(a) == doctest::Approx(0.7));
  const auto numeric = numeric_capacity(e, a);
  CHECK(std::abs(numeric.value - 0.7) <= 1e-10);
  check_witness(e, numeric, members);
  CHECK(oracle_capacity(e, a, 10, 0) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("Bloch cap closed form at the centre") {
  const Eigen::Vector3d o = Eigen::Vector3d::Zero();
  CHECK(bloch_cap_capacity(o, Cap{kZ, 1.0}) == doctest::Approx(0.5));
  CHECK(bloch_cap_capacity(o, Cap{kZ, 0.5}) == doctest::Approx(2.0 / 3.0));
  CHECK(bloch_cap_capacity(o, Cap{kZ, 0.0}) == 1.0);
  CHECK(bloch_cap_capacity(o, Cap{kZ, -0.3}) == 1.0);
  CHECK(bloch_cap_capacity(o, Cap{kZ, 1.2}) == 0.0);
  // Off centre it falls back to the numeric solver.
  const Eigen::Vector3d r(0.1, 0, 0);
  CHECK(bloch_cap_capacity(r, Cap{kZ, 0.5}) ==
        doctest::Approx(numeric_capacity(Ensemble::bloch(r), ExtremeSet::cap(kZ, 0.5)).value));
  CHECK_THROWS_AS(bloch_cap_capacity(r, Cap{Eigen::Vector3d(0, 0, 2), 0.5}), Error);
}

TEST_CASE("Bloch centre: numeric and oracle match the closed form") {
  const Ensemble o = bloch_center();
  const auto single = ExtremeSet::finite(BlochBallSpace{}, {Ensemble::bloch(kZ)});
  CHECK(FractionCapacity::closed_form(o)(single) == doctest::Approx(0.5));
  const auto n1 = numeric_capacity(o, single);
  CHECK(std::abs(n1.value - 0.5) <= 1e-10);
  check_witness(o, n1, {Ensemble::bloch(kZ)});
  CHECK(std::abs(oracle_capacity(o, single, 10000, 0) - 0.5) <= 1e-2);

  const auto cap = ExtremeSet::cap(kZ, 0.5);
  const auto n2 = numeric_capacity(o, cap);
  CHECK(std::abs(n2.value - 2.0 / 3.0) <= 1e-10);
  CHECK(n2.witness.inner.bloch_vector().z() >= 0.5 - 1e-9);
  CHECK(distance(o, convex_combine(n2.witness.p, n2.witness.inner, n2.witness.outer)) <=
        1e-9);
  CHECK(std::abs(oracle_capacity(o, cap, 10000, 0) - 2.0 / 3.0) <= 1e-2);

  const auto full = ExtremeSet::full(BlochBallSpace{});
  CHECK(oracle_capacity(o, full, 1000, 0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("Bloch singletons off centre") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Vector3d r = testing::random_ball(rng, 0.95);
    const Eigen::Vector3d u = testing::random_unit(rng);
    const auto a = ExtremeSet::finite(BlochBallSpace{}, {Ensemble::bloch(u)});
    const auto res = numeric_capacity(Ensemble::bloch(r), a);
    CHECK(std::abs(res.value - bloch_singleton(r, u)) <= 1e-9);
    check_witness(Ensemble::bloch(r), res, {Ensemble::bloch(u)});
  }
}

TEST_CASE("density matrices: maximally mixed and pure singletons") {
  const Ensemble mixed = barycenter(DensityMatrixSpace{3});
  const Ensemble psi = Ensemble::density(projector(Eigen::VectorXcd::Unit(3, 1)));
  const auto a = ExtremeSet::finite(DensityMatrixSpace{3}, {psi});
  const auto res = numeric_capacity(mixed, a);
  CHECK(std::abs(res.value - 1.0 / 3.0) <= 1e-9);
  check_witness(mixed, res, {psi});
  CHECK(FractionCapacity::closed_form(mixed)(a) == doctest::Approx(1.0 / 3.0).epsilon(1e-8));

  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const Eigen::MatrixXcd rho = testing::random_density(3, rng);
    const Eigen::VectorXcd v = testing::random_state(3, rng);
    const Ensemble m = Ensemble::density(projector(v));
    const auto set = ExtremeSet::finite(DensityMatrixSpace{3}, {m});
    const double exact = 1.0 / v.dot(rho.inverse() * v).real();
    const auto r = numeric_capacity(Ensemble::density(rho), set);
    CHECK(std::abs(r.value - exact) <= 1e-9);
    check_witness(Ensemble::density(rho), r, {m});
    const double lp = oracle_capacity(Ensemble::density(rho), set, 4000, t);
    CHECK(lp <= exact + 1e-9);
    CHECK(lp >= exact - 5e-2);
  }
}

TEST_CASE("a set containing the reference has capacity one") {
  const Ensemble z = Ensemble::bloch(kZ);
  CHECK(numeric_capacity(z, ExtremeSet::finite(BlochBallSpace{}, {z})).value == 1.0);
  CHECK(numeric_capacity(z, ExtremeSet::cap(kZ, 0.9)).value == 1.0);
  const Ensemble v = vertex(3, 1);
  CHECK(numeric_capacity(v, ExtremeSet::finite(SimplexSpace{3}, {v})).value == 1.0);
  const Ensemble mixed = barycenter(DensityMatrixSpace{2});
  const auto basis = ExtremeSet::finite(
      DensityMatrixSpace{2}, {Ensemble::density(projector(Eigen::VectorXcd::Unit(2, 0))),
                              Ensemble::density(projector(Eigen::VectorXcd::Unit(2, 1)))});
  CHECK(numeric_capacity(mixed, basis).value == 1.0);
}

TEST_CASE("empty and full sets") {
  Rng rng(13);
  const Ensemble r = Ensemble::bloch(testing::random_ball(rng, 0.9));
  for (const auto& phi : {FractionCapacity::closed_form(r), FractionCapacity::numeric(r),
                          FractionCapacity::oracle(r, 500, 1)}) {
    CHECK(phi(ExtremeSet::empty(BlochBallSpace{})) == 0.0);
    CHECK(phi(ExtremeSet::full(BlochBallSpace{})) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(phi.total() == 1.0);
  }
}

TEST_CASE("errors") {
  const Ensemble o = bloch_center();
  CHECK_THROWS_AS(FractionCapacity::numeric(o, 0.0), Error);
  CHECK_THROWS_AS(FractionCapacity::oracle(o, 0), Error);
  try {
    FractionCapacity::closed_form(o)(ExtremeSet::full(SimplexSpace{2}));
    FAIL("expected a space mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSpaceMismatch);
  }
  // A tolerance below double resolution cannot be met; the bracket is kept.
  try {
    numeric_capacity(o, ExtremeSet::cap(kZ, 0.5), 1e-80);
    FAIL("expected non-convergence");
  } catch (const ConvergenceError& e) {
    CHECK(e.code() == ErrorCode::kNotConverged);
    CHECK(e.lower() <= 2.0 / 3.0 + 1e-12);
    CHECK(e.upper() >= 2.0 / 3.0 - 1e-12);
    CHECK(e.upper() - e.lower() < 1e-15);
  }
}

TEST_CASE("strategy agreement on random centre caps") {
  Rng rng(14);
  std::uniform_real_distribution<double> threshold(-0.2, 1.2);
  const FractionCapacity closed = FractionCapacity::closed_form(bloch_center());
  const FractionCapacity numeric = FractionCapacity::numeric(bloch_center());
  const FractionCapacity oracle = FractionCapacity::oracle(bloch_center(), 10000, 5);
  for (int t = 0; t < 200; ++t) {
    const auto cap = ExtremeSet::cap(testing::random_unit(rng), threshold(rng));
    const double c = closed(cap);
    CHECK(std::abs(numeric(cap) - c) <= 1e-8);
    if (t % 4 == 0) CHECK(std::abs(oracle(cap) - c) <= 1e-2);
  }
}

TEST_CASE("off-centre caps: numeric against the oracle lower bound") {
  Rng rng(15);
  std::uniform_real_distribution<double> threshold(-0.5, 0.95);
  for (int t = 0; t < 20; ++t) {
    const Ensemble r = Ensemble::bloch(testing::random_ball(rng, 0.8));
    const auto cap = ExtremeSet::cap(testing::random_unit(rng), threshold(rng));
    const auto n = numeric_capacity(r, cap);
    const double lp = oracle_capacity(r, cap, 10000, t);
    CHECK(lp <= n.value + 1e-8);
    CHECK(lp >= n.value - 1e-2);
    CHECK(distance(r, convex_combine(n.witness.p, n.witness.inner, n.witness.outer)) <= 1e-9);
  }
}

TEST_CASE("continuity from below along increasing caps") {
  Rng rng(16);
  for (int t = 0; t < 10; ++t) {
    const Ensemble r = Ensemble::bloch(testing::random_ball(rng, 0.7));
    const Eigen::Vector3d u = testing::random_unit(rng);
    const double limit = numeric_capacity(r, ExtremeSet::cap(u, 0.3)).value;
    double previous = 0.0;
    for (int k = 1; k <= 30; ++k) {
      // Caps with thresholds decreasing to 0.3 increase to the closed cap.
      const double v = numeric_capacity(r, ExtremeSet::cap(u, 0.3 + std::ldexp(1.0, -k))).value;
      CHECK(v >= previous - 1e-9);
      CHECK(v <= limit + 1e-9);
      previous = v;
    }
    CHECK(std::abs(previous - limit) <= 1e-6);
  }
}

TEST_CASE("continuity from below along growing finite subsets of a cap") {
  Rng rng(17);
  const Ensemble o = bloch_center();
  const double limit = 2.0 / 3.0;
  std::vector<Ensemble> members;
  double previous = 0.0;
  while (members.size() < 400) {
    const Eigen::Vector3d u = testing::random_unit(rng);
    if (u.z() < 0.5) continue;
    members.push_back(Ensemble::bloch(u));
    if (members.size() % 40 != 0) continue;
    const double v = numeric_capacity(o, ExtremeSet::finite(BlochBallSpace{}, members)).value;
    CHECK(v >= previous - 1e-9);
    CHECK(v <= limit + 1e-9);
    previous = v;
  }
  CHECK(previous >= limit - 2e-2);
}

}  // namespace
}  // namespace fraccap
