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


// Acceptance suite: runs the eight acceptance criteria, prints one PASS/FAIL
// line for each with its runtime, and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fraccap/capacity.hpp"
#include "fraccap/error.hpp"
#include "fraccap/integrals.hpp"
#include "test_util.hpp"

namespace {

using namespace fraccap;
using testing::Rng;

constexpr double kAxiomSlack = 1e-9;
const double kLn2 = std::log(2.0);

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

Ensemble center() { return Ensemble::bloch(Eigen::Vector3d::Zero()); }

// Piecewise survival at the centre of the Bloch ball for range [a, b].
double center_survival(double a, double b, double s) {
  if (s <= 0.5 * (a + b)) return 1.0;
  if (s <= b) return 0.5 * (b - a) / (s - a);
  return 0.0;
}

Outcome choquet_at_center() {
  const auto f = StatisticalVariable::bloch_with_range(1.0, 3.0, Eigen::Vector3d::UnitZ());
  const auto phi = FractionCapacity::closed_form(center());
  const double exact = 2.0 + kLn2;
  const double analytic = choquet_integral(f, phi, 1e-6).value;
  const double quad = choquet_quadrature(survival(f, phi), 1e-6).value;
  const double e = expectation(f, center());
  const double gap = choquet_gap(f, center());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "choquet=%.10f quadrature=%.10f expectation=%.17g gap=%.10f",
                analytic, quad, e, gap);
  return {std::abs(analytic - exact) <= 1e-6 && std::abs(quad - exact) <= 1e-6 && e == 2.0 &&
              std::abs(gap - kLn2) <= 1e-6,
          buf};
}

Outcome profile() {
  const double a = 1.0;
  const double b = 3.0;
  const auto f = StatisticalVariable::bloch_with_range(a, b, Eigen::Vector3d::UnitZ());
  const auto closed = survival(f, FractionCapacity::closed_form(center()));
  const auto numeric = FractionCapacity::numeric(center());
  const auto oracle = FractionCapacity::oracle(center(), 10000, 0);
  double closed_err = 0.0;
  double numeric_err = 0.0;
  double oracle_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double s = 4.0 * i / 99.0;
    const double expected = center_survival(a, b, s);
    const ExtremeSet level = level_set(f, s);
    closed_err = std::max(closed_err, std::abs(closed(s) - expected));
    numeric_err = std::max(numeric_err, std::abs(numeric(level) - expected));
    oracle_err = std::max(oracle_err, std::abs(oracle(level) - expected));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "max errors: closed form %.3g, numeric %.3g, oracle %.3g",
                closed_err, numeric_err, oracle_err);
  return {closed_err == 0.0 && numeric_err <= 1e-8 && oracle_err <= 1e-2, buf};
}

Outcome singleton() {
  Rng rng(101);
  const auto closed = FractionCapacity::closed_form(center());
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto a = ExtremeSet::finite(BlochBallSpace{},
                                      {Ensemble::bloch(testing::random_unit(rng))});
    worst = std::max(worst, std::abs(numeric_capacity(center(), a).value - 0.5));
    worst = std::max(worst, std::abs(closed(a) - 0.5));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |phi({psi}) - 1/2| = %.3g over 20 poles", worst);
  return {worst <= 1e-9, buf};
}

Outcome classical() {
  Rng rng(102);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const Eigen::VectorXd q = testing::random_probability(n, rng);
    Eigen::VectorXd f(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = value(rng);
    double e = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) e += q[i] * f[i];
    const auto var = StatisticalVariable::simplex(f);
    const auto phi = FractionCapacity::closed_form(Ensemble::simplex(q));
    worst = std::max(worst, std::abs(choquet_integral(var, phi).value - e));
    worst = std::max(worst, std::abs(choquet_quadrature(survival(var, phi), 1e-10).value - e));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |Choquet - expectation| = %.3g over 100 instances", worst);
  return {worst <= 1e-9, buf};
}

Outcome sugeno() {
  const auto f = StatisticalVariable::simplex(Eigen::Vector2d(0.0, 0.05));
  const Ensemble q = Ensemble::simplex(Eigen::Vector2d(0.9, 0.1));
  const double s = sugeno_integral(f, FractionCapacity::closed_form(q));
  const double e = 0.9 * 0.0 + 0.1 * 0.05;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "sugeno=%.12g expectation=%.12g ratio=%.9g", s, e, s / e);
  return {std::abs(s - 0.05) <= 1e-10 && std::abs(expectation(f, q) - e) <= 1e-15 &&
              std::abs(s / e - 10.0) <= 1e-6,
          buf};
}

// Counts violations of monotonicity and subadditivity for one pair, plus the
// normalization of the capacity.
int pair_violations(const FractionCapacity& phi, const ExtremeSet& a, const ExtremeSet& b) {
  try {
    const double fa = phi(a);
    const double fb = phi(b);
    const double fu = phi(set_union(a, b));
    int v = 0;
    if (fa > fu + kAxiomSlack || fb > fu + kAxiomSlack) ++v;
    if (fu > fa + fb + kAxiomSlack) ++v;
    if (std::abs(phi(ExtremeSet::empty(a.space()))) > 0.0) ++v;
    if (std::abs(phi(ExtremeSet::full(a.space())) - 1.0) > kAxiomSlack) ++v;
    return v;
  } catch (const Error&) {
    return 1;
  }
}

std::vector<Ensemble> random_members(const EnsembleSpace& space, Rng& rng) {
  const std::size_t k = 1 + rng() % 3;
  std::vector<Ensemble> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (const auto* s = std::get_if<SimplexSpace>(&space)) {
      out.push_back(testing::vertex(s->n, rng() % s->n));
    } else if (std::holds_alternative<BlochBallSpace>(space)) {
      out.push_back(Ensemble::bloch(testing::random_unit(rng)));
    } else {
      const std::size_t n = std::get<DensityMatrixSpace>(space).n;
      out.push_back(Ensemble::density(projector(testing::random_state(n, rng))));
    }
  }
  return out;
}

Outcome axioms() {
  Rng rng(103);
  constexpr int kPairs = 1000;
  int simplex = 0;
  int bloch = 0;
  int density = 0;
  std::uniform_real_distribution<double> threshold(-0.5, 1.0);
  for (int t = 0; t < kPairs; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const EnsembleSpace sn = SimplexSpace{n};
    const auto phi = FractionCapacity::numeric(Ensemble::simplex(testing::random_probability(n, rng)));
    simplex += pair_violations(phi, ExtremeSet::finite(sn, random_members(sn, rng)),
                               ExtremeSet::finite(sn, random_members(sn, rng)));

    const auto psi = FractionCapacity::numeric(Ensemble::bloch(testing::random_ball(rng, 0.95)));
    if (t % 2 == 0) {
      bloch += pair_violations(psi, ExtremeSet::finite(BlochBallSpace{}, random_members(BlochBallSpace{}, rng)),
                               ExtremeSet::finite(BlochBallSpace{}, random_members(BlochBallSpace{}, rng)));
    } else {
      const Eigen::Vector3d u = testing::random_unit(rng);
      bloch += pair_violations(psi, ExtremeSet::cap(u, threshold(rng)), ExtremeSet::cap(u, threshold(rng)));
    }

    const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
    const EnsembleSpace sd = DensityMatrixSpace{d};
    const auto chi = FractionCapacity::numeric(Ensemble::density(testing::random_density(d, rng)));
    density += pair_violations(chi, ExtremeSet::finite(sd, random_members(sd, rng)),
                               ExtremeSet::finite(sd, random_members(sd, rng)));
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "violations over %d pairs: simplex %d, Bloch %d, density %d",
                kPairs, simplex, bloch, density);
  return {simplex == 0 && bloch == 0 && density == 0, buf};
}

Outcome qutrit() {
  Rng rng(104);
  const Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
  const Ensemble mixed = Ensemble::density(rho);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXcd psi = testing::random_state(3, rng);
    // Largest p with rho - p |psi><psi| >= 0 is 1 / <psi|rho^-1|psi>.
    const double exact = 1.0 / psi.dot(rho.inverse() * psi).real();
    const auto a = ExtremeSet::finite(DensityMatrixSpace{3}, {Ensemble::density(projector(psi))});
    worst = std::max(worst, std::abs(numeric_capacity(mixed, a).value - exact));
    worst = std::max(worst, std::abs(exact - 1.0 / 3.0));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |phi({psi}) - 1/3| = %.3g over 10 states", worst);
  return {worst <= 1e-8, buf};
}

Outcome gap_scaling() {
  Rng rng(105);
  std::uniform_real_distribution<double> unit(0.0, 10.0);
  double worst = 0.0;
  double worst_quad = 0.0;
  for (int t = 0; t < 50; ++t) {
    double a = unit(rng);
    double b = unit(rng);
    if (a > b) std::swap(a, b);
    const auto f = StatisticalVariable::bloch_with_range(a, b, testing::random_unit(rng));
    const double law = 0.5 * (b - a) * kLn2;
    worst = std::max(worst, std::abs(choquet_gap(f, center()) - law));
    if (t % 10 == 0) {
      const auto q = choquet_quadrature(survival(f, FractionCapacity::closed_form(center())), 1e-6);
      worst_quad = std::max(worst_quad, std::abs(q.value - 0.5 * (a + b) - law));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max |gap - (b-a) ln2 / 2| = %.3g (quadrature %.3g) over 50 ranges",
                worst, worst_quad);
  return {worst <= 1e-6 && worst_quad <= 1e-6, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Choquet value at the Bloch-ball centre", 1.0, choquet_at_center},
      {2, "capacity profile of the level sets", 30.0, profile},
      {3, "singleton capacity 1/2", 1.0, singleton},
      {4, "classical equivalence", 5.0, classical},
      {5, "Sugeno counterexample", 1.0, sugeno},
      {6, "capacity axioms", 60.0, axioms},
      {7, "qutrit singleton capacity 1/3", 5.0, qutrit},
      {8, "gap scaling law", 10.0, gap_scaling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = out.ok && seconds < c.time_limit;
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s (%.3f s, limit %.0f s) %s\n", ok ? "PASS" : "FAIL",
                c.number, c.title, seconds, c.time_limit, out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
