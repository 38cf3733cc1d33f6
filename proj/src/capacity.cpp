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

#include "fraccap/capacity.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <optional>

#include "fraccap/error.hpp"
#include "feasibility.hpp"
#include "hull.hpp"
#include "lp.hpp"
#include "overloaded.hpp"

namespace fraccap {
namespace {

using internal::Overloaded;

constexpr double kCenterTol = 1e-14;
// Slack on the Bloch-ball distance test |r - p a| <= 1 - p.
constexpr double kDistanceSlack = 1e-14;
// The reference counts as a member of hull(A) within this distance.
constexpr double kHullMembershipTol = 1e-12;

std::size_t vertex_index(const Ensemble& v) {
  if (!std::holds_alternative<SimplexSpace>(v.space()) ||
      !extreme_point_check(v)) {
    throw Error(ErrorCode::kInvalidArgument, "set member is not a vertex");
  }
  Eigen::Index i = 0;
  v.probabilities().maxCoeff(&i);
  return static_cast<std::size_t>(i);
}

Ensemble outer_simplex(const Eigen::VectorXd& q, const Eigen::VectorXd& a,
                       double p) {
  if (p >= 1.0) return Ensemble::simplex(q);
  Eigen::VectorXd b = ((q - p * a) / (1.0 - p)).cwiseMax(0.0);
  return Ensemble::simplex(b / b.sum());
}

Ensemble outer_bloch(const Eigen::Vector3d& r, const Eigen::Vector3d& a,
                     double p) {
  if (p >= 1.0) return Ensemble::bloch(r);
  return Ensemble::bloch(internal::project_onto_ball((r - p * a) / (1.0 - p)));
}

Ensemble outer_density(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& a,
                       double p) {
  if (p >= 1.0) return Ensemble::density(rho);
  return Ensemble::density(internal::nearest_density((rho - p * a) / (1.0 - p)));
}

// The reference and a set, reduced to what the bisection needs.
struct Problem {
  bool contains_reference = false;
  // Witness for p = 0: any point of hull(A) with outer = reference.
  std::function<FeasibilityWitness()> zero_witness;
  std::function<std::optional<FeasibilityWitness>(double)> test;
};

Problem simplex_problem(const Ensemble& ref, const FiniteSet& set) {
  const Eigen::VectorXd q = ref.probabilities();
  Eigen::VectorXd mask = Eigen::VectorXd::Zero(q.size());
  for (const auto& m : set.members) {
    mask[static_cast<Eigen::Index>(vertex_index(m))] = 1.0;
  }
  const double mass = mask.dot(q);
  const Ensemble first = set.members.front();
  Problem out;
  out.contains_reference = mass >= 1.0 - kMembershipTol;
  out.zero_witness = [ref, first] { return FeasibilityWitness{0.0, first, ref}; };
  // LP over a supported on A with p a <= q: the optimum takes a proportional
  // to q on A, so p is attainable iff p <= q(A).
  out.test = [q, mask, mass](double p) -> std::optional<FeasibilityWitness> {
    if (mass <= 0.0 || p > mass) return std::nullopt;
    const Eigen::VectorXd a = mask.cwiseProduct(q) / mass;
    return FeasibilityWitness{p, Ensemble::simplex(a), outer_simplex(q, a, p)};
  };
  return out;
}

Problem bloch_problem(const Ensemble& ref, const ExtremeSet& set) {
  const Eigen::Vector3d r = ref.bloch_vector();
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> project;
  if (const auto* cap = std::get_if<Cap>(&set.form())) {
    const Cap c = *cap;
    if (c.threshold > 1.0) {
      throw Error(ErrorCode::kInvalidArgument, "cap is empty");
    }
    project = [c](const Eigen::Vector3d& y) {
      return internal::project_onto_cap_hull(y, c.direction, c.threshold);
    };
  } else if (const auto* finite = std::get_if<FiniteSet>(&set.form())) {
    std::vector<Eigen::VectorXd> points;
    for (const auto& m : finite->members) points.emplace_back(m.bloch_vector());
    project = [points](const Eigen::Vector3d& y) -> Eigen::Vector3d {
      return internal::project_onto_hull(points, y).point;
    };
  } else if (set.is_full()) {
    project = internal::project_onto_ball;
  } else {
    throw Error(ErrorCode::kUnsupported, "unsupported Bloch-ball set");
  }
  Problem out;
  out.contains_reference = (project(r) - r).norm() <= kHullMembershipTol;
  out.zero_witness = [r, ref, project] {
    return FeasibilityWitness{
        0.0, Ensemble::bloch(internal::project_onto_ball(project(r))), ref};
  };
  // p is attainable iff |r - p a| <= 1 - p for the a in hull(A) nearest r/p.
  out.test = [r, project](double p) -> std::optional<FeasibilityWitness> {
    const Eigen::Vector3d a = project(r / p);
    if ((r - p * a).norm() > (1.0 - p) + kDistanceSlack) return std::nullopt;
    return FeasibilityWitness{p, Ensemble::bloch(internal::project_onto_ball(a)),
                              outer_bloch(r, a, p)};
  };
  return out;
}

Problem density_problem(const Ensemble& ref, const ExtremeSet& set) {
  const Eigen::MatrixXcd rho = ref.density_matrix();
  Problem out;
  if (const auto* finite = std::get_if<FiniteSet>(&set.form())) {
    std::vector<Eigen::MatrixXcd> members;
    for (const auto& m : finite->members) members.push_back(m.density_matrix());
    auto solver =
        std::make_shared<internal::FiniteHullFeasibility>(rho, members);
    const Ensemble first = finite->members.front();
    out.contains_reference = solver->contains_reference();
    out.zero_witness = [ref, first] {
      return FeasibilityWitness{0.0, first, ref};
    };
    out.test = [rho, solver](double p) -> std::optional<FeasibilityWitness> {
      const auto w = solver->feasible(p);
      if (!w) return std::nullopt;
      const Eigen::MatrixXcd a = internal::nearest_density(solver->mixture(*w));
      return FeasibilityWitness{p, Ensemble::density(a),
                                outer_density(rho, a, p)};
    };
    return out;
  }
  if (const auto* level = std::get_if<LevelSet>(&set.form())) {
    const auto& obs = std::get<Observable>(level->variable.form()).matrix;
    auto solver = std::make_shared<internal::LevelHullFeasibility>(
        rho, obs, level->threshold);
    out.contains_reference =
        evaluate(level->variable, ref) >= level->threshold - kMembershipTol;
    const Ensemble top = range_over_extremes(level->variable).argmax;
    out.zero_witness = [ref, top] { return FeasibilityWitness{0.0, top, ref}; };
    out.test = [rho, solver](double p) -> std::optional<FeasibilityWitness> {
      const auto a = solver->feasible(p);
      if (!a) return std::nullopt;
      const Eigen::MatrixXcd point = internal::nearest_density(*a);
      return FeasibilityWitness{p, Ensemble::density(point),
                                outer_density(rho, point, p)};
    };
    return out;
  }
  if (set.is_full()) {
    out.contains_reference = true;
    return out;
  }
  throw Error(ErrorCode::kUnsupported, "unsupported density-matrix set");
}

Problem make_problem(const Ensemble& ref, const ExtremeSet& set) {
  return std::visit(
      Overloaded{
          [&](const SimplexSpace&) {
            if (set.is_full()) {
              Problem p;
              p.contains_reference = true;
              return p;
            }
            const auto* finite = std::get_if<FiniteSet>(&set.form());
            if (finite == nullptr) {
              throw Error(ErrorCode::kUnsupported, "unsupported simplex set");
            }
            return simplex_problem(ref, *finite);
          },
          [&](const BlochBallSpace&) { return bloch_problem(ref, set); },
          [&](const DensityMatrixSpace&) { return density_problem(ref, set); },
      },
      ref.space());
}

bool is_center(const Eigen::Vector3d& r) { return r.norm() <= kCenterTol; }

double center_cap_formula(double c) {
  if (c <= 0.0) return 1.0;
  if (c <= 1.0) return 1.0 / (1.0 + c);
  return 0.0;
}

// Extra sample points guaranteeing a nonempty intersection with A.
std::vector<Ensemble> anchor_points(const ExtremeSet& a) {
  return std::visit(
      Overloaded{
          [](const FiniteSet& s) { return s.members; },
          [](const Cap& c) {
            return std::vector<Ensemble>{Ensemble::bloch(c.direction)};
          },
          [](const LevelSet& l) {
            return std::vector<Ensemble>{range_over_extremes(l.variable).argmax};
          },
          [](const EmptySet&) { return std::vector<Ensemble>{}; },
          [](const FullSet&) { return std::vector<Ensemble>{}; },
      },
      a.form());
}

// Coordinates used as LP equality rows. The unit total weight is implied by
// the simplex and density-matrix coordinates; the Bloch ball needs it
// explicitly.
Eigen::VectorXd lp_coordinates(const Ensemble& x) {
  return std::visit(
      Overloaded{
          [&](const SimplexSpace&) { return Eigen::VectorXd(x.probabilities()); },
          [&](const BlochBallSpace&) {
            Eigen::VectorXd v(4);
            v << x.bloch_vector(), 1.0;
            return v;
          },
          [&](const DensityMatrixSpace&) {
            return internal::hermitian_coordinates(x.density_matrix());
          },
      },
      x.space());
}

}  // namespace

double simplex_capacity(const Eigen::VectorXd& q, const ExtremeSet& a) {
  const auto* space = std::get_if<SimplexSpace>(&a.space());
  if (space == nullptr || static_cast<Eigen::Index>(space->n) != q.size()) {
    throw Error(ErrorCode::kSpaceMismatch, "set is not on this simplex");
  }
  if (a.is_empty()) return 0.0;
  if (a.is_full()) return 1.0;
  const auto* finite = std::get_if<FiniteSet>(&a.form());
  if (finite == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "simplex sets are vertex sets");
  }
  double total = 0.0;
  for (const auto& m : finite->members) {
    total += q[static_cast<Eigen::Index>(vertex_index(m))];
  }
  return std::min(1.0, total);
}

double bloch_cap_capacity(const Eigen::Vector3d& r, const Cap& cap) {
  if (std::abs(cap.direction.norm() - 1.0) > kMembershipTol) {
    throw Error(ErrorCode::kInvalidArgument, "cap direction must be a unit vector");
  }
  if (is_center(r)) return center_cap_formula(cap.threshold);
  if (cap.threshold > 1.0) return 0.0;
  return numeric_capacity(Ensemble::bloch(r),
                          ExtremeSet::cap(cap.direction, cap.threshold))
      .value;
}

NumericCapacity numeric_capacity(const Ensemble& reference, const ExtremeSet& a,
                                 double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (!(a.space() == reference.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "set and reference differ in space");
  }
  if (a.is_empty()) {
    return NumericCapacity{0.0, 0.0, {0.0, reference, reference}};
  }
  if (const auto* cap = std::get_if<Cap>(&a.form()); cap && cap->threshold > 1.0) {
    return NumericCapacity{0.0, 0.0, {0.0, reference, reference}};
  }
  const Problem problem = make_problem(reference, a);
  if (problem.contains_reference) {
    // sup attained at p = 1 with a = reference; b is unconstrained.
    return NumericCapacity{1.0, 1.0, {1.0, reference, reference}};
  }
  double lo = 0.0;
  double hi = 1.0;
  FeasibilityWitness witness = problem.zero_witness();
  int iterations = 0;
  while (hi - lo > tol) {
    if (iterations++ >= kBisectionIterationCap) {
      throw ConvergenceError("capacity bisection hit its iteration cap", lo, hi);
    }
    const double mid = 0.5 * (lo + hi);
    std::optional<FeasibilityWitness> w;
    try {
      w = problem.test(mid);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(e.what(), lo, hi);
    }
    if (w) {
      lo = mid;
      witness = std::move(*w);
    } else {
      hi = mid;
    }
  }
  return NumericCapacity{lo, hi, std::move(witness)};
}

double oracle_capacity(const Ensemble& reference, const ExtremeSet& a,
                       std::size_t samples, std::uint64_t seed) {
  if (!(a.space() == reference.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "set and reference differ in space");
  }
  if (a.is_empty()) return 0.0;
  std::vector<Ensemble> points =
      sample_extreme_points(reference.space(), samples, seed);
  for (auto& extra : anchor_points(a)) points.push_back(std::move(extra));

  const Eigen::VectorXd target = lp_coordinates(reference);
  const auto columns = static_cast<Eigen::Index>(points.size());
  internal::LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(columns);
  lp.eq = Eigen::MatrixXd(target.size(), columns);
  lp.eq_rhs = target;
  for (Eigen::Index j = 0; j < columns; ++j) {
    const Ensemble& x = points[static_cast<std::size_t>(j)];
    lp.eq.col(j) = lp_coordinates(x);
    if (a.includes(x)) lp.objective[j] = 1.0;
  }
  const internal::LpSolution sol = internal::solve_lp(lp);
  if (sol.status == internal::LpStatus::kInfeasible) {
    throw Error(ErrorCode::kNotConverged,
                "reference is not representable by the sampled extreme points; "
                "increase the sample count");
  }
  if (sol.status != internal::LpStatus::kOptimal) {
    throw Error(ErrorCode::kNotConverged, "oracle LP did not solve");
  }
  return std::clamp(sol.objective, 0.0, 1.0);
}

FractionCapacity::FractionCapacity(Ensemble reference, Strategy strategy,
                                   double tol, std::size_t samples,
                                   std::uint64_t seed)
    : reference_(std::move(reference)),
      strategy_(strategy),
      tol_(tol),
      samples_(samples),
      seed_(seed) {
  if (!(tol_ > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (samples_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "sample count must be positive");
  }
}

FractionCapacity FractionCapacity::closed_form(Ensemble reference) {
  return FractionCapacity(std::move(reference), Strategy::kClosedForm,
                          kDefaultBisectionTol, kDefaultOracleSamples, 0);
}

FractionCapacity FractionCapacity::numeric(Ensemble reference, double tol) {
  return FractionCapacity(std::move(reference), Strategy::kNumeric, tol,
                          kDefaultOracleSamples, 0);
}

FractionCapacity FractionCapacity::oracle(Ensemble reference,
                                          std::size_t samples,
                                          std::uint64_t seed) {
  return FractionCapacity(std::move(reference), Strategy::kOracle,
                          kDefaultBisectionTol, samples, seed);
}

bool FractionCapacity::at_bloch_center() const {
  return std::holds_alternative<BlochBallSpace>(space()) &&
         is_center(reference_.bloch_vector());
}

double FractionCapacity::operator()(const ExtremeSet& a) const {
  if (!(a.space() == space())) {
    throw Error(ErrorCode::kSpaceMismatch, "set is not on " + describe(space()));
  }
  if (a.is_empty()) return 0.0;
  switch (strategy_) {
    case Strategy::kOracle:
      return oracle_capacity(reference_, a, samples_, seed_);
    case Strategy::kNumeric:
      return numeric_capacity(reference_, a, tol_).value;
    case Strategy::kClosedForm:
      break;
  }
  if (a.is_full()) return 1.0;
  if (std::holds_alternative<SimplexSpace>(space())) {
    return simplex_capacity(reference_.probabilities(), a);
  }
  if (at_bloch_center()) {
    if (const auto* cap = std::get_if<Cap>(&a.form())) {
      return center_cap_formula(cap->threshold);
    }
    const auto* finite = std::get_if<FiniteSet>(&a.form());
    if (finite != nullptr && finite->members.size() == 1) {
      // A single pure state is the degenerate cap with threshold 1.
      return center_cap_formula(1.0);
    }
  }
  return numeric_capacity(reference_, a, tol_).value;
}

}  // namespace fraccap
