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

#include "fraccap/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fraccap/error.hpp"
#include "fraccap/extreme_set.hpp"

namespace fraccap {
namespace {

// Piecewise survival function at the centre of the Bloch ball:
// 1 up to the midpoint m, (b - a) / (2 (s - a)) on (m, b], 0 beyond.
double bloch_center_survival(double a, double b, double s) {
  const double m = 0.5 * (a + b);
  if (s <= m) return 1.0;
  if (s <= b) return 0.5 * (b - a) / (s - a);
  return 0.0;
}

// int_a^b of the survival function above; (b - a)(1 + ln 2) / 2.
double bloch_center_area(double a, double b) {
  return 0.5 * (b - a) * (1.0 + std::log(2.0));
}

// For a step function that is constant on (v_{k-1}, v_k]:
// int_a^b G = sum_k (v_k - v_{k-1}) G(v_k).
double simplex_area(const Eigen::VectorXd& values,
                    const std::function<double(double)>& g) {
  std::vector<double> v(values.data(), values.data() + values.size());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  double area = 0.0;
  for (std::size_t k = 1; k < v.size(); ++k) area += (v[k] - v[k - 1]) * g(v[k]);
  return area;
}

struct Interval {
  double l;
  double r;
  double hl;
  double hr;
  double bound() const { return 0.5 * (r - l) * (hl - hr); }
  double estimate() const { return 0.5 * (r - l) * (hl + hr); }
};

bool smaller_bound(const Interval& x, const Interval& y) {
  return x.bound() < y.bound();
}

}  // namespace

SurvivalFunction::SurvivalFunction(const StatisticalVariable& f,
                                   const FractionCapacity& phi) {
  if (!(f.space() == phi.space())) {
    throw Error(ErrorCode::kSpaceMismatch,
                "variable and capacity live on different spaces");
  }
  const VariableRange range = range_over_extremes(f);
  a_ = range.min_value;
  b_ = range.max_value;
  total_ = phi.total();

  const bool closed = phi.strategy() == Strategy::kClosedForm;
  if (closed && phi.at_bloch_center()) {
    const double a = a_;
    const double b = b_;
    g_ = [a, b](double s) { return bloch_center_survival(a, b, s); };
    area_ = bloch_center_area(a, b);
    return;
  }
  g_ = [f, phi, a = a_, b = b_, t = total_](double s) {
    if (s <= a) return t;
    if (s > b) return 0.0;
    return phi(level_set(f, s));
  };
  if (closed && std::holds_alternative<SimplexValues>(f.form())) {
    area_ = simplex_area(std::get<SimplexValues>(f.form()).values, g_);
  }
}

SurvivalFunction::SurvivalFunction(double a, double b, double total,
                                   std::function<double(double)> g,
                                   std::optional<double> area)
    : a_(a), b_(b), total_(total), g_(std::move(g)), area_(area) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b) ||
      !std::isfinite(total)) {
    throw Error(ErrorCode::kInvalidArgument, "survival range must satisfy a <= b");
  }
  if (!g_) throw Error(ErrorCode::kInvalidArgument, "empty survival function");
}

double SurvivalFunction::operator()(double s) const {
  if (s <= a_) return total_;
  if (s > b_) return 0.0;
  return g_(s);
}

SurvivalFunction survival(const StatisticalVariable& f,
                          const FractionCapacity& phi) {
  return SurvivalFunction(f, phi);
}

IntegralResult choquet_quadrature(const SurvivalFunction& g, double tol,
                                  std::size_t max_evaluations) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const double t = g.total();
  const double lo = std::min(g.min_value(), 0.0);
  const double hi = std::max(g.max_value(), 0.0);

  IntegralResult out;
  std::vector<Interval> heap;
  // Below zero the integrand is G - phi(X), above it G; both nonincreasing.
  if (lo < 0.0) {
    heap.push_back({lo, 0.0, g(lo) - t, g(0.0) - t});
    out.evaluations += 2;
  }
  if (hi > 0.0) {
    heap.push_back({0.0, hi, g(0.0), g(hi)});
    out.evaluations += 2;
  }
  std::make_heap(heap.begin(), heap.end(), smaller_bound);

  double bound = 0.0;
  for (const auto& iv : heap) bound += iv.bound();
  while (bound > tol) {
    if (out.evaluations >= max_evaluations) {
      throw Error(ErrorCode::kNotConverged,
                  "quadrature exceeded its evaluation budget");
    }
    std::pop_heap(heap.begin(), heap.end(), smaller_bound);
    const Interval iv = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (iv.l + iv.r);
    if (!(mid > iv.l && mid < iv.r)) {
      throw Error(ErrorCode::kNotConverged,
                  "quadrature interval reached machine resolution");
    }
    const double hm = g(mid) - (iv.r <= 0.0 ? t : 0.0);
    ++out.evaluations;
    const Interval left{iv.l, mid, iv.hl, hm};
    const Interval right{mid, iv.r, hm, iv.hr};
    bound += left.bound() + right.bound() - iv.bound();
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), smaller_bound);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), smaller_bound);
  }

  // Re-sum in a fixed order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(),
            [](const Interval& x, const Interval& y) { return x.l < y.l; });
  for (const auto& iv : heap) {
    out.value += iv.estimate();
    out.error_estimate += iv.bound();
  }
  out.error_estimate = std::max(0.0, out.error_estimate);
  return out;
}

IntegralResult choquet_integral(const SurvivalFunction& g, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (g.area()) {
    return IntegralResult{g.min_value() * g.total() + *g.area(), 0.0, 0};
  }
  return choquet_quadrature(g, tol);
}

IntegralResult choquet_integral(const StatisticalVariable& f,
                                const FractionCapacity& phi, double tol) {
  return choquet_integral(SurvivalFunction(f, phi), tol);
}

double sugeno_integral(const SurvivalFunction& g) {
  if (g.min_value() < -kMembershipTol) {
    throw Error(ErrorCode::kUnsupported,
                "Sugeno integral needs a nonnegative variable");
  }
  double hi = std::min(g.total(), std::max(g.max_value(), 0.0));
  if (hi <= 0.0) return 0.0;
  if (hi <= g(hi)) return hi;
  double lo = 0.0;
  // s <= G(s) holds on an initial segment of [0, hi].
  while (hi - lo > kSugenoTol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= g(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double sugeno_integral(const StatisticalVariable& f,
                       const FractionCapacity& phi) {
  return sugeno_integral(SurvivalFunction(f, phi));
}

double expectation(const StatisticalVariable& f, const Ensemble& e) {
  return evaluate(f, e);
}

double choquet_gap(const StatisticalVariable& f, const Ensemble& e,
                   double tol) {
  const FractionCapacity phi = FractionCapacity::closed_form(e);
  return choquet_integral(f, phi, tol).value - expectation(f, e);
}

}  // namespace fraccap
