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

#include "fraccap/fraccap.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fraccap/capacity.hpp"
#include "fraccap/ensemble.hpp"
#include "fraccap/error.hpp"
#include "fraccap/extreme_set.hpp"
#include "fraccap/integrals.hpp"
#include "fraccap/repro.hpp"
#include "fraccap/variable.hpp"
#include "overloaded.hpp"

struct fc_space {
  fraccap::EnsembleSpace space;
};
struct fc_ensemble {
  fraccap::Ensemble ensemble;
};
struct fc_variable {
  fraccap::StatisticalVariable variable;
};
struct fc_set {
  fraccap::ExtremeSet set;
};
struct fc_capacity {
  fraccap::FractionCapacity capacity;
};

namespace {

using fraccap::Error;
using fraccap::ErrorCode;
using fraccap::internal::Overloaded;

thread_local std::string g_last_error;

// Runs `body`, translating exceptions into status codes.
template <typename Body>
fc_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return FC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<fc_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FC_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, what);
}

Eigen::MatrixXcd decode_matrix(const double* data, std::size_t len,
                               std::size_t n) {
  if (len != 2 * n * n) {
    throw Error(ErrorCode::kDimensionMismatch, "expected 2 n^2 values");
  }
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd out(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const std::size_t k = 2 * static_cast<std::size_t>(i * m + j);
      out(i, j) = std::complex<double>(data[k], data[k + 1]);
    }
  }
  return out;
}

Eigen::VectorXd decode_vector(const double* data, std::size_t len,
                              std::size_t expected) {
  if (len != expected) {
    throw Error(ErrorCode::kDimensionMismatch, "payload length mismatch");
  }
  return Eigen::Map<const Eigen::VectorXd>(data, static_cast<Eigen::Index>(len));
}

std::size_t payload_size(const fraccap::EnsembleSpace& space) {
  return std::visit(
      Overloaded{
          [](const fraccap::SimplexSpace& s) { return s.n; },
          [](const fraccap::BlochBallSpace&) { return std::size_t{3}; },
          [](const fraccap::DensityMatrixSpace& s) { return 2 * s.n * s.n; },
      },
      space);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_report(const fraccap::ReproReport& report, char** json,
                 int* passed) {
  char* text = copy_string(report.to_json());
  *json = text;
  *passed = report.passed() ? 1 : 0;
}

}  // namespace

extern "C" {

const char* fc_version(void) { return fraccap::kVersion; }

const char* fc_last_error_message(void) { return g_last_error.c_str(); }

fc_status fc_space_create(fc_space_kind kind, size_t n, fc_space** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    switch (kind) {
      case FC_SPACE_SIMPLEX:
        require(n >= 1, "simplex needs n >= 1");
        *out = new fc_space{fraccap::SimplexSpace{n}};
        return;
      case FC_SPACE_BLOCH:
        *out = new fc_space{fraccap::BlochBallSpace{}};
        return;
      case FC_SPACE_DENSITY:
        require(n >= 1, "density matrices need n >= 1");
        *out = new fc_space{fraccap::DensityMatrixSpace{n}};
        return;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown space kind");
  });
}

void fc_space_destroy(fc_space* space) { delete space; }

fc_status fc_space_payload_size(const fc_space* space, size_t* out) {
  return guarded([&] {
    require(space != nullptr && out != nullptr, "null argument");
    *out = payload_size(space->space);
  });
}

fc_status fc_ensemble_create(const fc_space* space, const double* payload,
                             size_t len, fc_ensemble** out) {
  return guarded([&] {
    require(space != nullptr && payload != nullptr && out != nullptr,
            "null argument");
    fraccap::Payload p = std::visit(
        Overloaded{
            [&](const fraccap::SimplexSpace& s) -> fraccap::Payload {
              return decode_vector(payload, len, s.n);
            },
            [&](const fraccap::BlochBallSpace&) -> fraccap::Payload {
              return decode_vector(payload, len, 3);
            },
            [&](const fraccap::DensityMatrixSpace& s) -> fraccap::Payload {
              return decode_matrix(payload, len, s.n);
            },
        },
        space->space);
    *out = new fc_ensemble{fraccap::Ensemble(space->space, std::move(p))};
  });
}

fc_status fc_ensemble_barycenter(const fc_space* space, fc_ensemble** out) {
  return guarded([&] {
    require(space != nullptr && out != nullptr, "null argument");
    *out = new fc_ensemble{fraccap::barycenter(space->space)};
  });
}

void fc_ensemble_destroy(fc_ensemble* ensemble) { delete ensemble; }

fc_status fc_ensemble_is_extreme(const fc_ensemble* ensemble, int* out) {
  return guarded([&] {
    require(ensemble != nullptr && out != nullptr, "null argument");
    *out = fraccap::extreme_point_check(ensemble->ensemble) ? 1 : 0;
  });
}

fc_status fc_ensemble_payload(const fc_ensemble* ensemble, double* buffer,
                              size_t len) {
  return guarded([&] {
    require(ensemble != nullptr && buffer != nullptr, "null argument");
    const auto& e = ensemble->ensemble;
    if (len != payload_size(e.space())) {
      throw Error(ErrorCode::kDimensionMismatch, "buffer length mismatch");
    }
    if (const auto* v = std::get_if<Eigen::VectorXd>(&e.payload())) {
      std::memcpy(buffer, v->data(), len * sizeof(double));
      return;
    }
    const auto& m = std::get<Eigen::MatrixXcd>(e.payload());
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        buffer[k++] = m(i, j).real();
        buffer[k++] = m(i, j).imag();
      }
    }
  });
}

fc_status fc_variable_create(const fc_space* space, const double* payload,
                             size_t len, fc_variable** out) {
  return guarded([&] {
    require(space != nullptr && payload != nullptr && out != nullptr,
            "null argument");
    auto form = std::visit(
        Overloaded{
            [&](const fraccap::SimplexSpace& s)
                -> fraccap::StatisticalVariable::Form {
              return fraccap::SimplexValues{decode_vector(payload, len, s.n)};
            },
            [&](const fraccap::BlochBallSpace&)
                -> fraccap::StatisticalVariable::Form {
              const Eigen::VectorXd v = decode_vector(payload, len, 4);
              return fraccap::BlochAffine{v.head<3>(), v[3]};
            },
            [&](const fraccap::DensityMatrixSpace& s)
                -> fraccap::StatisticalVariable::Form {
              return fraccap::Observable{decode_matrix(payload, len, s.n)};
            },
        },
        space->space);
    *out = new fc_variable{fraccap::StatisticalVariable(std::move(form))};
  });
}

fc_status fc_variable_bloch_with_range(double a, double b, const double top[3],
                                       fc_variable** out) {
  return guarded([&] {
    require(top != nullptr && out != nullptr, "null argument");
    *out = new fc_variable{fraccap::StatisticalVariable::bloch_with_range(
        a, b, Eigen::Vector3d(top[0], top[1], top[2]))};
  });
}

void fc_variable_destroy(fc_variable* variable) { delete variable; }

fc_status fc_variable_evaluate(const fc_variable* variable,
                               const fc_ensemble* ensemble, double* out) {
  return guarded([&] {
    require(variable != nullptr && ensemble != nullptr && out != nullptr,
            "null argument");
    *out = fraccap::evaluate(variable->variable, ensemble->ensemble);
  });
}

fc_status fc_variable_range(const fc_variable* variable, double* min_value,
                            double* max_value) {
  return guarded([&] {
    require(variable != nullptr && min_value != nullptr && max_value != nullptr,
            "null argument");
    const auto range = fraccap::range_over_extremes(variable->variable);
    *min_value = range.min_value;
    *max_value = range.max_value;
  });
}

fc_status fc_set_empty(const fc_space* space, fc_set** out) {
  return guarded([&] {
    require(space != nullptr && out != nullptr, "null argument");
    *out = new fc_set{fraccap::ExtremeSet::empty(space->space)};
  });
}

fc_status fc_set_full(const fc_space* space, fc_set** out) {
  return guarded([&] {
    require(space != nullptr && out != nullptr, "null argument");
    *out = new fc_set{fraccap::ExtremeSet::full(space->space)};
  });
}

fc_status fc_set_finite(const fc_space* space, const fc_ensemble* const* members,
                        size_t count, fc_set** out) {
  return guarded([&] {
    require(space != nullptr && out != nullptr, "null argument");
    require(count == 0 || members != nullptr, "null member list");
    std::vector<fraccap::Ensemble> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(members[i] != nullptr, "null member");
      list.push_back(members[i]->ensemble);
    }
    *out = new fc_set{fraccap::ExtremeSet::finite(space->space, std::move(list))};
  });
}

fc_status fc_set_cap(const double direction[3], double threshold, fc_set** out) {
  return guarded([&] {
    require(direction != nullptr && out != nullptr, "null argument");
    *out = new fc_set{fraccap::ExtremeSet::cap(
        Eigen::Vector3d(direction[0], direction[1], direction[2]), threshold)};
  });
}

fc_status fc_set_level(const fc_variable* variable, double s, fc_set** out) {
  return guarded([&] {
    require(variable != nullptr && out != nullptr, "null argument");
    *out = new fc_set{fraccap::level_set(variable->variable, s)};
  });
}

fc_status fc_set_union(const fc_set* a, const fc_set* b, fc_set** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new fc_set{fraccap::set_union(a->set, b->set)};
  });
}

void fc_set_destroy(fc_set* set) { delete set; }

fc_status fc_capacity_create(const fc_ensemble* reference, fc_strategy strategy,
                             double tol, size_t samples, uint64_t seed,
                             fc_capacity** out) {
  return guarded([&] {
    require(reference != nullptr && out != nullptr, "null argument");
    const auto& ref = reference->ensemble;
    switch (strategy) {
      case FC_STRATEGY_CLOSED_FORM:
        *out = new fc_capacity{fraccap::FractionCapacity::closed_form(ref)};
        return;
      case FC_STRATEGY_NUMERIC:
        *out = new fc_capacity{fraccap::FractionCapacity::numeric(ref, tol)};
        return;
      case FC_STRATEGY_ORACLE:
        *out = new fc_capacity{
            fraccap::FractionCapacity::oracle(ref, samples, seed)};
        return;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown strategy");
  });
}

void fc_capacity_destroy(fc_capacity* capacity) { delete capacity; }

fc_status fc_capacity_evaluate(const fc_capacity* capacity, const fc_set* set,
                               double* out) {
  return guarded([&] {
    require(capacity != nullptr && set != nullptr && out != nullptr,
            "null argument");
    *out = capacity->capacity(set->set);
  });
}

namespace {

void write_result(const fraccap::IntegralResult& r, double* value,
                  double* error_estimate, size_t* evaluations) {
  if (value != nullptr) *value = r.value;
  if (error_estimate != nullptr) *error_estimate = r.error_estimate;
  if (evaluations != nullptr) *evaluations = r.evaluations;
}

}  // namespace

fc_status fc_choquet(const fc_variable* variable, const fc_capacity* capacity,
                     double tol, double* value, double* error_estimate,
                     size_t* evaluations) {
  return guarded([&] {
    require(variable != nullptr && capacity != nullptr, "null argument");
    write_result(
        fraccap::choquet_integral(variable->variable, capacity->capacity, tol),
        value, error_estimate, evaluations);
  });
}

fc_status fc_choquet_quadrature(const fc_variable* variable,
                                const fc_capacity* capacity, double tol,
                                double* value, double* error_estimate,
                                size_t* evaluations) {
  return guarded([&] {
    require(variable != nullptr && capacity != nullptr, "null argument");
    const fraccap::SurvivalFunction g(variable->variable, capacity->capacity);
    write_result(fraccap::choquet_quadrature(g, tol), value, error_estimate,
                 evaluations);
  });
}

fc_status fc_sugeno(const fc_variable* variable, const fc_capacity* capacity,
                    double* out) {
  return guarded([&] {
    require(variable != nullptr && capacity != nullptr && out != nullptr,
            "null argument");
    *out = fraccap::sugeno_integral(variable->variable, capacity->capacity);
  });
}

fc_status fc_expectation(const fc_variable* variable,
                         const fc_ensemble* ensemble, double* out) {
  return guarded([&] {
    require(variable != nullptr && ensemble != nullptr && out != nullptr,
            "null argument");
    *out = fraccap::expectation(variable->variable, ensemble->ensemble);
  });
}

fc_status fc_choquet_gap(const fc_variable* variable,
                         const fc_ensemble* ensemble, double tol, double* out) {
  return guarded([&] {
    require(variable != nullptr && ensemble != nullptr && out != nullptr,
            "null argument");
    *out = fraccap::choquet_gap(variable->variable, ensemble->ensemble, tol);
  });
}

fc_status fc_repro_capacity_profile(double a, double b, size_t samples,
                                    size_t oracle_points, uint64_t seed,
                                    const char* csv_path, char** report_json,
                                    int* passed) {
  return guarded([&] {
    require(report_json != nullptr && passed != nullptr, "null argument");
    fraccap::ProfileOptions options;
    options.a = a;
    options.b = b;
    options.samples = samples;
    options.oracle_points = oracle_points;
    options.seed = seed;
    const auto rows = fraccap::capacity_profile(options);
    if (csv_path != nullptr && csv_path[0] != '\0') {
      fraccap::write_profile_csv(rows, csv_path);
    }
    emit_report(fraccap::profile_report(options, rows), report_json, passed);
  });
}

fc_status fc_repro_bloch_choquet(double a, double b, double tol,
                                 char** report_json, int* passed) {
  return guarded([&] {
    require(report_json != nullptr && passed != nullptr, "null argument");
    emit_report(fraccap::bloch_choquet(a, b, tol), report_json, passed);
  });
}

fc_status fc_repro_classical_check(size_t n, size_t trials, uint64_t seed,
                                   double tol, char** report_json,
                                   int* passed) {
  return guarded([&] {
    require(report_json != nullptr && passed != nullptr, "null argument");
    emit_report(fraccap::classical_check(n, trials, seed, tol), report_json,
                passed);
  });
}

fc_status fc_repro_verify_all(uint64_t seed, size_t oracle_points,
                              const char* corrupt_check, char** report_json,
                              int* passed) {
  return guarded([&] {
    require(report_json != nullptr && passed != nullptr, "null argument");
    fraccap::VerifyOptions options;
    options.seed = seed;
    options.oracle_points = oracle_points;
    if (corrupt_check != nullptr) options.corrupt_check = corrupt_check;
    emit_report(fraccap::verify_all(options), report_json, passed);
  });
}

void fc_string_free(char* s) { std::free(s); }

}  // extern "C"
