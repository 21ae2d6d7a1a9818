// Copyright 2026 The pkp Authors
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

#include "pkp/pkp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pkp/core.h"
#include "pkp/greedy.h"
#include "pkp/instance_io.h"
#include "pkp/numerics.h"
#include "pkp/reduction.h"
#include "pkp/solve.h"
#include "pkp/status.h"

struct pkp_instance {
  pkp::Instance value;
};

struct pkp_solution {
  pkp::SolveOutcome outcome;
};

namespace {

thread_local std::string last_error;

pkp_status Fail(pkp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
pkp_status Guard(Body&& body) {
  try {
    last_error.clear();
    body();
    return PKP_OK;
  } catch (const pkp::Error& e) {
    return Fail(static_cast<pkp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PKP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(PKP_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void RequireNonNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw pkp::Error(pkp::ErrorCode::kInvalidArgument,
                     std::string(what) + " must not be NULL");
  }
}

std::vector<std::size_t> Indices(const size_t* indices, size_t count) {
  if (count > 0) RequireNonNull(indices, "indices");
  return std::vector<std::size_t>(indices, indices + count);
}

pkp::Algorithm ToAlgorithm(pkp_algorithm algorithm) {
  switch (algorithm) {
    case PKP_ALGO_EXACT:
      return pkp::Algorithm::kExact;
    case PKP_ALGO_FPTAS:
      return pkp::Algorithm::kFptas;
    case PKP_ALGO_GREEDY:
      return pkp::Algorithm::kGreedy;
    case PKP_ALGO_BRUTE:
      return pkp::Algorithm::kBrute;
  }
  throw pkp::Error(pkp::ErrorCode::kInvalidArgument, "unknown algorithm");
}

std::optional<std::size_t> MapIndex(const std::vector<std::size_t>& remap,
                                    const std::optional<std::size_t>& k) {
  if (!k) return std::nullopt;
  return remap[*k];
}

std::vector<std::size_t> MapIndices(const std::vector<std::size_t>& remap,
                                    const std::vector<std::size_t>& ks) {
  std::vector<std::size_t> out;
  out.reserve(ks.size());
  for (std::size_t k : ks) out.push_back(remap[k]);
  return out;
}

}  // namespace

extern "C" {

const char* pkp_status_name(pkp_status status) {
  if (status == PKP_OK) return "OK";
  return pkp::ErrorCodeName(static_cast<pkp::ErrorCode>(status));
}

const char* pkp_last_error(void) { return last_error.c_str(); }

void pkp_string_free(char* s) { std::free(s); }

pkp_status pkp_instance_create(const int64_t* profits, const int64_t* weights,
                               size_t n, int64_t capacity, pkp_instance** out) {
  return Guard([&] {
    RequireNonNull(out, "out");
    if (n > 0) {
      RequireNonNull(profits, "profits");
      RequireNonNull(weights, "weights");
    }
    std::vector<pkp::Item> items;
    items.reserve(n);
    for (size_t j = 0; j < n; ++j) items.push_back({profits[j], weights[j]});
    *out = new pkp_instance{pkp::Instance(std::move(items), capacity)};
  });
}

pkp_status pkp_instance_parse(const char* text, pkp_instance** out) {
  return Guard([&] {
    RequireNonNull(text, "text");
    RequireNonNull(out, "out");
    *out = new pkp_instance{pkp::ParseInstance(text)};
  });
}

pkp_status pkp_instance_read_file(const char* path, pkp_instance** out) {
  return Guard([&] {
    RequireNonNull(path, "path");
    RequireNonNull(out, "out");
    *out = new pkp_instance{pkp::ParseInstance(pkp::ReadFile(path))};
  });
}

void pkp_instance_destroy(pkp_instance* instance) { delete instance; }

size_t pkp_instance_size(const pkp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.size();
}

int64_t pkp_instance_capacity(const pkp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.capacity();
}

pkp_status pkp_instance_item(const pkp_instance* instance, size_t j,
                             int64_t* profit, int64_t* weight) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    if (j >= instance->value.size()) {
      throw pkp::Error(pkp::ErrorCode::kIndexOutOfRange,
                       "item index " + std::to_string(j) + " out of range");
    }
    if (profit != nullptr) *profit = instance->value.item(j).profit;
    if (weight != nullptr) *weight = instance->value.item(j).weight;
  });
}

pkp_status pkp_instance_to_json(const pkp_instance* instance, char** out) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(out, "out");
    *out = CopyString(pkp::InstanceToJson(instance->value));
  });
}

pkp_status pkp_instance_to_text(const pkp_instance* instance, char** out) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(out, "out");
    *out = CopyString(pkp::InstanceToText(instance->value));
  });
}

pkp_status pkp_gen_example1(int64_t m, pkp_instance** out) {
  return Guard([&] {
    RequireNonNull(out, "out");
    *out = new pkp_instance{pkp::GenExample1(m)};
  });
}

pkp_status pkp_gen_random(const pkp_random_params* params,
                          pkp_instance** out) {
  return Guard([&] {
    RequireNonNull(params, "params");
    RequireNonNull(out, "out");
    pkp::RandomInstanceParams p;
    p.n = params->n;
    p.profit_min = params->profit_min;
    p.profit_max = params->profit_max;
    p.weight_min = params->weight_min;
    p.weight_max = params->weight_max;
    p.capacity = params->capacity;
    p.neg_fraction = params->neg_fraction;
    p.seed = params->seed;
    *out = new pkp_instance{pkp::GenRandom(p)};
  });
}

pkp_status pkp_check(const pkp_instance* instance, char** report_json) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(report_json, "report_json");
    const pkp::Preprocessed pre = pkp::EnforceAssumptions(instance->value);
    nlohmann::ordered_json j;
    j["removed"] = pre.removed;
    j["forced"] = pre.forced;
    j["kept"] = pre.original_index;
    j["capacity"] = pre.instance.capacity();
    j["preprocessed"] =
        nlohmann::ordered_json::parse(pkp::InstanceToJson(pre.instance));
    *report_json = CopyString(j.dump());
  });
}

pkp_status pkp_evaluate(const pkp_instance* instance, const size_t* indices,
                        size_t count, char** value) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(value, "value");
    *value = CopyString(
        pkp::Evaluate(instance->value, Indices(indices, count)).ToString());
  });
}

pkp_status pkp_is_feasible(const pkp_instance* instance, const size_t* indices,
                           size_t count, int* feasible) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(feasible, "feasible");
    *feasible = pkp::IsFeasible(instance->value, Indices(indices, count)) ? 1 : 0;
  });
}

pkp_status pkp_solve(const pkp_instance* instance, pkp_algorithm algorithm,
                     const char* eps, pkp_solution** out) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(out, "out");
    std::optional<pkp::Rational> parsed;
    if (eps != nullptr) {
      const mpq_class value = pkp::ParseRationalValue(eps);
      if (value <= 0 || value >= 1) {
        throw pkp::Error(pkp::ErrorCode::kEpsOutOfRange,
                         std::string("eps must lie in (0, 1), got ") + eps);
      }
      parsed = pkp::Rational(value.get_num(), value.get_den());
    }
    *out = new pkp_solution{
        pkp::SolveRaw(instance->value, ToAlgorithm(algorithm), parsed)};
  });
}

void pkp_solution_destroy(pkp_solution* solution) { delete solution; }

pkp_status pkp_solution_value(const pkp_solution* solution, char** value) {
  return Guard([&] {
    RequireNonNull(solution, "solution");
    RequireNonNull(value, "value");
    *value = CopyString(solution->outcome.solution.value.ToString());
  });
}

size_t pkp_solution_size(const pkp_solution* solution) {
  return solution == nullptr ? 0 : solution->outcome.solution.indices.size();
}

size_t pkp_solution_index(const pkp_solution* solution, size_t k) {
  if (solution == nullptr || k >= solution->outcome.solution.indices.size()) {
    return SIZE_MAX;
  }
  return solution->outcome.solution.indices[k];
}

size_t pkp_solution_forced_size(const pkp_solution* solution) {
  return solution == nullptr ? 0
                             : solution->outcome.solution.forced_items.size();
}

size_t pkp_solution_forced_index(const pkp_solution* solution, size_t k) {
  if (solution == nullptr ||
      k >= solution->outcome.solution.forced_items.size()) {
    return SIZE_MAX;
  }
  return solution->outcome.solution.forced_items[k];
}

pkp_status pkp_solution_trace_json(const pkp_solution* solution, char** out) {
  return Guard([&] {
    RequireNonNull(solution, "solution");
    RequireNonNull(out, "out");
    const auto& trace = solution->outcome.trace;
    if (!trace) {
      throw pkp::Error(pkp::ErrorCode::kInvalidArgument,
                       "only greedy solutions carry a trace");
    }
    // Report the trace against raw item indices.
    const auto& remap = solution->outcome.original_index;
    pkp::GreedyTrace raw = *trace;
    raw.order = MapIndices(remap, trace->order);
    raw.split_item = MapIndex(remap, trace->split_item);
    raw.filled = MapIndices(remap, trace->filled);
    raw.removed_for_parity = MapIndex(remap, trace->removed_for_parity);
    raw.candidate_fill = MapIndices(remap, trace->candidate_fill);
    if (trace->candidate_pair) {
      raw.candidate_pair = {remap[trace->candidate_pair->first],
                            remap[trace->candidate_pair->second]};
    }
    raw.candidate_single = MapIndex(remap, trace->candidate_single);
    *out = CopyString(raw.ToJson());
  });
}

pkp_status pkp_greedy_bounds_hold(const pkp_instance* instance,
                                  const char* greedy_value,
                                  const char* optimal_value, int* holds) {
  return Guard([&] {
    RequireNonNull(instance, "instance");
    RequireNonNull(greedy_value, "greedy_value");
    RequireNonNull(optimal_value, "optimal_value");
    RequireNonNull(holds, "holds");
    const pkp::Preprocessed pre = pkp::EnforceAssumptions(instance->value);
    mpz_class greedy = pkp::BigProduct::FromString(greedy_value).raw();
    mpz_class optimal = pkp::BigProduct::FromString(optimal_value).raw();
    // Strip the common factor contributed by forced items.
    mpz_class forced = 1;
    for (std::size_t j : pre.forced) {
      forced *= static_cast<long>(instance->value.item(j).profit);
    }
    if (forced > 1 && greedy % forced == 0 && optimal % forced == 0) {
      greedy /= forced;
      optimal /= forced;
    }
    *holds = pkp::VerifyGreedyBounds(pre.instance, pkp::BigProduct(greedy),
                                     pkp::BigProduct(optimal))
                 ? 1
                 : 0;
  });
}

pkp_status pkp_rational_canonical(const char* text, char** out) {
  return Guard([&] {
    RequireNonNull(text, "text");
    RequireNonNull(out, "out");
    *out = CopyString(pkp::Rational::Parse(text).ToString());
  });
}

pkp_status pkp_ratio(const char* value, const char* reference, char** out) {
  return Guard([&] {
    RequireNonNull(value, "value");
    RequireNonNull(reference, "reference");
    RequireNonNull(out, "out");
    const mpz_class num = pkp::BigProduct::FromString(value).raw();
    const mpz_class den = pkp::BigProduct::FromString(reference).raw();
    if (num < 0 || den <= 0) {
      throw pkp::Error(pkp::ErrorCode::kInvalidArgument,
                       "ratio needs value >= 0 and reference > 0");
    }
    mpq_class q(num, den);
    q.canonicalize();
    *out = CopyString(q.get_num().get_str() + "/" + q.get_den().get_str());
  });
}

pkp_status pkp_rational_compare(const char* a, const char* b, int* cmp_out) {
  return Guard([&] {
    RequireNonNull(a, "a");
    RequireNonNull(b, "b");
    RequireNonNull(cmp_out, "cmp");
    const int c = cmp(pkp::ParseRationalValue(a), pkp::ParseRationalValue(b));
    *cmp_out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

pkp_status pkp_reduce_ppp(const int64_t* a, size_t n, pkp_instance** out,
                          char** info_json) {
  return Guard([&] {
    RequireNonNull(out, "out");
    if (n > 0) RequireNonNull(a, "a");
    pkp::ReductionOutput red =
        pkp::ReducePppToPkp(pkp::PppInstance{{a, a + n}});
    if (info_json != nullptr) {
      nlohmann::ordered_json j;
      j["M"] = red.m.get_str();
      j["target"] = red.target.get_str();
      j["normalized"] = red.normalized;
      *info_json = CopyString(j.dump());
    }
    *out = new pkp_instance{std::move(red.pkp)};
  });
}

pkp_status pkp_verify_ppp(const int64_t* a, size_t n, size_t limit,
                          char** report_json, int* holds) {
  return Guard([&] {
    if (n > 0) RequireNonNull(a, "a");
    const pkp::CorrespondenceReport report =
        pkp::VerifyCorrespondence(pkp::PppInstance{{a, a + n}}, limit);
    if (report_json != nullptr) *report_json = CopyString(report.ToJson());
    if (holds != nullptr) *holds = report.ok() ? 1 : 0;
  });
}

}  // extern "C"
