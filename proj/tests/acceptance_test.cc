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


// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <gmpxx.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pkp/core.h"
#include "pkp/exact.h"
#include "pkp/fptas.h"
#include "pkp/greedy.h"
#include "pkp/numerics.h"
#include "pkp/reduction.h"
#include "test_util.h"

namespace pkp {
namespace {

using Float256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256>>;

constexpr std::uint64_t kInstances = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
};

mpz_class Z(long v) { return mpz_class(v); }

std::vector<Instance> AcceptanceFamily() {
  std::vector<Instance> family;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    family.push_back(testing::AcceptanceInstance(seed).instance);
  }
  return family;
}

Outcome OracleEquivalence(const std::vector<Instance>& family) {
  int mismatches = 0;
  for (const Instance& inst : family) {
    if (SolveExactDp(inst).value != SolveBruteForce(inst).value) ++mismatches;
  }
  return {mismatches == 0, std::to_string(family.size()) + " instances, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome FptasGuarantee(const std::vector<Instance>& family) {
  const Rational eps_list[] = {Rational(Z(1), Z(2)), Rational(Z(1), Z(10)),
                               Rational(Z(1), Z(100))};
  int violations = 0;
  int runs = 0;
  for (const Instance& inst : family) {
    if (inst.empty()) continue;
    const mpz_class opt = SolveBruteForce(inst).value.raw();
    for (const Rational& eps : eps_list) {
      const Solution sol = SolveFptas(inst, eps);
      ++runs;
      // value >= (1 - num/den) * opt, cleared of denominators.
      const bool ok = sol.value.raw() * eps.den() >=
                          (eps.den() - eps.num()) * opt &&
                      IsFeasible(inst, sol.indices) &&
                      Evaluate(inst, sol.indices) == sol.value;
      if (!ok) ++violations;
    }
  }
  return {violations == 0, std::to_string(runs) + " runs, " +
                               std::to_string(violations) + " violations"};
}

Outcome FptasScaling(const std::vector<Instance>& family) {
  int length_errors = 0;
  int doubling_errors = 0;
  int checked = 0;
  const Rational tenth(Z(1), Z(10));
  const Rational twentieth(Z(1), Z(20));
  for (const Instance& inst : family) {
    if (inst.empty()) continue;
    const ScaledInstance coarse = ScaleProfits(inst, tenth);
    const ScaledInstance fine = ScaleProfits(inst, twentieth);
    if (ParityDpTables(coarse).size() != inst.size() * coarse.scaled_max + 1) {
      ++length_errors;
    }
    const std::int64_t diff = static_cast<std::int64_t>(fine.scaled_max) -
                              2 * static_cast<std::int64_t>(coarse.scaled_max);
    if (diff < -1 || diff > 1) ++doubling_errors;
    ++checked;
  }
  return {length_errors == 0 && doubling_errors == 0,
          std::to_string(checked) + " instances, " +
              std::to_string(length_errors) + " table-length errors, " +
              std::to_string(doubling_errors) + " doubling errors"};
}

Outcome GreedyBounds(const std::vector<Instance>& family) {
  int violations = 0;
  std::vector<Instance> all = family;
  for (std::int64_t m : {10, 100, 1000}) {
    all.push_back(EnforceAssumptions(GenExample1(m)).instance);
  }
  for (const Instance& inst : all) {
    const mpz_class zh = SolveGreedy(inst).solution.value.raw();
    const mpz_class opt = SolveExactDp(inst).value.raw();
    const mpz_class p_max(static_cast<long>(inst.MaxAbsProfit()));
    if (zh * zh * zh < opt || zh * p_max * p_max < opt) ++violations;
  }
  return {violations == 0, std::to_string(all.size()) + " instances, " +
                               std::to_string(violations) + " violations"};
}

Outcome ExampleOne() {
  Outcome out;
  for (std::int64_t m : {10, 100, 1000}) {
    if (!out.detail.empty()) out.detail += "; ";
    const Instance inst = EnforceAssumptions(GenExample1(m)).instance;
    const BigProduct zh = SolveGreedy(inst).solution.value;
    const BigProduct opt = SolveExactDp(inst).value;
    const bool greedy_ok = zh == BigProduct(2 * (m + 2));
    const bool opt_ok = opt == BigProduct(m * m * m);
    out.pass = out.pass && greedy_ok && opt_ok;
    out.detail += "M=" + std::to_string(m) + ": z^H=" + zh.ToString() +
                  (greedy_ok ? " ok" : " MISMATCH") + ", z*=" + opt.ToString() +
                  " (expected M^3=" + std::to_string(m * m * m) + ")" +
                  (opt_ok ? " ok" : " MISMATCH");
  }
  return out;
}

// Independent check of one reduced instance against subset enumeration.
bool CheckReduction(const std::vector<std::int64_t>& a) {
  const ReductionOutput red = ReducePppToPkp({a});
  const std::size_t n = a.size();
  mpz_class total = 1;
  for (std::int64_t v : a) total *= static_cast<long>(v);
  bool ppp_yes = false;
  mpz_class pkp_opt = 0;
  bool chain = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    mpz_class prod = 1;
    std::int64_t weight = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        prod *= static_cast<long>(a[j]);
        weight += red.pkp.item(j).weight;
      }
    }
    if (prod * prod == total) ppp_yes = true;
    if (mask != 0 && weight <= red.pkp.capacity() && prod > pkp_opt) {
      pkp_opt = prod;
    }
    if (prod >= red.target + 1 && weight < red.pkp.capacity() + 1) {
      chain = false;
    }
  }
  const bool equivalence = ppp_yes == (pkp_opt >= red.target);
  const bool equality = !ppp_yes || pkp_opt == red.target;
  const CorrespondenceReport report = VerifyCorrespondence({a}, 10);
  const bool library_agrees = report.ok() && report.ppp_yes == ppp_yes &&
                              report.pkp_optimum.raw() == pkp_opt;
  return equivalence && equality && chain && library_agrees;
}

Outcome ReductionCorrespondence() {
  int violations = 0;
  int yes_instances = 0;
  for (std::uint64_t sample = 0; sample < 200; ++sample) {
    std::mt19937_64 rng(1000 + sample);
    std::vector<std::int64_t> a;
    for (;;) {
      a.assign(1 + rng() % 8, 0);
      mpz_class prod = 1;
      for (auto& v : a) {
        v = 2 + static_cast<std::int64_t>(rng() % 8);
        prod *= static_cast<long>(v);
      }
      if (prod <= 10000 && mpz_perfect_square_p(prod.get_mpz_t())) break;
    }
    if (SolvePppBruteForce({a})) ++yes_instances;
    if (!CheckReduction(a)) ++violations;
  }
  return {violations == 0, "200 samples (" + std::to_string(yes_instances) +
                               " yes), " + std::to_string(violations) +
                               " violations"};
}

Outcome ExactLogKernel() {
  std::mt19937_64 rng(2024);
  int random_checked = 0;
  int skipped = 0;
  int random_errors = 0;
  const Float256 ln2 = boost::multiprecision::log(Float256(2));
  while (random_checked < 10000) {
    const long x = 1 + static_cast<long>(rng() % 1000000);
    const long num = 1 + static_cast<long>(rng() % 1000);
    const long den = 1 + static_cast<long>(rng() % 1000);
    const Float256 v =
        Float256(num) / Float256(den) * boost::multiprecision::log(Float256(x)) /
        ln2;
    const Float256 fl = boost::multiprecision::floor(v);
    const Float256 frac = v - fl;
    if (frac < Float256(1e-6) || frac > 1 - Float256(1e-6)) {
      ++skipped;
      continue;
    }
    if (FloorScaledLog2(Z(x), Rational(Z(num), Z(den))) !=
        fl.convert_to<std::uint64_t>()) {
      ++random_errors;
    }
    ++random_checked;
  }
  int boundary_checked = 0;
  int boundary_errors = 0;
  for (long k = 1; boundary_checked < 100; ++k) {
    for (long delta : {-1L, 0L, 1L}) {
      if (boundary_checked == 100) break;
      const long x = (1L << (k % 40 + 1)) + delta;
      const long num = 1 + (k * 37) % 97;
      const long den = 1 + (k * 11) % 13;
      const Rational c(Z(num), Z(den));
      if (FloorScaledLog2(Z(x), c) !=
          testing::OracleFloorScaledLog2(Z(x), c.num(), c.den())) {
        ++boundary_errors;
      }
      ++boundary_checked;
    }
  }
  return {random_errors == 0 && boundary_errors == 0,
          std::to_string(random_checked) + " random cases (" +
              std::to_string(skipped) + " near-integer skipped), " +
              std::to_string(random_errors) + " errors; " +
              std::to_string(boundary_checked) + " boundary cases, " +
              std::to_string(boundary_errors) + " errors"};
}

Outcome LogInequalities() {
  int gap_failures = 0;
  for (long x = 1; x <= 1000000; ++x) {
    const long double xd = static_cast<long double>(x);
    const long double lhs = std::log1p(1.0L / xd) / std::log(2.0L);
    if (lhs < 1.0L / (xd + 1)) ++gap_failures;
  }
  int eps_failures = 0;
  constexpr int kGrid = 100000;
  for (int i = 1; i < kGrid; ++i) {
    const long double eps = static_cast<long double>(i) / kGrid;
    if (eps > -std::log1p(-eps) / std::log(2.0L)) ++eps_failures;
  }
  return {gap_failures == 0 && eps_failures == 0,
          "log2(x+1) - log2(x) >= 1/(x+1) on x=1..10^6: " + std::to_string(gap_failures) +
              " failures; eps <= -log2(1-eps) on " + std::to_string(kGrid - 1) +
              " grid points: " + std::to_string(eps_failures) +
              " failures"};
}

}  // namespace
}  // namespace pkp

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<pkp::Instance> family = pkp::AcceptanceFamily();
  const std::pair<const char*, std::function<pkp::Outcome()>> criteria[] = {
      {"1 oracle equivalence", [&] { return pkp::OracleEquivalence(family); }},
      {"2 fptas guarantee", [&] { return pkp::FptasGuarantee(family); }},
      {"3 fptas scaling", [&] { return pkp::FptasScaling(family); }},
      {"4 greedy bounds", [&] { return pkp::GreedyBounds(family); }},
      {"5 example 1 reproduction", pkp::ExampleOne},
      {"6 reduction correspondence", pkp::ReductionCorrespondence},
      {"7 exact-log kernel", pkp::ExactLogKernel},
      {"8 log inequalities", pkp::LogInequalities},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    pkp::Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::printf("%s criterion %s: %s [%.0f ms]\n",
                outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str(),
                ms);
    if (!outcome.pass) ++failed;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
