// Copyright 2026 The Authors.
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. All tolerances are pinned below.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "matstab/generators.h"
#include "matstab/intersection.h"
#include "matstab/layered.h"
#include "matstab/solver.h"
#include "matstab/stability.h"
#include "support/oracles.h"

namespace {

using namespace matstab;
namespace orc = matstab::oracle;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kCriterion1Seconds = 120.0;
constexpr double kCriterion5Seconds = 30.0;
constexpr double kCriterion7RunSeconds = 60.0;
constexpr double kCallBudgetFactor = 10.0;  // calls <= factor * n^6
constexpr int kRandomInstances = 300;       // per matroid family
constexpr int kMatroidPairs = 200;
constexpr int kLemmaRandomInstances = 150;  // per matroid family
constexpr int kBudgetSeeds = 3;
constexpr std::size_t kMaxReportedFailures = 5;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    ++failed;
    if (notes.size() < kMaxReportedFailures) notes.push_back(what);
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok) fail(what());
  }
};

bool report(int number, const std::string& title, const Result& r,
            const std::string& extra, bool extra_ok = true) {
  const bool pass = r.failed == 0 && r.checked > 0 && extra_ok;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << title << " (" << r.checked << " checks, " << r.failed
            << " failures" << (extra.empty() ? "" : ", " + extra) << ")\n";
  for (const auto& note : r.notes) std::cout << "    " << note << '\n';
  return pass;
}

// Runs one check; an exception (for example a solver audit failure) counts
// as a failure of the criterion instead of aborting the suite.
template <typename Body>
void guarded(Result& r, const std::string& label, Body body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++r.checked;
    r.fail(label + ": threw: " + e.what());
  }
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

// Tier tables for the 2 x 2 family: digit k of `code` in base 3 is the tier
// of the k-th (agent, partner) pair.
std::vector<std::vector<int>> tier_table(int code) {
  std::vector<std::vector<int>> t(2, std::vector<int>(2));
  for (int k = 0; k < 4; ++k) {
    t[k / 2][k % 2] = code % 3;
    code /= 3;
  }
  return t;
}

const std::vector<std::string> kPairIds = {"m1w1", "m1w2", "m2w1", "m2w2"};

std::vector<std::string> e1_ids(int labeling) {
  std::vector<std::string> out;
  for (int k = 0; k < 4; ++k) {
    if ((labeling >> k) & 1) out.push_back(kPairIds[k]);
  }
  return out;
}

// Stability of a one-to-one matching read straight off the tier tables:
// (m, w) outside the matching blocks when each of m, w is unmatched or likes
// the other at least as much as the current partner, and for E2 pairs at
// least one of them is unmatched or strictly prefers the other.
bool classic_stable(const std::vector<std::vector<int>>& men,
                    const std::vector<std::vector<int>>& women,
                    const std::vector<std::pair<int, int>>& matching,
                    const std::vector<bool>& pair_in_e1) {
  std::vector<int> wife(2, -1), husband(2, -1);
  for (auto [m, w] : matching) {
    wife[m] = w;
    husband[w] = m;
  }
  for (int m = 0; m < 2; ++m) {
    for (int w = 0; w < 2; ++w) {
      if (wife[m] == w) continue;
      const bool m_weak = wife[m] < 0 || men[m][w] <= men[m][wife[m]];
      const bool m_strict = wife[m] < 0 || men[m][w] < men[m][wife[m]];
      const bool w_weak = husband[w] < 0 || women[w][m] <= women[w][husband[w]];
      const bool w_strict =
          husband[w] < 0 || women[w][m] < women[w][husband[w]];
      const bool blocks = pair_in_e1[m * 2 + w]
                              ? m_weak && w_weak
                              : m_weak && w_weak && (m_strict || w_strict);
      if (blocks) return false;
    }
  }
  return true;
}

bool classic_exists(const std::vector<std::vector<int>>& men,
                    const std::vector<std::vector<int>>& women,
                    const std::vector<bool>& pair_in_e1) {
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::pair<int, int>> matching;
    std::vector<int> deg_m(2, 0), deg_w(2, 0);
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      if (!((mask >> k) & 1)) continue;
      const int m = k / 2, w = k % 2;
      if (++deg_m[m] > 1 || ++deg_w[w] > 1) ok = false;
      matching.emplace_back(m, w);
    }
    if (ok && classic_stable(men, women, matching, pair_in_e1)) return true;
  }
  return false;
}

std::vector<Instance> random_family(int count, int max_size, bool explicit_kind,
                                    std::uint64_t seed_base) {
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) {
    RandomParams p;
    p.size = 1 + k % max_size;
    p.tier_levels = 1 + k % 3;
    p.e1 = E1Mode::kRandom;
    const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(k);
    out.push_back(explicit_kind ? generate_random_explicit(p, seed)
                                : generate_random_partition(p, seed));
  }
  return out;
}

Instance with_e1(Instance inst, bool all_e1) {
  inst.e1 = all_e1 ? inst.all() : inst.empty_set();
  inst.e2 = inst.all() - inst.e1;
  return inst;
}

// Criteria 1 and 2 share the instance sweep.
struct SweepResults {
  Result existence;
  Result soundness;
  double seconds = 0;
};

void check_existence(const Instance& inst, const std::string& label,
                     SweepResults& out) {
  guarded(out.existence, label, [&] {
    const Outcome outcome = solve(inst);
    const auto listed = brute_force_stable_sets(inst);
    const auto flat = orc::flatten(inst);
    const auto independent = orc::stable_sets(flat);
    out.existence.expect(outcome.exists() == !listed.empty(), [&] {
      return label + ": solver says " + (outcome.exists() ? "yes" : "no") +
             ", enumeration finds " + std::to_string(listed.size());
    });
    out.existence.expect(listed.size() == independent.size(), [&] {
      return label + ": library enumeration and reference oracle disagree";
    });
    if (outcome.exists()) {
      const ElementSet& s = outcome.stable_set;
      out.soundness.expect(is_stable(inst, s).stable &&
                               inst.m_d.is_independent(s) &&
                               inst.m_h.is_independent(s) &&
                               orc::nonuniform_stable(flat, orc::to_mask(s)),
                           [&] {
                             return label + ": returned " +
                                    inst.ground.format(s) + " is not stable";
                           });
    }
  });
}

SweepResults criteria_1_and_2() {
  SweepResults out;
  const auto start = Clock::now();
  for (int men = 0; men < 81; ++men) {
    for (int women = 0; women < 81; ++women) {
      const auto mt = tier_table(men);
      const auto wt = tier_table(women);
      for (int labeling = 0; labeling < 16; ++labeling) {
        Instance inst = make_marriage_with_e1(mt, wt, e1_ids(labeling));
        check_existence(inst,
                        "marriage " + std::to_string(men) + "/" +
                            std::to_string(women) + "/" +
                            std::to_string(labeling),
                        out);
      }
    }
  }
  for (bool explicit_kind : {false, true}) {
    auto family = random_family(kRandomInstances, 8, explicit_kind, 1000);
    for (std::size_t k = 0; k < family.size(); ++k) {
      check_existence(family[k],
                      std::string(explicit_kind ? "explicit" : "partition") +
                          " seed " + std::to_string(1000 + k),
                      out);
    }
  }
  out.seconds = seconds_since(start);
  return out;
}

Result criterion_3() {
  Result r;
  // Marriage family against the matching-level definitions.
  for (int men = 0; men < 81; ++men) {
    for (int women = 0; women < 81; ++women) {
      const auto mt = tier_table(men);
      const auto wt = tier_table(women);
      for (bool all_e1 : {true, false}) {
        Instance inst =
            make_marriage(mt, wt, all_e1 ? E1Mode::kAll : E1Mode::kNone);
        const bool expected =
            classic_exists(mt, wt, std::vector<bool>(4, all_e1));
        const auto flat = orc::flatten(inst);
        const bool by_matroid =
            all_e1 ? !orc::all_sets(flat, orc::super_stable).empty()
                   : !orc::all_sets(flat, orc::strongly_stable).empty();
        r.expect(by_matroid == expected, [&] {
          return "marriage " + std::to_string(men) + "/" +
                 std::to_string(women) +
                 ": matroid-level and matching-level oracles disagree";
        });
        guarded(r, "marriage", [&] {
          r.expect(solve(inst).exists() == expected, [&] {
            return "marriage " + std::to_string(men) + "/" +
                   std::to_string(women) + (all_e1 ? " (E1=E)" : " (E2=E)") +
                   ": solver disagrees";
          });
        });
      }
    }
  }
  // Random matroid families with every element relabelled.
  for (bool explicit_kind : {false, true}) {
    auto family = random_family(kRandomInstances, 8, explicit_kind, 1000);
    for (std::size_t k = 0; k < family.size(); ++k) {
      for (bool all_e1 : {true, false}) {
        Instance inst = with_e1(family[k], all_e1);
        const auto flat = orc::flatten(inst);
        const bool expected =
            all_e1 ? !orc::all_sets(flat, orc::super_stable).empty()
                   : !orc::all_sets(flat, orc::strongly_stable).empty();
        guarded(r, "random", [&] {
          r.expect(solve(inst).exists() == expected, [&] {
            return std::string(explicit_kind ? "explicit" : "partition") +
                   " seed " + std::to_string(1000 + k) +
                   (all_e1 ? " (E1=E)" : " (E2=E)") + ": solver disagrees";
          });
        });
      }
    }
  }
  return r;
}

Result criterion_4() {
  Result r;
  const std::vector<std::vector<int>> ties = {{0, 0}, {0, 0}};
  // Enumeration first, straight from the definitions.
  for (bool all_e1 : {true, false}) {
    Instance inst =
        make_marriage(ties, ties, all_e1 ? E1Mode::kAll : E1Mode::kNone);
    const auto flat = orc::flatten(inst);
    const auto sets = orc::stable_sets(flat);
    if (all_e1) {
      r.expect(sets.empty(),
               [] { return "E1=E: enumeration found a stable set"; });
      guarded(r, "E1=E", [&] {
        r.expect(!solve(inst).exists(), [] { return "E1=E: solver says yes"; });
      });
    } else {
      const orc::Mask diag = orc::to_mask(inst.ground.set_of({"m1w1", "m2w2"}));
      const orc::Mask anti = orc::to_mask(inst.ground.set_of({"m1w2", "m2w1"}));
      r.expect(
          sets == std::vector<orc::Mask>{diag, anti} ||
              sets == std::vector<orc::Mask>{anti, diag},
          [] {
            return "E2=E: enumeration does not list both perfect matchings";
          });
      guarded(r, "E2=E", [&] {
        const Outcome out = solve(inst);
        const orc::Mask got = orc::to_mask(out.stable_set);
        r.expect(out.exists() && (got == diag || got == anti), [] {
          return "E2=E: solver did not return a perfect matching";
        });
      });
    }
  }
  return r;
}

Result criterion_5(double& seconds) {
  Result r;
  const auto start = Clock::now();
  for (int k = 0; k < kMatroidPairs; ++k) {
    RandomParams p;
    p.size = 1 + k % 8;
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(k);
    Instance inst = k % 2 == 0 ? generate_random_partition(p, seed)
                               : generate_random_explicit(p, seed);
    // Every third pair intersects a restriction with a contraction, so minors
    // are covered too.
    Matroid m1 = inst.m_d;
    Matroid m2 = inst.m_h;
    if (k % 3 == 2) {
      ElementSet keep = inst.empty_set();
      for (Element e : inst.all()) {
        if (e.index % 2 == 0) keep.insert(e);
      }
      m1 = inst.m_d.restrict_to(keep);
      m2 = inst.m_h.contract(inst.all() - keep);
    }
    const auto t1 = orc::tabulate(m1);
    const auto t2 = orc::tabulate(m2);
    const auto summary = orc::summarize_mu(t1, t2);
    const IntersectionResult result = intersect(m1, m2);
    orc::Mask meet = t1.ground;
    for (orc::Mask x : summary.minimizers) meet &= x;
    const std::string label = "pair seed " + std::to_string(seed);
    r.expect(
        static_cast<int>(result.independent.size()) == summary.min_value &&
            summary.max_common == summary.min_value,
        [&] { return label + ": max common independent differs from min mu"; });
    r.expect(t1.independent(orc::to_mask(result.independent)) &&
                 t2.independent(orc::to_mask(result.independent)),
             [&] { return label + ": result is not common independent"; });
    r.expect(orc::to_mask(result.critical) == meet, [&] {
      return label + ": critical subset " +
             inst.ground.format(result.critical) +
             " differs from the meet of minimizers " +
             orc::show(inst.size(), meet);
    });
  }
  seconds = seconds_since(start);
  return r;
}

void lemma_checks(const Instance& inst, const std::string& label, Result& r) {
  guarded(r, label, [&] {
    const auto flat = orc::flatten(inst);
    for (orc::Mask f : orc::submasks(flat.all)) {
      const ElementSet fs = orc::to_set(flat.n, f);
      const std::string where = label + " F=" + inst.ground.format(fs);
      const LayeredMatroid ld = build_layered_d(inst, fs);
      const LayeredMatroid lh = build_layered_h(inst, fs);
      const auto td = orc::tabulate(ld.whole);
      const auto th = orc::tabulate(lh.whole);
      auto expect_ok = [&](orc::Failure failure, const char* lemma) {
        r.expect(!failure,
                 [&] { return where + ": " + lemma + ": " + *failure; });
      };
      expect_ok(orc::check_layered_semantics(flat.d, ld, td),
                "layered D semantics");
      expect_ok(orc::check_layered_semantics(flat.h, lh, th),
                "layered H semantics");
      expect_ok(orc::check_base_prefixes(flat.d, ld, td), "base_matroid_D");
      expect_ok(orc::check_base_prefixes(flat.h, lh, th), "base_matroid_H");
      expect_ok(orc::check_layered_circuits(flat, Side::kD, td),
                "circuit_matroid_D");
      expect_ok(orc::check_layered_circuits(flat, Side::kH, th),
                "circuit_matroid_H");
      expect_ok(orc::check_tails(flat, f, td), "tail_D / tail_circuit_D");
      const orc::Mask k = orc::to_mask(choice_d(inst, fs));
      expect_ok(
          orc::check_choice(flat, f, k),
          "strong_dominance_choice_D / outside_choice_D / outside_circuit");
      const auto tk =
          orc::tabulate(build_layered_d(inst, orc::to_set(flat.n, k)).whole);
      r.expect(flat.d.rank(f) == tk.rank(k),
               [&] { return where + ": rank_equal fails"; });
    }
    const Outcome outcome = solve(inst, {.audit = false});
    const auto failure = orc::check_trace(inst, flat, outcome);
    r.expect(!failure, [&] { return label + ": solver trace: " + *failure; });
  });
}

Result criterion_6() {
  Result r;
  for (int men = 0; men < 81; men += 4) {
    for (int women = 0; women < 81; women += 5) {
      for (int labeling : {0, 5, 15}) {
        lemma_checks(make_marriage_with_e1(tier_table(men), tier_table(women),
                                           e1_ids(labeling)),
                     "marriage " + std::to_string(men) + "/" +
                         std::to_string(women) + "/" + std::to_string(labeling),
                     r);
      }
    }
  }
  for (bool explicit_kind : {false, true}) {
    auto family = random_family(kLemmaRandomInstances, 6, explicit_kind, 7000);
    for (std::size_t k = 0; k < family.size(); ++k) {
      lemma_checks(family[k],
                   std::string(explicit_kind ? "explicit" : "partition") +
                       " seed " + std::to_string(7000 + k),
                   r);
    }
  }
  return r;
}

Result criterion_7(double& slowest) {
  Result r;
  slowest = 0;
  for (int n : {8, 16, 32, 64}) {
    double budget = kCallBudgetFactor;
    for (int i = 0; i < 6; ++i) budget *= n;
    for (int seed = 0; seed < kBudgetSeeds; ++seed) {
      RandomParams p;
      p.size = n;
      p.tier_levels = 3;
      p.e1 = E1Mode::kRandom;
      Instance inst = generate_random_partition(p, 9000 + seed);
      auto counter = std::make_shared<OracleCounter>();
      Instance counted = inst.instrumented(counter);
      const auto start = Clock::now();
      guarded(r, "n=" + std::to_string(n),
              [&] { solve(counted, {.audit = false}); });
      const double s = seconds_since(start);
      slowest = std::max(slowest, s);
      const auto calls = counter->calls();
      r.expect(
          static_cast<double>(calls) <= budget && s < kCriterion7RunSeconds,
          [&] {
            return "n=" + std::to_string(n) + " seed " + std::to_string(seed) +
                   ": " + std::to_string(calls) + " calls, " + fmt_seconds(s);
          });
      std::cout << "    n=" << n << " seed=" << seed
                << " oracle_calls=" << calls
                << " budget=" << static_cast<std::uint64_t>(budget)
                << " time=" << fmt_seconds(s) << '\n';
    }
  }
  return r;
}

}  // namespace

int main() {
  bool all_pass = true;

  SweepResults sweep = criteria_1_and_2();
  all_pass &= report(1, "existence agreement with exhaustive enumeration",
                     sweep.existence, "runtime " + fmt_seconds(sweep.seconds),
                     sweep.seconds < kCriterion1Seconds);
  all_pass &= report(2, "every returned set is stable and common independent",
                     sweep.soundness, "");

  all_pass &=
      report(3, "super-stable (E1=E) and strongly stable (E2=E) agreement",
             criterion_3(), "");

  all_pass &=
      report(4, "all-ties 2x2: no set for E1=E, a perfect matching for E2=E",
             criterion_4(), "");

  double seconds5 = 0;
  Result r5 = criterion_5(seconds5);
  all_pass &=
      report(5, "min-max equality and critical subset = meet of minimizers", r5,
             "runtime " + fmt_seconds(seconds5), seconds5 < kCriterion5Seconds);

  all_pass &= report(6, "layering and solver-trace lemma suite on |E| <= 6",
                     criterion_6(), "");

  double slowest = 0;
  Result r7 = criterion_7(slowest);
  all_pass &=
      report(7, "oracle calls within 10 * |E|^6 for |E| in {8,16,32,64}", r7,
             "slowest run " + fmt_seconds(slowest));

  return all_pass ? 0 : 1;
}
