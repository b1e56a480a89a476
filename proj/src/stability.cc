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

#include "matstab/stability.h"

#include <algorithm>
#include <cstdint>

#include "matstab/matroid.h"

namespace matstab {
namespace {

constexpr std::size_t kHardOracleCap = 30;

void check_preconditions(const Instance& instance,
                         const ElementSet& independent, Element e) {
  if (!instance.ground.all().contains(e)) {
    throw DomainError("blocking check: element outside the ground set");
  }
  if (independent.contains(e)) {
    throw ContractError("blocking check: element already belongs to I");
  }
  if (!instance.is_common_independent(independent)) {
    throw ContractError("blocking check: I is not common independent");
  }
}

enum class Strictness { kWeak, kStrong };

bool dominates(const WeakOrder& order, Element e, Element f, Strictness s) {
  return s == Strictness::kWeak ? order.at_least_as_good(e, f)
                                : order.strictly_better(e, f);
}

// Precondition-free core of the circuit form.
bool blocks_on_side(const Instance& instance, const ElementSet& independent,
                    Element e, Side side, Strictness strictness) {
  const Matroid& m = instance.matroid(side);
  if (m.is_independent(independent.with(e))) return true;
  ElementSet exchangeable = fundamental_circuit(m, e, independent).without(e);
  for (Element f : exchangeable) {
    if (dominates(instance.pref(side), e, f, strictness)) return true;
  }
  return false;
}

bool blocks_by_exchange(const Instance& instance, const ElementSet& independent,
                        Element e, Side side, Strictness strictness) {
  check_preconditions(instance, independent, e);
  const Matroid& m = instance.matroid(side);
  ElementSet extended = independent.with(e);
  if (m.is_independent(extended)) return true;
  for (Element f : independent) {
    if (dominates(instance.pref(side), e, f, strictness) &&
        m.is_independent(extended.without(f))) {
      return true;
    }
  }
  return false;
}

BlockReport report_unchecked(const Instance& instance,
                             const ElementSet& independent, Element e) {
  BlockReport report;
  report.element = e;
  for (Side side : kSides) {
    const int s = static_cast<int>(side);
    const Matroid& m = instance.matroid(side);
    const WeakOrder& order = instance.pref(side);
    if (m.is_independent(independent.with(e))) {
      report.weak[s] = report.strong[s] = true;
      continue;
    }
    for (Element f : fundamental_circuit(m, e, independent).without(e)) {
      if (order.at_least_as_good(e, f)) {
        report.weak[s] = true;
        if (!report.witness_f[s]) report.witness_f[s] = f;
      }
      if (order.strictly_better(e, f)) report.strong[s] = true;
    }
  }
  const bool weak_both = report.weak[0] && report.weak[1];
  if (instance.e1.contains(e)) {
    report.verdict = weak_both;
  } else {
    report.verdict = weak_both && (report.strong[0] || report.strong[1]);
  }
  return report;
}

}  // namespace

bool weakly_blocks(const Instance& instance, const ElementSet& independent,
                   Element e, Side side) {
  check_preconditions(instance, independent, e);
  return blocks_on_side(instance, independent, e, side, Strictness::kWeak);
}

bool strongly_blocks(const Instance& instance, const ElementSet& independent,
                     Element e, Side side) {
  check_preconditions(instance, independent, e);
  return blocks_on_side(instance, independent, e, side, Strictness::kStrong);
}

bool weakly_blocks_by_exchange(const Instance& instance,
                               const ElementSet& independent, Element e,
                               Side side) {
  return blocks_by_exchange(instance, independent, e, side, Strictness::kWeak);
}

bool strongly_blocks_by_exchange(const Instance& instance,
                                 const ElementSet& independent, Element e,
                                 Side side) {
  return blocks_by_exchange(instance, independent, e, side,
                            Strictness::kStrong);
}

BlockReport blocks(const Instance& instance, const ElementSet& independent,
                   Element e) {
  check_preconditions(instance, independent, e);
  return report_unchecked(instance, independent, e);
}

ElementSet block_set(const Instance& instance, const ElementSet& independent) {
  if (!instance.is_common_independent(independent)) {
    throw ContractError("block_set: I is not common independent");
  }
  ElementSet out = instance.empty_set();
  for (Element e : instance.all() - independent) {
    if (instance.m_h.is_independent(independent.with(e))) continue;
    if (report_unchecked(instance, independent, e).verdict) out.insert(e);
  }
  return out;
}

StabilityCheck is_stable(const Instance& instance,
                         const ElementSet& independent) {
  StabilityCheck check;
  if (independent.universe() != instance.size()) {
    check.reason = "set over a different universe";
    return check;
  }
  if (!instance.is_common_independent(independent)) {
    check.reason = "not common independent";
    return check;
  }
  for (Element e : instance.all() - independent) {
    if (report_unchecked(instance, independent, e).verdict) {
      check.blocker = e;
      return check;
    }
  }
  check.stable = true;
  return check;
}

std::vector<BlockReport> blocking_reports(const Instance& instance,
                                          const ElementSet& independent) {
  if (!instance.is_common_independent(independent)) {
    throw ContractError("blocking_reports: I is not common independent");
  }
  std::vector<BlockReport> out;
  for (Element e : instance.all() - independent) {
    BlockReport report = report_unchecked(instance, independent, e);
    if (report.verdict) out.push_back(report);
  }
  return out;
}

std::vector<ElementSet> brute_force_stable_sets(const Instance& instance,
                                                std::size_t max_size) {
  const std::size_t n = instance.size();
  if (n > max_size || n > kHardOracleCap) {
    throw DomainError("brute-force oracle refuses |E| = " + std::to_string(n) +
                      " (bound " +
                      std::to_string(std::min(max_size, kHardOracleCap)) + ")");
  }
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    ElementSet candidate = ElementSet::from_mask(n, mask);
    if (is_stable(instance, candidate).stable) out.push_back(candidate);
  }
  return out;
}

}  // namespace matstab
