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

#ifndef MATSTAB_STABILITY_H_
#define MATSTAB_STABILITY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matstab/element_set.h"
#include "matstab/preference.h"

namespace matstab {

// Blocking on one side S, for a common independent set I and e outside I.
// e weakly (strongly) blocks I on M_S when e is outside cl_S(I), or some f in
// C_S(e, I) - e satisfies e >=_S f (e >_S f).
//
// Both throw ContractError if I is not common independent or e is in I.
bool weakly_blocks(const Instance& instance, const ElementSet& independent,
                   Element e, Side side);
bool strongly_blocks(const Instance& instance, const ElementSet& independent,
                     Element e, Side side);

// The same predicates evaluated by scanning every f in I for an improving
// exchange I + e - f, without going through closures and circuits.
bool weakly_blocks_by_exchange(const Instance& instance,
                               const ElementSet& independent, Element e,
                               Side side);
bool strongly_blocks_by_exchange(const Instance& instance,
                                 const ElementSet& independent, Element e,
                                 Side side);

struct BlockReport {
  Element element;
  std::array<bool, 2> weak{};    // indexed by Side
  std::array<bool, 2> strong{};  // indexed by Side
  bool verdict = false;
  // Smallest f in C_S(e, I) - e with e >=_S f; absent when e can be added to
  // I outright on that side or when no such f exists.
  std::array<std::optional<Element>, 2> witness_f{};

  bool weak_on(Side s) const { return weak[static_cast<int>(s)]; }
  bool strong_on(Side s) const { return strong[static_cast<int>(s)]; }
};

// E1 elements block when weak on both sides; E2 elements additionally need
// strong blocking on at least one side.
BlockReport blocks(const Instance& instance, const ElementSet& independent,
                   Element e);

// Elements outside I that lie in cl_H(I) and block I.
ElementSet block_set(const Instance& instance, const ElementSet& independent);

struct StabilityCheck {
  bool stable = false;
  // Set when I is not a common independent set.
  std::optional<std::string> reason;
  // Smallest blocking element, if any.
  std::optional<Element> blocker;
};

// Total: a dependent input yields stable = false with a reason.
StabilityCheck is_stable(const Instance& instance,
                         const ElementSet& independent);

// Reports for every element of E \ I that blocks I. Throws ContractError if
// I is not common independent.
std::vector<BlockReport> blocking_reports(const Instance& instance,
                                          const ElementSet& independent);

inline constexpr std::size_t kDefaultOracleBound = 16;

// Every non-uniformly stable common independent set, by exhaustive subset
// enumeration in increasing bitmask order. Throws DomainError when |E|
// exceeds `max_size` (which is itself capped at 30).
std::vector<ElementSet> brute_force_stable_sets(
    const Instance& instance, std::size_t max_size = kDefaultOracleBound);

}  // namespace matstab

#endif  // MATSTAB_STABILITY_H_
