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

#ifndef MATSTAB_PREFERENCE_H_
#define MATSTAB_PREFERENCE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matstab/element_set.h"
#include "matstab/matroid.h"

namespace matstab {

enum class Side { kD, kH };

inline constexpr Side kSides[] = {Side::kD, Side::kH};

std::string_view side_name(Side side);

enum class Preference { kBetter, kEqual, kWorse };

// A total preorder given by integer tiers; a smaller tier is preferred.
// Tiers need not be contiguous.
class WeakOrder {
 public:
  WeakOrder() = default;
  explicit WeakOrder(std::vector<std::int64_t> tiers)
      : tiers_(std::move(tiers)) {}

  std::size_t universe() const { return tiers_.size(); }
  std::int64_t tier(Element e) const;
  const std::vector<std::int64_t>& tiers() const { return tiers_; }

  // Where e stands relative to f. Throws DomainError for unknown elements.
  Preference compare(Element e, Element f) const;
  bool at_least_as_good(Element e, Element f) const {
    return tier(e) <= tier(f);
  }
  bool strictly_better(Element e, Element f) const { return tier(e) < tier(f); }

  // Most-preferred elements of f; empty iff f is empty.
  ElementSet heads(const ElementSet& f) const;
  // Least-preferred elements of f; empty iff f is empty.
  ElementSet tails(const ElementSet& f) const;

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

 private:
  std::vector<std::int64_t> tiers_;
};

struct Instance {
  GroundSet ground;
  Matroid m_d;
  Matroid m_h;
  WeakOrder pref_d;
  WeakOrder pref_h;
  ElementSet e1;
  ElementSet e2;

  const Matroid& matroid(Side side) const {
    return side == Side::kD ? m_d : m_h;
  }
  const WeakOrder& pref(Side side) const {
    return side == Side::kD ? pref_d : pref_h;
  }
  std::size_t size() const { return ground.size(); }
  ElementSet all() const { return ground.all(); }
  ElementSet empty_set() const { return ground.empty_set(); }

  bool is_common_independent(const ElementSet& x) const {
    return m_d.is_independent(x) && m_h.is_independent(x);
  }

  // Copy whose two matroids report every base-oracle query to `counter`.
  Instance instrumented(std::shared_ptr<OracleCounter> counter) const;
};

struct Violation {
  std::string clause;
  std::vector<std::string> witnesses;
  std::string detail;

  std::string message() const;
};

// Empty iff every instance invariant holds.
std::vector<Violation> validate(const Instance& instance);

}  // namespace matstab

#endif  // MATSTAB_PREFERENCE_H_
