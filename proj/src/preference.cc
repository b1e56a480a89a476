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

#include "matstab/preference.h"

#include <algorithm>
#include <limits>
#include <sstream>

namespace matstab {

std::string_view side_name(Side side) { return side == Side::kD ? "D" : "H"; }

std::int64_t WeakOrder::tier(Element e) const {
  if (e.index >= tiers_.size()) {
    throw DomainError("element index " + std::to_string(e.index) +
                      " has no tier");
  }
  return tiers_[e.index];
}

Preference WeakOrder::compare(Element e, Element f) const {
  auto te = tier(e);
  auto tf = tier(f);
  if (te < tf) return Preference::kBetter;
  if (te > tf) return Preference::kWorse;
  return Preference::kEqual;
}

ElementSet WeakOrder::heads(const ElementSet& f) const {
  ElementSet out(f.universe());
  auto best = std::numeric_limits<std::int64_t>::max();
  for (Element e : f) best = std::min(best, tier(e));
  for (Element e : f) {
    if (tier(e) == best) out.insert(e);
  }
  return out;
}

ElementSet WeakOrder::tails(const ElementSet& f) const {
  ElementSet out(f.universe());
  auto worst = std::numeric_limits<std::int64_t>::min();
  for (Element e : f) worst = std::max(worst, tier(e));
  for (Element e : f) {
    if (tier(e) == worst) out.insert(e);
  }
  return out;
}

Instance Instance::instrumented(std::shared_ptr<OracleCounter> counter) const {
  Instance copy = *this;
  copy.m_d = m_d.instrumented(counter);
  copy.m_h = m_h.instrumented(std::move(counter));
  return copy;
}

std::string Violation::message() const {
  std::ostringstream out;
  out << clause;
  if (!witnesses.empty()) {
    out << ": ";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i > 0) out << ',';
      out << witnesses[i];
    }
  }
  if (!detail.empty()) out << " (" << detail << ')';
  return out.str();
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  const std::size_t n = instance.size();
  const ElementSet all = instance.all();

  for (Side side : kSides) {
    const std::string name = side == Side::kD ? "matroid_d" : "matroid_h";
    const Matroid& m = instance.matroid(side);
    if (m.universe() != n || m.ground() != all) {
      out.push_back({"matroid ground set differs from the elements", {}, name});
      continue;
    }
    std::vector<std::string> loops;
    for (Element e : all) {
      if (!m.is_independent(ElementSet(n, {e}))) {
        loops.push_back(instance.ground.id(e));
      }
    }
    if (!loops.empty()) {
      out.push_back({"singleton dependent", std::move(loops), name});
    }
  }
  for (Side side : kSides) {
    if (instance.pref(side).universe() != n) {
      out.push_back({"preference does not rank every element",
                     {},
                     side == Side::kD ? "pref_d" : "pref_h"});
    }
  }
  if (instance.e1.universe() != n || instance.e2.universe() != n) {
    out.push_back({"E1/E2 defined over a different universe", {}, ""});
    return out;
  }
  if (instance.e1.intersects(instance.e2)) {
    out.push_back({"E1 and E2 intersect",
                   instance.ground.names(instance.e1 & instance.e2), ""});
  }
  ElementSet uncovered = all - (instance.e1 | instance.e2);
  if (!uncovered.empty()) {
    out.push_back(
        {"element in neither E1 nor E2", instance.ground.names(uncovered), ""});
  }
  return out;
}

}  // namespace matstab
