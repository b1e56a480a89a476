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

#include "matstab/layered.h"

namespace matstab {
namespace {

void check_within(const Instance& instance, const ElementSet& f) {
  if (f.universe() != instance.size()) {
    throw DomainError("layered construction: set over a different universe");
  }
}

LayeredMatroid assemble(Side side, std::vector<Layer> layers,
                        std::size_t universe) {
  if (layers.empty()) {
    return LayeredMatroid{side, {}, Matroid::empty(universe)};
  }
  std::vector<Matroid> minors;
  minors.reserve(layers.size());
  for (const auto& layer : layers) minors.push_back(layer.minor);
  Matroid whole = Matroid::direct_sum(minors);
  return LayeredMatroid{side, std::move(layers), std::move(whole)};
}

}  // namespace

ElementSet LayeredMatroid::prefix(std::size_t count) const {
  ElementSet out(whole.universe());
  for (std::size_t s = 0; s < count && s < layers.size(); ++s) {
    out |= layers[s].tier_set;
  }
  return out;
}

LayeredMatroid build_layered_d(const Instance& instance, const ElementSet& f) {
  check_within(instance, f);
  std::vector<Layer> layers;
  ElementSet remaining = f;
  Matroid current = instance.m_d;
  while (!remaining.empty()) {
    ElementSet head = instance.pref_d.heads(remaining);
    remaining -= head;
    layers.push_back({head, current.restrict_to(head)});
    current = current.contract(head);
  }
  return assemble(Side::kD, std::move(layers), instance.size());
}

LayeredMatroid build_layered_h(const Instance& instance, const ElementSet& f) {
  check_within(instance, f);
  std::vector<Layer> layers;
  ElementSet remaining = f;
  Matroid current = instance.m_h;
  while (!remaining.empty()) {
    const ElementSet head = instance.pref_h.heads(remaining);
    if (!head.is_subset_of(instance.e1 | instance.e2)) {
      throw DomainError("build_layered_h: element in neither E1 nor E2");
    }
    for (const ElementSet* part : {&instance.e1, &instance.e2}) {
      ElementSet tier_set = head & *part;
      if (tier_set.empty()) continue;
      remaining -= tier_set;
      layers.push_back({tier_set, current.restrict_to(tier_set)});
      current = current.contract(tier_set);
    }
  }
  return assemble(Side::kH, std::move(layers), instance.size());
}

ElementSet choice_d(const Instance& instance, const ElementSet& f) {
  check_within(instance, f);
  ElementSet chosen = instance.empty_set();
  ElementSet remaining = f;
  Matroid current = instance.m_d;
  while (!remaining.empty()) {
    ElementSet head = instance.pref_d.heads(remaining);
    remaining -= head;
    for (Element e : head) {
      if (current.is_independent(ElementSet(instance.size(), {e}))) {
        chosen.insert(e);
      }
    }
    current = current.contract(head);
  }
  return chosen;
}

}  // namespace matstab
