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

// Unweighted matroid intersection by shortest augmenting paths, Edmonds'
// min-max function, the critical subset, and exchange-graph cycle utilities.

#ifndef MATSTAB_INTERSECTION_H_
#define MATSTAB_INTERSECTION_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matstab/element_set.h"
#include "matstab/matroid.h"

namespace matstab {

// Exchange graph of a common independent set I of (m1, m2):
//   v -> u  (v in I, u not in I)  iff u in cl_1(I) and v in C_1(u, I),
//   u -> v  (u not in I, v in I)  iff u in cl_2(I) and v in C_2(u, I).
class ExchangeGraph {
 public:
  ExchangeGraph() = default;
  explicit ExchangeGraph(ElementSet vertices);

  const ElementSet& vertices() const { return vertices_; }
  std::size_t universe() const { return vertices_.universe(); }

  void add_arc(Element from, Element to);
  bool has_arc(Element from, Element to) const;
  // Out-neighbours in canonical order.
  const std::vector<Element>& successors(Element v) const;
  // All arcs sorted by (from, to).
  std::vector<std::pair<Element, Element>> arcs() const;
  std::size_t arc_count() const;

 private:
  ElementSet vertices_;
  std::vector<ElementSet> out_sets_;
  std::vector<std::vector<Element>> out_;
};

// A directed cycle given by its vertex sequence; the closing arc runs from
// the last vertex back to the first.
using Cycle = std::vector<Element>;

// Throws ContractError if `independent` is not common independent and
// DomainError if the two ground sets differ.
ExchangeGraph exchange_graph(const Matroid& m1, const Matroid& m2,
                             const ElementSet& independent);

struct IntersectionResult {
  ElementSet independent;  // a maximum-cardinality common independent set
  ElementSet critical;     // the inclusion-wise minimal minimizer of mu
  std::size_t augmentations = 0;
};

// Augments along lexicographically smallest shortest paths from
// X1 = {u : I + u in I_1} to X2 = {u : I + u in I_2}, starting from the
// empty set. When no path is left, the critical subset is the set of
// vertices reachable from X1.
IntersectionResult intersect(const Matroid& m1, const Matroid& m2);

ElementSet max_common_independent(const Matroid& m1, const Matroid& m2);
ElementSet critical_subset(const Matroid& m1, const Matroid& m2);

// rk_1(U \ X) + rk_2(X).
std::size_t mu(const Matroid& m1, const Matroid& m2, const ElementSet& x);

// (I with the cycle's outside vertices added) minus its inside vertices.
// Throws ContractError unless `cycle` is a simple directed cycle of `graph`.
ElementSet apply_cycle(const ElementSet& independent, const Cycle& cycle,
                       const ExchangeGraph& graph);

// A simple directed cycle admitting no shortcut arc, or nullopt when the
// graph is acyclic.
std::optional<Cycle> shortcut_free_cycle(const ExchangeGraph& graph);

// An arc that is not on `cycle` but joins two of its vertices; adding it to
// the cycle closes a strictly shorter simple cycle.
std::optional<std::pair<Element, Element>> find_shortcut_arc(
    const ExchangeGraph& graph, const Cycle& cycle);

}  // namespace matstab

#endif  // MATSTAB_INTERSECTION_H_
