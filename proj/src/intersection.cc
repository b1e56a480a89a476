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

#include "matstab/intersection.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace matstab {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void check_same_ground(const Matroid& m1, const Matroid& m2) {
  if (m1.universe() != m2.universe() || m1.ground() != m2.ground()) {
    throw DomainError("matroid intersection: ground sets differ");
  }
}

struct Augmentable {
  ExchangeGraph graph;
  ElementSet sources;  // X1
  ElementSet sinks;    // X2
};

Augmentable build(const Matroid& m1, const Matroid& m2,
                  const ElementSet& independent) {
  Augmentable out{ExchangeGraph(m1.ground()), ElementSet(m1.universe()),
                  ElementSet(m1.universe())};
  for (Element u : m1.ground() - independent) {
    ElementSet extended = independent.with(u);
    if (m1.is_independent(extended)) {
      out.sources.insert(u);
    } else {
      for (Element v : independent) {
        if (m1.is_independent(extended.without(v))) out.graph.add_arc(v, u);
      }
    }
    if (m2.is_independent(extended)) {
      out.sinks.insert(u);
    } else {
      for (Element v : independent) {
        if (m2.is_independent(extended.without(v))) out.graph.add_arc(u, v);
      }
    }
  }
  return out;
}

// Lexicographically smallest among the shortest source-to-sink paths.
std::optional<std::vector<Element>> shortest_path(const Augmentable& a) {
  const std::size_t n = a.graph.universe();
  std::vector<std::vector<Element>> predecessors(n);
  for (Element v : a.graph.vertices()) {
    for (Element w : a.graph.successors(v)) predecessors[w.index].push_back(v);
  }
  std::vector<std::size_t> to_sink(n, kUnreached);
  std::deque<Element> queue;
  for (Element s : a.sinks) {
    to_sink[s.index] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Element w = queue.front();
    queue.pop_front();
    for (Element v : predecessors[w.index]) {
      if (to_sink[v.index] == kUnreached) {
        to_sink[v.index] = to_sink[w.index] + 1;
        queue.push_back(v);
      }
    }
  }
  std::optional<Element> start;
  for (Element s : a.sources) {
    if (to_sink[s.index] == kUnreached) continue;
    if (!start || to_sink[s.index] < to_sink[start->index]) start = s;
  }
  if (!start) return std::nullopt;
  std::vector<Element> path{*start};
  while (to_sink[path.back().index] > 0) {
    const std::size_t next_distance = to_sink[path.back().index] - 1;
    for (Element w : a.graph.successors(path.back())) {
      if (to_sink[w.index] == next_distance) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

ElementSet reachable_from(const ExchangeGraph& graph, const ElementSet& from) {
  ElementSet seen = from;
  std::deque<Element> queue(from.begin(), from.end());
  while (!queue.empty()) {
    Element v = queue.front();
    queue.pop_front();
    for (Element w : graph.successors(v)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

ExchangeGraph::ExchangeGraph(ElementSet vertices)
    : vertices_(std::move(vertices)),
      out_sets_(vertices_.universe(), ElementSet(vertices_.universe())),
      out_(vertices_.universe()) {}

void ExchangeGraph::add_arc(Element from, Element to) {
  if (!vertices_.contains(from) || !vertices_.contains(to)) {
    throw DomainError("exchange graph arc endpoint is not a vertex");
  }
  if (from == to || out_sets_[from.index].contains(to)) return;
  out_sets_[from.index].insert(to);
  auto& list = out_[from.index];
  list.insert(std::upper_bound(list.begin(), list.end(), to), to);
}

bool ExchangeGraph::has_arc(Element from, Element to) const {
  return from.index < out_sets_.size() && out_sets_[from.index].contains(to);
}

const std::vector<Element>& ExchangeGraph::successors(Element v) const {
  if (v.index >= out_.size()) {
    throw DomainError("exchange graph vertex out of range");
  }
  return out_[v.index];
}

std::vector<std::pair<Element, Element>> ExchangeGraph::arcs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element v : vertices_) {
    for (Element w : out_[v.index]) out.emplace_back(v, w);
  }
  return out;
}

std::size_t ExchangeGraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& list : out_) n += list.size();
  return n;
}

ExchangeGraph exchange_graph(const Matroid& m1, const Matroid& m2,
                             const ElementSet& independent) {
  check_same_ground(m1, m2);
  if (!m1.is_independent(independent) || !m2.is_independent(independent)) {
    throw ContractError("exchange_graph: I is not common independent");
  }
  return build(m1, m2, independent).graph;
}

IntersectionResult intersect(const Matroid& m1, const Matroid& m2) {
  check_same_ground(m1, m2);
  IntersectionResult result{ElementSet(m1.universe()),
                            ElementSet(m1.universe()), 0};
  while (true) {
    Augmentable a = build(m1, m2, result.independent);
    auto path = shortest_path(a);
    if (!path) {
      result.critical = reachable_from(a.graph, a.sources);
      return result;
    }
    for (Element v : *path) {
      if (result.independent.contains(v)) {
        result.independent.erase(v);
      } else {
        result.independent.insert(v);
      }
    }
    ++result.augmentations;
  }
}

ElementSet max_common_independent(const Matroid& m1, const Matroid& m2) {
  return intersect(m1, m2).independent;
}

ElementSet critical_subset(const Matroid& m1, const Matroid& m2) {
  return intersect(m1, m2).critical;
}

std::size_t mu(const Matroid& m1, const Matroid& m2, const ElementSet& x) {
  check_same_ground(m1, m2);
  return rank(m1, m1.ground() - x) + rank(m2, x);
}

ElementSet apply_cycle(const ElementSet& independent, const Cycle& cycle,
                       const ExchangeGraph& graph) {
  if (cycle.size() < 2) {
    throw ContractError("apply_cycle: a cycle needs at least two vertices");
  }
  ElementSet seen(graph.universe());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Element v = cycle[i];
    Element w = cycle[(i + 1) % cycle.size()];
    if (!graph.vertices().contains(v)) {
      throw ContractError("apply_cycle: vertex outside the graph");
    }
    if (seen.contains(v)) {
      throw ContractError("apply_cycle: cycle is not simple");
    }
    seen.insert(v);
    if (!graph.has_arc(v, w)) {
      throw ContractError("apply_cycle: missing arc on the cycle");
    }
  }
  ElementSet out = independent;
  for (Element v : cycle) {
    if (independent.contains(v)) {
      out.erase(v);
    } else {
      out.insert(v);
    }
  }
  return out;
}

std::optional<std::pair<Element, Element>> find_shortcut_arc(
    const ExchangeGraph& graph, const Cycle& cycle) {
  const std::size_t len = cycle.size();
  std::vector<std::size_t> position(graph.universe(), kUnreached);
  for (std::size_t i = 0; i < len; ++i) position[cycle[i].index] = i;
  for (std::size_t i = 0; i < len; ++i) {
    for (Element w : graph.successors(cycle[i])) {
      std::size_t j = position[w.index];
      if (j == kUnreached || j == (i + 1) % len) continue;
      return std::make_pair(cycle[i], w);
    }
  }
  return std::nullopt;
}

std::optional<Cycle> shortcut_free_cycle(const ExchangeGraph& graph) {
  const std::size_t n = graph.universe();
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<Element> stack;
  std::optional<Cycle> found;

  // Iterative DFS in canonical order; the first back arc closes a cycle.
  for (Element root : graph.vertices()) {
    if (found || mark[root.index] != Mark::kNew) continue;
    std::vector<std::pair<Element, std::size_t>> frames{{root, 0}};
    mark[root.index] = Mark::kActive;
    stack.assign(1, root);
    while (!frames.empty() && !found) {
      auto& [v, next] = frames.back();
      const auto& succ = graph.successors(v);
      if (next == succ.size()) {
        mark[v.index] = Mark::kDone;
        frames.pop_back();
        stack.pop_back();
        continue;
      }
      Element w = succ[next++];
      if (mark[w.index] == Mark::kActive) {
        auto it = std::find(stack.begin(), stack.end(), w);
        found = Cycle(it, stack.end());
      } else if (mark[w.index] == Mark::kNew) {
        mark[w.index] = Mark::kActive;
        frames.emplace_back(w, 0);
        stack.push_back(w);
      }
    }
  }
  if (!found) return std::nullopt;

  Cycle cycle = std::move(*found);
  while (auto arc = find_shortcut_arc(graph, cycle)) {
    auto from = std::find(cycle.begin(), cycle.end(), arc->first);
    auto to = std::find(cycle.begin(), cycle.end(), arc->second);
    // New cycle: to -> ... -> from along the old cycle, closed by the arc.
    Cycle shorter;
    for (auto it = to;;) {
      shorter.push_back(*it);
      if (it == from) break;
      if (++it == cycle.end()) it = cycle.begin();
    }
    cycle = std::move(shorter);
  }
  return cycle;
}

}  // namespace matstab
