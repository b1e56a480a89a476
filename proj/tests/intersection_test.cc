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

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "matstab/generators.h"
#include "support/builders.h"
#include "support/oracles.h"

namespace matstab {
namespace {

using testing::explicit_matroid;
using testing::free_matroid;
using testing::partition;
using testing::uniform;
namespace orc = oracle;

using Arc = std::pair<Element, Element>;

Element el(const GroundSet& g, const char* id) { return g.at(id); }

TEST(ExchangeGraphTest, Examples) {
  GroundSet g({"a", "b"});
  Matroid u = uniform(g, 1);
  ExchangeGraph graph = exchange_graph(u, u, g.set_of({"a"}));
  EXPECT_EQ(graph.arcs(), (std::vector<Arc>{{el(g, "a"), el(g, "b")},
                                            {el(g, "b"), el(g, "a")}}));
  EXPECT_EQ(exchange_graph(u, u, g.empty_set()).arc_count(), 0u);
  Matroid f = free_matroid(g);
  EXPECT_EQ(exchange_graph(f, f, g.set_of({"a"})).arc_count(), 0u);
  EXPECT_THROW(exchange_graph(u, u, g.all()), ContractError);
}

TEST(MaxCommonIndependentTest, Examples) {
  GroundSet g({"a", "b"});
  EXPECT_EQ(max_common_independent(uniform(g, 1), uniform(g, 1)),
            g.set_of({"a"}));
  GroundSet h({"a", "b", "c"});
  EXPECT_EQ(max_common_independent(partition(h, {{{"a", "b"}, 1}, {{"c"}, 1}}),
                                   uniform(h, 2))
                .size(),
            2u);
  GroundSet s({"a"});
  EXPECT_TRUE(
      max_common_independent(explicit_matroid(s, {{}}), free_matroid(s))
          .empty());
  EXPECT_THROW(max_common_independent(uniform(g, 1), uniform(h, 1)),
               DomainError);
}

TEST(MuTest, Examples) {
  GroundSet g({"a", "b"});
  Matroid u = uniform(g, 1);
  EXPECT_EQ(mu(u, u, g.empty_set()), 1u);
  EXPECT_EQ(mu(u, u, g.set_of({"a"})), 2u);
  EXPECT_EQ(mu(u, uniform(g, 2), g.all()), 2u);
}

TEST(CriticalSubsetTest, Examples) {
  GroundSet g({"a", "b"});
  EXPECT_TRUE(critical_subset(uniform(g, 1), uniform(g, 1)).empty());
  EXPECT_TRUE(critical_subset(free_matroid(g), free_matroid(g)).empty());
  // mu(X) = rk_1(U \ X) + rk_2(X): with the loop matroid first, mu({}) = 0
  // and mu({a}) = 1, so the minimal minimizer is empty. With the roles
  // swapped it is {a}.
  GroundSet s({"a"});
  Matroid loops = explicit_matroid(s, {{}});
  EXPECT_EQ(mu(loops, free_matroid(s), s.empty_set()), 0u);
  EXPECT_EQ(mu(loops, free_matroid(s), s.all()), 1u);
  EXPECT_TRUE(critical_subset(loops, free_matroid(s)).empty());
  EXPECT_EQ(critical_subset(free_matroid(s), loops), s.all());
}

// Partition pair whose exchange graph on I = {a, c} is a -> b -> c -> d -> a.
struct Square {
  GroundSet g{std::vector<std::string>{"a", "b", "c", "d"}};
  Matroid m1 = partition(g, {{{"a", "b"}, 1}, {{"c", "d"}, 1}});
  Matroid m2 = partition(g, {{{"a", "d"}, 1}, {{"b", "c"}, 1}});
  ElementSet i = g.set_of({"a", "c"});
};

TEST(ApplyCycleTest, Examples) {
  GroundSet g({"a", "b"});
  Matroid u = uniform(g, 1);
  ExchangeGraph two = exchange_graph(u, u, g.set_of({"a"}));
  EXPECT_EQ(apply_cycle(g.set_of({"a"}), {el(g, "a"), el(g, "b")}, two),
            g.set_of({"b"}));

  Square sq;
  ExchangeGraph graph = exchange_graph(sq.m1, sq.m2, sq.i);
  const Cycle cycle = {el(sq.g, "a"), el(sq.g, "b"), el(sq.g, "c"),
                       el(sq.g, "d")};
  EXPECT_EQ(graph.arc_count(), 4u);
  EXPECT_EQ(apply_cycle(sq.i, cycle, graph), sq.g.set_of({"b", "d"}));
}

TEST(ApplyCycleTest, RejectsNonCycles) {
  GroundSet g({"a", "b"});
  Matroid f = free_matroid(g);
  ExchangeGraph none = exchange_graph(f, f, g.set_of({"a"}));
  EXPECT_THROW(apply_cycle(g.set_of({"a"}), {el(g, "a"), el(g, "b")}, none),
               ContractError);
  EXPECT_THROW(apply_cycle(g.set_of({"a"}), {}, none), ContractError);
  Square sq;
  ExchangeGraph graph = exchange_graph(sq.m1, sq.m2, sq.i);
  EXPECT_THROW(apply_cycle(sq.i,
                           {el(sq.g, "a"), el(sq.g, "b"), el(sq.g, "c"),
                            el(sq.g, "d"), el(sq.g, "a")},
                           graph),
               ContractError);
}

bool has_shortcut(const ExchangeGraph& g, const Cycle& c) {
  std::vector<Arc> on_cycle;
  for (std::size_t k = 0; k < c.size(); ++k) {
    on_cycle.emplace_back(c[k], c[(k + 1) % c.size()]);
  }
  for (const auto& [x, y] : g.arcs()) {
    const bool x_on = std::find(c.begin(), c.end(), x) != c.end();
    const bool y_on = std::find(c.begin(), c.end(), y) != c.end();
    if (x_on && y_on &&
        std::find(on_cycle.begin(), on_cycle.end(), Arc{x, y}) ==
            on_cycle.end()) {
      return true;
    }
  }
  return false;
}

bool is_simple_cycle(const ExchangeGraph& g, const Cycle& c) {
  if (c.size() < 2) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!g.has_arc(c[k], c[(k + 1) % c.size()])) return false;
    for (std::size_t j = k + 1; j < c.size(); ++j) {
      if (c[j] == c[k]) return false;
    }
  }
  return true;
}

ExchangeGraph graph_from(std::size_t n, const std::vector<std::pair<int, int>>& arcs) {
  ExchangeGraph g(ElementSet::full(n));
  for (auto [x, y] : arcs) {
    g.add_arc(Element{static_cast<std::uint32_t>(x)},
              Element{static_cast<std::uint32_t>(y)});
  }
  return g;
}

TEST(ShortcutFreeCycleTest, Examples) {
  EXPECT_FALSE(shortcut_free_cycle(graph_from(3, {{0, 1}, {1, 2}})));
  auto two = shortcut_free_cycle(graph_from(2, {{0, 1}, {1, 0}}));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->size(), 2u);
  ExchangeGraph chord = graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 0}});
  auto c = shortcut_free_cycle(chord);
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_simple_cycle(chord, *c));
  EXPECT_FALSE(has_shortcut(chord, *c));
  EXPECT_EQ(c->size(), 2u);
  const Cycle square = {Element{0}, Element{1}, Element{2}, Element{3}};
  auto shortcut = find_shortcut_arc(chord, square);
  ASSERT_TRUE(shortcut);
  EXPECT_EQ(*shortcut, (Arc{Element{1}, Element{0}}));
}

TEST(ShortcutFreeCyclePropertyTest, RandomDigraphs) {
  Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng.below(6);
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && rng.below(3) == 0) arcs.emplace_back(x, y);
      }
    }
    ExchangeGraph g = graph_from(n, arcs);
    // Cyclic iff some vertex reaches itself.
    bool cyclic = false;
    for (std::size_t s = 0; s < n && !cyclic; ++s) {
      std::vector<bool> seen(n, false);
      std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        for (Element w : g.successors(Element{static_cast<std::uint32_t>(v)})) {
          if (w.index == s) cyclic = true;
          if (!seen[w.index]) {
            seen[w.index] = true;
            dfs(w.index);
          }
        }
      };
      dfs(s);
    }
    auto c = shortcut_free_cycle(g);
    ASSERT_EQ(c.has_value(), cyclic);
    if (c) {
      ASSERT_TRUE(is_simple_cycle(g, *c));
      ASSERT_FALSE(has_shortcut(g, *c));
      ASSERT_FALSE(find_shortcut_arc(g, *c));
    }
  }
}

struct Pair {
  Matroid m1, m2;
};

std::vector<Pair> sample_pairs(int count) {
  std::vector<Pair> out;
  for (int k = 0; k < count; ++k) {
    RandomParams p;
    p.size = 1 + k % 7;
    Instance inst = k % 2 == 0 ? generate_random_explicit(p, 300 + k)
                               : generate_random_partition(p, 300 + k);
    out.push_back({inst.m_d, inst.m_h});
  }
  return out;
}

TEST(IntersectionPropertyTest, MinMaxAndMinimizerLattice) {
  for (const auto& [m1, m2] : sample_pairs(120)) {
    const auto t1 = orc::tabulate(m1);
    const auto t2 = orc::tabulate(m2);
    const auto summary = orc::summarize_mu(t1, t2);
    const IntersectionResult r = intersect(m1, m2);
    ASSERT_EQ(static_cast<int>(r.independent.size()), summary.min_value);
    ASSERT_EQ(summary.max_common, summary.min_value);
    ASSERT_TRUE(m1.is_independent(r.independent));
    ASSERT_TRUE(m2.is_independent(r.independent));
    orc::Mask meet = t1.ground;
    for (orc::Mask x : summary.minimizers) {
      ASSERT_EQ(static_cast<int>(mu(m1, m2, orc::to_set(t1.n, x))),
                summary.min_value);
      for (orc::Mask y : summary.minimizers) {
        const auto& ms = summary.minimizers;
        ASSERT_NE(std::find(ms.begin(), ms.end(), x & y), ms.end());
        ASSERT_NE(std::find(ms.begin(), ms.end(), x | y), ms.end());
      }
      meet &= x;
    }
    ASSERT_EQ(orc::to_mask(r.critical), meet);
    ASSERT_EQ(critical_subset(m1, m2), r.critical);
  }
}

// Arcs by the exchange definitions, on the tabulated families.
std::vector<Arc> brute_arcs(const orc::Table& t1, const orc::Table& t2,
                            orc::Mask i) {
  std::vector<Arc> out;
  for (std::size_t x = 0; x < t1.n; ++x) {
    for (std::size_t y = 0; y < t1.n; ++y) {
      if (!orc::has(t1.ground, x) || !orc::has(t1.ground, y)) continue;
      const Element ex{static_cast<std::uint32_t>(x)};
      const Element ey{static_cast<std::uint32_t>(y)};
      if (orc::has(i, x) && !orc::has(i, y)) {
        // x in I, y outside: x -> y through M1.
        if (!t1.independent(i | orc::bit(y)) &&
            t1.independent((i | orc::bit(y)) & ~orc::bit(x))) {
          out.emplace_back(ex, ey);
        }
      } else if (!orc::has(i, x) && orc::has(i, y)) {
        if (!t2.independent(i | orc::bit(x)) &&
            t2.independent((i | orc::bit(x)) & ~orc::bit(y))) {
          out.emplace_back(ex, ey);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IntersectionPropertyTest, ExchangeGraphAndShortcutFreeCycles) {
  int cycles = 0;
  for (const auto& [m1, m2] : sample_pairs(80)) {
    const auto t1 = orc::tabulate(m1);
    const auto t2 = orc::tabulate(m2);
    for (orc::Mask i : orc::submasks(t1.ground)) {
      if (!t1.independent(i) || !t2.independent(i)) continue;
      const ElementSet is = orc::to_set(t1.n, i);
      ExchangeGraph g = exchange_graph(m1, m2, is);
      ASSERT_EQ(g.arcs(), brute_arcs(t1, t2, i));
      auto c = shortcut_free_cycle(g);
      if (!c) continue;
      ++cycles;
      ASSERT_FALSE(has_shortcut(g, *c));
      const ElementSet j = apply_cycle(is, *c, g);
      ASSERT_TRUE(m1.is_independent(j));
      ASSERT_TRUE(m2.is_independent(j));
      ASSERT_EQ(j.size(), is.size());
    }
  }
  EXPECT_GT(cycles, 50);
}

TEST(IntersectionPropertyTest, NoAugmentingPathRemains) {
  for (const auto& [m1, m2] : sample_pairs(60)) {
    const ElementSet i = max_common_independent(m1, m2);
    for (Element u : m1.ground() - i) {
      ASSERT_FALSE(m1.is_independent(i.with(u)) && m2.is_independent(i.with(u)));
    }
    // Sources reach no sink in the final exchange graph.
    const IntersectionResult r = intersect(m1, m2);
    for (Element u : r.critical) {
      if (!r.independent.contains(u)) {
        ASSERT_FALSE(m2.is_independent(r.independent.with(u)));
      }
    }
  }
}

}  // namespace
}  // namespace matstab
