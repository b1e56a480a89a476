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

#include "matstab/solver.h"

#include <sstream>

#include "matstab/intersection.h"
#include "matstab/layered.h"
#include "matstab/matroid.h"
#include "matstab/stability.h"

namespace matstab {
namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid instance";
  for (const auto& v : violations) out += "; " + v.message();
  return out;
}

class Auditor {
 public:
  Auditor(const Instance& instance, bool enabled)
      : instance_(instance), enabled_(enabled) {}

  [[noreturn]] void fail(const std::string& what, const OuterRound& round,
                         const InnerRound& inner) const {
    const GroundSet& g = instance_.ground;
    std::ostringstream out;
    out << "solver invariant violated: " << what << "\n  t=" << round.index
        << " i=" << inner.index << "\n  R_{t-1}=" << g.format(round.r_before)
        << "\n  P_{t,i-1}=" << g.format(inner.p_before)
        << "\n  K=" << g.format(inner.choice)
        << "\n  Q=" << g.format(inner.h_base)
        << "\n  rk_D(E\\P)=" << inner.rank_d << " rk_H(K)=" << inner.rank_h;
    if (inner.intersection) {
      out << "\n  I=" << g.format(*inner.intersection);
    }
    if (inner.critical) out << "\n  Z=" << g.format(*inner.critical);
    throw InternalError(out.str());
  }

  // Guarantees at the point where the inner loop has settled.
  void at_inner_exit(const OuterRound& round, const InnerRound& inner,
                     const LayeredMatroid& layered_d,
                     const LayeredMatroid& layered_h) const {
    const ElementSet& i_set = *inner.intersection;
    if (i_set.size() < inner.rank_d) {
      fail("|I| < rk_D(E \\ P) after the inner loop", round, inner);
    }
    if (!enabled_) return;
    const ElementSet rest = instance_.all() - inner.p_after;
    if (!layered_d.whole.is_independent(i_set) ||
        i_set.size() != rank(layered_d.whole)) {
      fail("I is not a base of M_D<K>", round, inner);
    }
    if (!instance_.m_d.is_independent(i_set) ||
        i_set.size() != rank(instance_.m_d, rest)) {
      fail("I is not a base of M_D|(E \\ P)", round, inner);
    }
    if (!layered_h.whole.is_independent(i_set) ||
        i_set.size() != rank(layered_h.whole)) {
      fail("I is not a base of M_H<K>", round, inner);
    }
    if (!(inner.choice & instance_.e1).is_subset_of(i_set)) {
      fail("K intersected with E1 is not contained in I", round, inner);
    }
  }

  void at_yes(const ElementSet& result) const {
    if (!enabled_) return;
    StabilityCheck check = is_stable(instance_, result);
    if (!check.stable) {
      std::ostringstream out;
      out << "solver returned an unstable set "
          << instance_.ground.format(result);
      if (check.reason) out << ": " << *check.reason;
      if (check.blocker) {
        out << ": blocked by " << instance_.ground.id(*check.blocker);
      }
      throw InternalError(out.str());
    }
  }

 private:
  const Instance& instance_;
  bool enabled_;
};

}  // namespace

InvalidInstanceError::InvalidInstanceError(std::vector<Violation> violations)
    : DomainError(join_violations(violations)),
      violations_(std::move(violations)) {}

Outcome solve(const Instance& instance, const SolveOptions& options) {
  if (auto violations = validate(instance); !violations.empty()) {
    throw InvalidInstanceError(std::move(violations));
  }
  const Auditor auditor(instance, options.audit);
  const std::size_t n = instance.size();
  const ElementSet everything = instance.all();
  // Every inner round but the last grows P, every outer round but the last
  // grows R.
  const std::size_t round_budget = (n + 1) * (n + 1);
  std::size_t rounds_used = 0;

  Outcome outcome;
  ElementSet removed = instance.empty_set();  // R_{t-1}
  for (std::size_t t = 1;; ++t) {
    OuterRound round;
    round.index = t;
    round.r_before = removed;
    ElementSet p = removed;
    std::optional<LayeredMatroid> layered_d;
    std::optional<LayeredMatroid> layered_h;

    for (std::size_t i = 1;; ++i) {
      if (++rounds_used > round_budget) {
        throw InternalError("solver exceeded its round budget of " +
                            std::to_string(round_budget));
      }
      InnerRound inner;
      inner.index = i;
      inner.p_before = p;
      const ElementSet rest = everything - p;
      inner.choice = choice_d(instance, rest);
      layered_h = build_layered_h(instance, inner.choice);
      inner.h_base = greedy_base(layered_h->whole, inner.choice);
      inner.rank_d = rank(instance.m_d, rest);
      inner.rank_h = rank(instance.m_h, inner.choice);

      if (inner.rank_d < inner.rank_h) {
        inner.branch = Branch::kRankDeficit;
        inner.p_after = p;
        round.inner.push_back(std::move(inner));
        round.r_after = p;
        outcome.trace.outer.push_back(std::move(round));
        outcome.halt = Halt::kRankDeficit;
        return outcome;
      }

      ElementSet next = p;
      const ElementSet k_e1 = inner.choice & instance.e1;
      if ((inner.h_base & instance.e1) != k_e1) {
        inner.branch = Branch::kE1Deficit;
        next |= k_e1 - inner.h_base;
      } else {
        inner.branch = Branch::kIntersect;
        layered_d = build_layered_d(instance, inner.choice);
        IntersectionResult result =
            intersect(layered_d->whole, layered_h->whole);
        if (result.independent.size() < inner.rank_d) {
          if (result.critical.empty()) {
            inner.intersection = result.independent;
            inner.critical = result.critical;
            auditor.fail("critical subset is empty while |I| < rk_D(E \\ P)",
                         round, inner);
          }
          next |= result.critical;
          inner.critical = std::move(result.critical);
        }
        inner.intersection = std::move(result.independent);
      }
      inner.p_after = next;
      const bool settled = next == p;
      round.inner.push_back(std::move(inner));
      if (settled) break;
      p = std::move(next);
    }

    const InnerRound& last = round.inner.back();
    if (!last.intersection || !layered_d) {
      auditor.fail("inner loop exited without a common independent set", round,
                   last);
    }
    auditor.at_inner_exit(round, last, *layered_d, *layered_h);
    const ElementSet current = *last.intersection;

    ElementSet blocking = p & block_set(instance, current);
    ElementSet next_removed = p;
    if (auto b = blocking.first()) {
      round.blocker = *b;
      next_removed |=
          instance.pref_h.tails(fundamental_circuit(instance.m_h, *b, current));
    }
    round.blocking = std::move(blocking);
    round.r_after = next_removed;
    outcome.trace.outer.push_back(std::move(round));

    if (next_removed == p) {
      for (Element e : next_removed) {
        if (instance.m_h.is_independent(current.with(e))) {
          outcome.halt = Halt::kInsertableRemoved;
          outcome.insertable = e;
          return outcome;
        }
      }
      auditor.at_yes(current);
      outcome.halt = Halt::kStable;
      outcome.stable_set = current;
      return outcome;
    }
    removed = std::move(next_removed);
  }
}

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::kRankDeficit:
      return "rank-deficit";
    case Branch::kE1Deficit:
      return "e1-deficit";
    case Branch::kIntersect:
      return "intersect";
  }
  return "?";
}

std::string_view halt_name(Halt halt) {
  switch (halt) {
    case Halt::kRankDeficit:
      return "rank-deficit";
    case Halt::kInsertableRemoved:
      return "insertable-removed";
    case Halt::kStable:
      return "stable";
  }
  return "?";
}

std::string explain(const Instance& instance, const Outcome& outcome) {
  const GroundSet& g = instance.ground;
  std::ostringstream out;
  for (const auto& round : outcome.trace.outer) {
    out << "outer round " << round.index
        << ": R_prev = " << g.format(round.r_before) << '\n';
    for (const auto& inner : round.inner) {
      out << "  inner round " << inner.index
          << ": P = " << g.format(inner.p_before)
          << ", K = " << g.format(inner.choice)
          << ", Q = " << g.format(inner.h_base)
          << ", rk_D(E\\P) = " << inner.rank_d << ", rk_H(K) = " << inner.rank_h
          << ", branch = " << branch_name(inner.branch) << '\n';
      if (inner.intersection) {
        out << "    I = " << g.format(*inner.intersection) << '\n';
      }
      if (inner.critical) {
        out << "    Z = " << g.format(*inner.critical) << '\n';
      }
      out << "    P -> " << g.format(inner.p_after) << '\n';
    }
    if (round.blocking) {
      out << "  P & block(I) = " << g.format(*round.blocking) << '\n';
    }
    if (round.blocker) out << "  b = " << g.id(*round.blocker) << '\n';
    out << "  R = " << g.format(round.r_after) << '\n';
  }

  switch (outcome.halt) {
    case Halt::kRankDeficit: {
      const auto& round = outcome.trace.outer.back();
      const auto& inner = round.inner.back();
      out << "verdict: no stable set (rank deficit at t=" << round.index
          << ", i=" << inner.index << ": rk_D(E\\P) = " << inner.rank_d
          << " < rk_H(K) = " << inner.rank_h << ")\n";
      break;
    }
    case Halt::kInsertableRemoved:
      out << "verdict: no stable set (removed element e_R = "
          << g.id(*outcome.insertable) << " can be added to I in M_H)\n";
      break;
    case Halt::kStable: {
      const ElementSet& result = outcome.stable_set;
      out << "verdict: stable set " << g.format(result) << '\n';
      out << "certificates:\n";
      for (Element e : instance.all() - result) {
        BlockReport r = blocks(instance, result, e);
        out << "  " << g.id(e) << " ["
            << (instance.e1.contains(e) ? "E1" : "E2")
            << "]: weak D=" << (r.weak_on(Side::kD) ? "yes" : "no")
            << " H=" << (r.weak_on(Side::kH) ? "yes" : "no")
            << "; strong D=" << (r.strong_on(Side::kD) ? "yes" : "no")
            << " H=" << (r.strong_on(Side::kH) ? "yes" : "no") << " -> "
            << (r.verdict ? "BLOCKS" : "does not block") << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace matstab
