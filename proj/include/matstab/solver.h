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

// Decides whether a non-uniformly stable common independent set exists and
// constructs one when it does.
//
// The solver keeps a growing set P of removed elements. Each inner round
// computes K = Ch_D(E \ P) and compares the layered matroids M_D<K> and
// M_H<K>: a rank deficit on the D side means no stable set exists, E1
// elements missing from a greedy base of M_H<K> are removed, and otherwise a
// maximum common independent set I of the layered pair is computed; if it is
// too small the critical subset is removed. Once P is stable, any element of
// P that still blocks I (within cl_H(I)) pulls the H-worst elements of its
// fundamental circuit into R and the inner loop restarts from R. At the end
// I is returned unless some removed element can be added to I in M_H.

#ifndef MATSTAB_SOLVER_H_
#define MATSTAB_SOLVER_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matstab/element_set.h"
#include "matstab/preference.h"

namespace matstab {

enum class Branch { kRankDeficit, kE1Deficit, kIntersect };

struct InnerRound {
  std::size_t index = 0;   // i, from 1
  ElementSet p_before;     // P_{t,i-1}
  ElementSet choice;       // K_{t,i}
  ElementSet h_base;       // Q_{t,i}
  std::size_t rank_d = 0;  // rk_D(E \ P_{t,i-1})
  std::size_t rank_h = 0;  // rk_H(K_{t,i})
  Branch branch = Branch::kIntersect;
  std::optional<ElementSet> intersection;  // I_{t,i}
  std::optional<ElementSet> critical;      // Z_{t,i}
  ElementSet p_after;                      // P_{t,i}
};

struct OuterRound {
  std::size_t index = 0;  // t, from 1
  ElementSet r_before;    // R_{t-1}
  std::vector<InnerRound> inner;
  std::optional<ElementSet> blocking;  // P_{t,i} intersected with block(I)
  std::optional<Element> blocker;      // b_t
  ElementSet r_after;                  // R_t
};

struct SolverTrace {
  std::vector<OuterRound> outer;
};

enum class Halt {
  kRankDeficit,        // no stable set: rk_D(E \ P) < rk_H(K)
  kInsertableRemoved,  // no stable set: I + e_R independent in M_H
  kStable,             // stable set found
};

struct Outcome {
  Halt halt = Halt::kStable;
  ElementSet stable_set;              // meaningful when exists()
  std::optional<Element> insertable;  // e_R for kInsertableRemoved
  SolverTrace trace;

  bool exists() const { return halt == Halt::kStable; }
};

struct SolveOptions {
  // Re-check the structural guarantees at every inner-loop exit (I is a base
  // of both layered matroids and of M_D|(E \ P), it is large enough, and it
  // contains K intersected with E1) and the stability of the returned set.
  bool audit = true;
};

class InvalidInstanceError : public DomainError {
 public:
  explicit InvalidInstanceError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// A guarantee the algorithm relies on failed; this is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws InvalidInstanceError if validate(instance) is non-empty.
Outcome solve(const Instance& instance, const SolveOptions& options = {});

// Deterministic multi-line rendering of the trace and verdict.
std::string explain(const Instance& instance, const Outcome& outcome);

std::string_view branch_name(Branch branch);
std::string_view halt_name(Halt halt);

}  // namespace matstab

#endif  // MATSTAB_SOLVER_H_
