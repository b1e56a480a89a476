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

// Deterministic instance generators. The same parameters and seed always
// produce the same instance (draws use raw mt19937_64 output, not the
// implementation-defined standard distributions).

#ifndef MATSTAB_GENERATORS_H_
#define MATSTAB_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "matstab/preference.h"

namespace matstab {

enum class E1Mode { kAll, kNone, kRandom };

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() >> 17) & 1U; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// One element "m<i>w<j>" (1-based) per acceptable pair. M_D has one
// capacity-1 block per man, M_H one per woman. The D tier of m_i w_j is
// man_tiers[i][j], the H tier is woman_tiers[j][i]. A negative tier on
// either side marks the pair unacceptable.
Instance make_marriage(const std::vector<std::vector<int>>& man_tiers,
                       const std::vector<std::vector<int>>& woman_tiers,
                       E1Mode e1_mode, Rng* rng = nullptr);

// Like make_marriage with E1 given explicitly by element id.
Instance make_marriage_with_e1(const std::vector<std::vector<int>>& man_tiers,
                               const std::vector<std::vector<int>>& woman_tiers,
                               const std::vector<std::string>& e1_ids);

struct MarriageParams {
  int men = 2;
  int women = 2;
  int tier_levels = 1;   // 1 means every list is a single tie
  double density = 1.0;  // probability a pair is acceptable
  E1Mode e1 = E1Mode::kAll;
};
Instance generate_marriage(const MarriageParams& params, std::uint64_t seed);

struct RandomParams {
  int size = 8;
  int tier_levels = 3;
  E1Mode e1 = E1Mode::kRandom;
};
// Two random partition matroids with random capacities.
Instance generate_random_partition(const RandomParams& params,
                                   std::uint64_t seed);
// Two random GF(2)-representable matroids written out as explicit
// independent-set families; requires size <= 12.
Instance generate_random_explicit(const RandomParams& params,
                                  std::uint64_t seed);

}  // namespace matstab

#endif  // MATSTAB_GENERATORS_H_
