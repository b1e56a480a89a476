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

#include "matstab/generators.h"

#include <array>
#include <string>

namespace matstab {
namespace {

std::string padded(int value, int width) {
  std::string digits = std::to_string(value);
  return std::string(digits.size() < static_cast<std::size_t>(width)
                         ? width - digits.size()
                         : 0,
                     '0') +
         digits;
}

std::vector<std::string> numbered_ids(int n) {
  const int width = static_cast<int>(std::to_string(n).size());
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back("e" + padded(i, width));
  return ids;
}

ElementSet pick_e1(const GroundSet& ground, E1Mode mode, Rng* rng) {
  switch (mode) {
    case E1Mode::kAll:
      return ground.all();
    case E1Mode::kNone:
      return ground.empty_set();
    case E1Mode::kRandom: {
      if (rng == nullptr) throw DomainError("random E1 needs a generator");
      ElementSet out = ground.empty_set();
      for (Element e : ground.all()) {
        if (rng->coin()) out.insert(e);
      }
      return out;
    }
  }
  return ground.empty_set();
}

WeakOrder random_order(std::size_t n, int levels, Rng& rng) {
  std::vector<std::int64_t> tiers(n);
  for (auto& t : tiers) t = static_cast<std::int64_t>(rng.below(levels));
  return WeakOrder(std::move(tiers));
}

Matroid random_partition(const GroundSet& ground, Rng& rng) {
  const std::size_t n = ground.size();
  const std::size_t k = n == 0 ? 1 : 1 + rng.below(n);
  std::vector<ElementSet> blocks(k, ground.empty_set());
  for (Element e : ground.all()) blocks[rng.below(k)].insert(e);
  PartitionSpec spec;
  for (auto& members : blocks) {
    if (members.empty()) continue;
    std::size_t capacity = 1 + rng.below(members.size());
    spec.blocks.push_back({std::move(members), capacity});
  }
  return Matroid::make(std::move(spec), ground.all());
}

bool gf2_independent(const std::vector<std::uint32_t>& vectors) {
  // basis[b] has highest set bit b, or is zero.
  std::array<std::uint32_t, 32> basis{};
  for (std::uint32_t v : vectors) {
    for (int bit = 31; bit >= 0 && v != 0; --bit) {
      if (((v >> bit) & 1U) == 0) continue;
      if (basis[bit] == 0) {
        basis[bit] = v;
        break;
      }
      v ^= basis[bit];
    }
  }
  std::size_t rank = 0;
  for (auto b : basis) rank += b != 0;
  return rank == vectors.size();
}

Matroid random_binary(const GroundSet& ground, Rng& rng) {
  const std::size_t n = ground.size();
  const std::size_t dim = n == 0 ? 1 : 1 + rng.below(n);
  std::vector<std::uint32_t> vectors(n);
  for (auto& v : vectors) {
    v = static_cast<std::uint32_t>(1 +
                                   rng.below((std::uint64_t{1} << dim) - 1));
  }
  ExplicitSpec spec;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint32_t> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) chosen.push_back(vectors[i]);
    }
    if (gf2_independent(chosen)) {
      spec.independent.push_back(ElementSet::from_mask(n, mask));
    }
  }
  return Matroid::make(std::move(spec), ground.all());
}

}  // namespace

Instance make_marriage(const std::vector<std::vector<int>>& man_tiers,
                       const std::vector<std::vector<int>>& woman_tiers,
                       E1Mode e1_mode, Rng* rng) {
  const int men = static_cast<int>(man_tiers.size());
  const int women = static_cast<int>(woman_tiers.size());
  auto acceptable = [&](int m, int w) {
    return man_tiers[m].at(w) >= 0 && woman_tiers[w].at(m) >= 0;
  };
  auto id_of = [](int m, int w) {
    return "m" + std::to_string(m + 1) + "w" + std::to_string(w + 1);
  };
  std::vector<std::string> ids;
  for (int m = 0; m < men; ++m) {
    for (int w = 0; w < women; ++w) {
      if (acceptable(m, w)) ids.push_back(id_of(m, w));
    }
  }
  GroundSet ground(ids);
  const std::size_t n = ground.size();
  std::vector<std::int64_t> tiers_d(n), tiers_h(n);
  PartitionSpec by_man, by_woman;
  std::vector<ElementSet> man_blocks(men, ground.empty_set());
  std::vector<ElementSet> woman_blocks(women, ground.empty_set());
  for (int m = 0; m < men; ++m) {
    for (int w = 0; w < women; ++w) {
      if (!acceptable(m, w)) continue;
      Element e = ground.at(id_of(m, w));
      tiers_d[e.index] = man_tiers[m][w];
      tiers_h[e.index] = woman_tiers[w][m];
      man_blocks[m].insert(e);
      woman_blocks[w].insert(e);
    }
  }
  for (auto& b : man_blocks) {
    if (!b.empty()) by_man.blocks.push_back({std::move(b), 1});
  }
  for (auto& b : woman_blocks) {
    if (!b.empty()) by_woman.blocks.push_back({std::move(b), 1});
  }
  ElementSet e1 = pick_e1(ground, e1_mode, rng);
  ElementSet e2 = ground.all() - e1;
  Matroid m_d = Matroid::make(std::move(by_man), ground.all());
  Matroid m_h = Matroid::make(std::move(by_woman), ground.all());
  return Instance{std::move(ground),
                  std::move(m_d),
                  std::move(m_h),
                  WeakOrder(std::move(tiers_d)),
                  WeakOrder(std::move(tiers_h)),
                  std::move(e1),
                  std::move(e2)};
}

Instance make_marriage_with_e1(const std::vector<std::vector<int>>& man_tiers,
                               const std::vector<std::vector<int>>& woman_tiers,
                               const std::vector<std::string>& e1_ids) {
  Instance out = make_marriage(man_tiers, woman_tiers, E1Mode::kNone);
  out.e1 = out.ground.set_of(e1_ids);
  out.e2 = out.all() - out.e1;
  return out;
}

Instance generate_marriage(const MarriageParams& params, std::uint64_t seed) {
  if (params.men < 0 || params.women < 0 || params.tier_levels < 1 ||
      params.density < 0.0 || params.density > 1.0) {
    throw DomainError("invalid marriage generator parameters");
  }
  Rng rng(seed);
  const auto threshold = static_cast<std::uint64_t>(params.density * 1000000.0);
  std::vector<std::vector<int>> man_tiers(params.men,
                                          std::vector<int>(params.women));
  std::vector<std::vector<int>> woman_tiers(params.women,
                                            std::vector<int>(params.men));
  for (int m = 0; m < params.men; ++m) {
    for (int w = 0; w < params.women; ++w) {
      const bool keep = rng.below(1000000) < threshold;
      man_tiers[m][w] =
          keep ? static_cast<int>(rng.below(params.tier_levels)) : -1;
    }
  }
  for (int w = 0; w < params.women; ++w) {
    for (int m = 0; m < params.men; ++m) {
      woman_tiers[w][m] = static_cast<int>(rng.below(params.tier_levels));
    }
  }
  return make_marriage(man_tiers, woman_tiers, params.e1, &rng);
}

Instance generate_random_partition(const RandomParams& params,
                                   std::uint64_t seed) {
  if (params.size < 0 || params.tier_levels < 1) {
    throw DomainError("invalid random-partition parameters");
  }
  Rng rng(seed);
  GroundSet ground(numbered_ids(params.size));
  const std::size_t n = ground.size();
  Matroid m_d = random_partition(ground, rng);
  Matroid m_h = random_partition(ground, rng);
  WeakOrder pref_d = random_order(n, params.tier_levels, rng);
  WeakOrder pref_h = random_order(n, params.tier_levels, rng);
  ElementSet e1 = pick_e1(ground, params.e1, &rng);
  ElementSet e2 = ground.all() - e1;
  return Instance{std::move(ground), std::move(m_d),    std::move(m_h),
                  std::move(pref_d), std::move(pref_h), std::move(e1),
                  std::move(e2)};
}

Instance generate_random_explicit(const RandomParams& params,
                                  std::uint64_t seed) {
  if (params.size < 0 || params.size > 12 || params.tier_levels < 1) {
    throw DomainError(
        "invalid random-explicit parameters (size must be <= 12)");
  }
  Rng rng(seed);
  GroundSet ground(numbered_ids(params.size));
  const std::size_t n = ground.size();
  Matroid m_d = random_binary(ground, rng);
  Matroid m_h = random_binary(ground, rng);
  WeakOrder pref_d = random_order(n, params.tier_levels, rng);
  WeakOrder pref_h = random_order(n, params.tier_levels, rng);
  ElementSet e1 = pick_e1(ground, params.e1, &rng);
  ElementSet e2 = ground.all() - e1;
  return Instance{std::move(ground), std::move(m_d),    std::move(m_h),
                  std::move(pref_d), std::move(pref_h), std::move(e1),
                  std::move(e2)};
}

}  // namespace matstab
