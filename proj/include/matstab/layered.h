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

// Preference-layered matroids. Starting from M_S, the most preferred class
// T of the remaining elements is peeled off; the layer minor is the current
// matroid restricted to T, and the current matroid is then contracted by T.
// The layered matroid is the direct sum of the layer minors.

#ifndef MATSTAB_LAYERED_H_
#define MATSTAB_LAYERED_H_

#include <vector>

#include "matstab/element_set.h"
#include "matstab/matroid.h"
#include "matstab/preference.h"

namespace matstab {

struct Layer {
  ElementSet tier_set;
  Matroid minor;
};

struct LayeredMatroid {
  Side side = Side::kD;
  std::vector<Layer> layers;
  Matroid whole;

  // Union of the first `count` tier sets.
  ElementSet prefix(std::size_t count) const;
};

// D side: each layer is a full head class of pref_d.
LayeredMatroid build_layered_d(const Instance& instance, const ElementSet& f);

// H side: each head class of pref_h is peeled as its E1 part and then its
// E2 part. Empty parts produce no layer.
LayeredMatroid build_layered_h(const Instance& instance, const ElementSet& f);

// Peels head classes of pref_d, contracting each, and keeps the elements
// that are not loops of the contracted matroid when their class is peeled.
ElementSet choice_d(const Instance& instance, const ElementSet& f);

}  // namespace matstab

#endif  // MATSTAB_LAYERED_H_
