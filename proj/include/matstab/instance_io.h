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

// JSON instance files and trace serialization.
//
//   {
//     "elements": ["a", "b", ...],
//     "matroid_d": {"type": "uniform", "rank": 2}
//                | {"type": "partition",
//                   "blocks": [{"members": ["a"], "capacity": 1}, ...]}
//                | {"type": "graphic", "edges": {"a": ["u", "v"], ...}}
//                | {"type": "explicit", "independent": [[], ["a"], ...]}
//                | {"type": "free"},
//     "matroid_h": ...,
//     "pref_d": {"a": 0, "b": 1, ...},
//     "pref_h": {...},
//     "e1": ["a", ...]            // E2 is the complement
//   }

#ifndef MATSTAB_INSTANCE_IO_H_
#define MATSTAB_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "matstab/preference.h"
#include "matstab/solver.h"
#include "matstab/stability.h"

namespace matstab {

// Malformed JSON or a structurally broken document (unknown ids, missing
// keys, wrong types). Semantic problems such as loops are left to
// validate().
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::string& path);

nlohmann::json render_instance(const Instance& instance);
nlohmann::json render_matroid(const Matroid& m, const GroundSet& ground);

nlohmann::json set_to_json(const GroundSet& ground, const ElementSet& s);
nlohmann::json trace_to_json(const Instance& instance, const Outcome& outcome);
nlohmann::json report_to_json(const GroundSet& ground,
                              const BlockReport& report);

}  // namespace matstab

#endif  // MATSTAB_INSTANCE_IO_H_
