// Copyright 2026 graphweaver Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// WeaveSchedule JSON, schema version 1. Keys appear in this order:
//
//   {"v": 1,
//    "graph_hash": "<16 hex digits>",
//    "vertices": ["a", "b", ...],
//    "steps": [{"op": "prepare_block", "edges": [["a","b"], ...]},
//              {"op": "attach", "p": "a"},
//              {"op": "link", "p": "a", "r": "b"},
//              {"op": "detach", "r": "b"}],
//    "options": {"blocks": [["a","b","c"], ...]}}

#ifndef GRAPHWEAVER_SCHEDULE_IO_HPP
#define GRAPHWEAVER_SCHEDULE_IO_HPP

#include <string>
#include <string_view>

#include "graphweaver/weave_planner.hpp"

namespace gw {

inline constexpr int kScheduleSchemaVersion = 1;

/// Pretty-printed with two-space indent and a trailing newline.
std::string schedule_to_json(const WeaveSchedule &s);

/// Throws ParseError (line 0 when the position is unknown) on malformed JSON,
/// unknown ops, missing fields or an unsupported schema version.
WeaveSchedule schedule_from_json(std::string_view text);

}  // namespace gw

#endif
