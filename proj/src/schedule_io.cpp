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

#include "graphweaver/schedule_io.hpp"

#include "graphweaver/errors.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace gw {

std::string schedule_to_json(const WeaveSchedule &s) {
    json steps = json::array();
    for (const auto &st : s.steps) {
        json j;
        if (const auto *blk = std::get_if<step::PrepareBlock>(&st)) {
            j["op"] = "prepare_block";
            json edges = json::array();
            for (const auto &e : blk->edges)
                edges.push_back({e.u, e.v});
            j["edges"] = std::move(edges);
        } else if (const auto *att = std::get_if<step::Attach>(&st)) {
            j["op"] = "attach";
            j["p"] = att->p;
        } else if (const auto *lnk = std::get_if<step::Link>(&st)) {
            j["op"] = "link";
            j["p"] = lnk->p;
            j["r"] = lnk->r;
        } else {
            j["op"] = "detach";
            j["r"] = std::get<step::Detach>(st).r;
        }
        steps.push_back(std::move(j));
    }
    json doc;
    doc["v"] = kScheduleSchemaVersion;
    doc["graph_hash"] = s.graph_hash;
    doc["vertices"] = s.vertices;
    doc["steps"] = std::move(steps);
    doc["options"] = {{"blocks", s.options.blocks}};
    return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void fail(const std::string &what) { throw ParseError("schedule: " + what, 0); }

const json &field(const json &obj, const char *key, std::size_t step) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("step " + std::to_string(step) + " is missing \"" + key + "\"");
    return *it;
}

std::string vertex(const json &j, std::size_t step) {
    if (!j.is_string())
        fail("step " + std::to_string(step) + " has a non-string vertex id");
    return j.get<std::string>();
}

}  // namespace

WeaveSchedule schedule_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(e.what());
    }
    if (!doc.is_object())
        fail("document must be a JSON object");
    if (!doc.contains("v") || !doc["v"].is_number_integer() || doc["v"].get<int>() != kScheduleSchemaVersion)
        fail("unsupported or missing schema version \"v\" (expected 1)");
    if (!doc.contains("graph_hash") || !doc["graph_hash"].is_string())
        fail("missing \"graph_hash\"");
    if (!doc.contains("steps") || !doc["steps"].is_array())
        fail("missing \"steps\" array");

    WeaveSchedule s;
    s.graph_hash = doc["graph_hash"].get<std::string>();
    if (doc.contains("vertices")) {
        if (!doc["vertices"].is_array())
            fail("\"vertices\" must be an array");
        for (const auto &v : doc["vertices"])
            s.vertices.push_back(vertex(v, 0));
    }
    if (doc.contains("options") && doc["options"].contains("blocks")) {
        try {
            s.options.blocks = doc["options"]["blocks"].get<std::vector<std::vector<std::string>>>();
        } catch (const json::exception &) {
            fail("\"options.blocks\" must be a list of vertex lists");
        }
    }

    const auto &steps = doc["steps"];
    for (std::size_t i = 0; i < steps.size(); i++) {
        const auto &j = steps[i];
        if (!j.is_object())
            fail("step " + std::to_string(i) + " is not an object");
        const auto &op = field(j, "op", i);
        if (!op.is_string())
            fail("step " + std::to_string(i) + " has a non-string op");
        const auto name = op.get<std::string>();
        if (name == "attach") {
            s.steps.emplace_back(step::Attach{vertex(field(j, "p", i), i)});
        } else if (name == "link") {
            s.steps.emplace_back(step::Link{vertex(field(j, "p", i), i), vertex(field(j, "r", i), i)});
        } else if (name == "detach") {
            s.steps.emplace_back(step::Detach{vertex(field(j, "r", i), i)});
        } else if (name == "prepare_block") {
            const auto &edges = field(j, "edges", i);
            if (!edges.is_array())
                fail("step " + std::to_string(i) + " \"edges\" must be an array");
            step::PrepareBlock blk;
            for (const auto &e : edges) {
                if (!e.is_array() || e.size() != 2)
                    fail("step " + std::to_string(i) + " has an edge that is not a pair");
                blk.edges.push_back({vertex(e[0], i), vertex(e[1], i)});
            }
            s.steps.emplace_back(std::move(blk));
        } else {
            fail("step " + std::to_string(i) + " has unknown op \"" + name + "\"");
        }
    }
    return s;
}

}  // namespace gw
