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

#include "matstab/instance_io.h"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace matstab {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

std::size_t require_nat(const json& value, const std::string& what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ParseError(what + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string require_string(const json& value, const std::string& what) {
  if (!value.is_string()) throw ParseError(what + " must be a string");
  return value.get<std::string>();
}

Element lookup(const GroundSet& ground, const std::string& id) {
  auto e = ground.find(id);
  if (!e) throw ParseError("unknown element id: " + id);
  return *e;
}

ElementSet parse_set(const GroundSet& ground, const json& value,
                     const std::string& what) {
  if (!value.is_array()) throw ParseError(what + " must be a list of ids");
  ElementSet out = ground.empty_set();
  for (const auto& item : value) {
    Element e = lookup(ground, require_string(item, what + " entry"));
    if (out.contains(e)) {
      throw ParseError(what + " lists " + ground.id(e) + " twice");
    }
    out.insert(e);
  }
  return out;
}

std::string vertex_name(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ParseError("graphic edge endpoints must be strings or integers");
}

MatroidSpec parse_spec(const GroundSet& ground, const json& doc,
                       const std::string& key) {
  const std::string type = require_string(require(doc, "type"), key + ".type");
  if (type == "uniform") {
    return UniformSpec{require_nat(require(doc, "rank"), key + ".rank")};
  }
  if (type == "free") return FreeSpec{};
  if (type == "partition") {
    PartitionSpec spec;
    const json& blocks = require(doc, "blocks");
    if (!blocks.is_array()) throw ParseError(key + ".blocks must be a list");
    for (const auto& block : blocks) {
      spec.blocks.push_back(
          {parse_set(ground, require(block, "members"), key + " block members"),
           require_nat(require(block, "capacity"), key + " block capacity")});
    }
    return spec;
  }
  if (type == "graphic") {
    GraphicSpec spec;
    spec.edges.resize(ground.size());
    std::unordered_map<std::string, std::uint32_t> vertex_index;
    auto vertex = [&](const json& v) {
      std::string name = vertex_name(v);
      auto [it, inserted] = vertex_index.emplace(
          name, static_cast<std::uint32_t>(spec.vertices.size()));
      if (inserted) spec.vertices.push_back(name);
      return it->second;
    };
    const json& edges = require(doc, "edges");
    if (!edges.is_object()) throw ParseError(key + ".edges must be an object");
    for (Element e : ground.all()) {
      const std::string& id = ground.id(e);
      if (!edges.contains(id)) {
        throw ParseError(key + ".edges has no entry for " + id);
      }
      const json& ends = edges.at(id);
      if (!ends.is_array() || ends.size() != 2) {
        throw ParseError(key + ".edges[" + id + "] must be a vertex pair");
      }
      spec.edges[e.index] = std::make_pair(vertex(ends[0]), vertex(ends[1]));
    }
    for (const auto& [id, unused] : edges.items()) lookup(ground, id);
    return spec;
  }
  if (type == "explicit") {
    ExplicitSpec spec;
    const json& family = require(doc, "independent");
    if (!family.is_array()) {
      throw ParseError(key + ".independent must be a list of sets");
    }
    for (const auto& s : family) {
      spec.independent.push_back(
          parse_set(ground, s, key + " independent set"));
    }
    return spec;
  }
  throw ParseError("unknown matroid type \"" + type + "\" in " + key);
}

WeakOrder parse_order(const GroundSet& ground, const json& doc,
                      const std::string& key) {
  if (!doc.is_object()) throw ParseError(key + " must map ids to tiers");
  std::vector<std::int64_t> tiers(ground.size(), 0);
  std::vector<bool> seen(ground.size(), false);
  for (const auto& [id, tier] : doc.items()) {
    Element e = lookup(ground, id);
    if (!tier.is_number_integer()) {
      throw ParseError(key + "[" + id + "] must be an integer");
    }
    tiers[e.index] = tier.get<std::int64_t>();
    seen[e.index] = true;
  }
  for (Element e : ground.all()) {
    if (!seen[e.index]) {
      throw ParseError(key + " has no tier for " + ground.id(e));
    }
  }
  return WeakOrder(std::move(tiers));
}

}  // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  const json& elements = require(doc, "elements");
  if (!elements.is_array()) throw ParseError("elements must be a list");
  std::vector<std::string> ids;
  for (const auto& item : elements) {
    ids.push_back(require_string(item, "element id"));
  }
  GroundSet ground;
  try {
    ground = GroundSet(std::move(ids));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  const ElementSet all = ground.all();
  Matroid m_d = Matroid::make(
      parse_spec(ground, require(doc, "matroid_d"), "matroid_d"), all);
  Matroid m_h = Matroid::make(
      parse_spec(ground, require(doc, "matroid_h"), "matroid_h"), all);
  WeakOrder pref_d = parse_order(ground, require(doc, "pref_d"), "pref_d");
  WeakOrder pref_h = parse_order(ground, require(doc, "pref_h"), "pref_h");
  ElementSet e1 = doc.contains("e1") ? parse_set(ground, doc.at("e1"), "e1")
                                     : ground.empty_set();
  ElementSet e2 = all - e1;
  return Instance{std::move(ground), std::move(m_d),    std::move(m_h),
                  std::move(pref_d), std::move(pref_h), std::move(e1),
                  std::move(e2)};
}

Instance parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(doc);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

json set_to_json(const GroundSet& ground, const ElementSet& s) {
  return json(ground.names(s));
}

json render_matroid(const Matroid& m, const GroundSet& ground) {
  const MatroidSpec* spec = m.spec();
  if (spec == nullptr) {
    throw DomainError("only base matroids can be rendered as instance specs");
  }
  struct Renderer {
    const GroundSet& ground;
    json operator()(const UniformSpec& u) const {
      return {{"type", "uniform"}, {"rank", u.rank}};
    }
    json operator()(const FreeSpec&) const { return {{"type", "free"}}; }
    json operator()(const PartitionSpec& p) const {
      json blocks = json::array();
      for (const auto& b : p.blocks) {
        blocks.push_back({{"members", set_to_json(ground, b.members)},
                          {"capacity", b.capacity}});
      }
      return {{"type", "partition"}, {"blocks", blocks}};
    }
    json operator()(const GraphicSpec& g) const {
      json edges = json::object();
      for (Element e : ground.all()) {
        auto [u, v] = *g.edges[e.index];
        edges[ground.id(e)] = json::array({g.vertices[u], g.vertices[v]});
      }
      return {{"type", "graphic"}, {"edges", edges}};
    }
    json operator()(const ExplicitSpec& x) const {
      json family = json::array();
      for (const auto& s : x.independent) {
        family.push_back(set_to_json(ground, s));
      }
      return {{"type", "explicit"}, {"independent", family}};
    }
  };
  return std::visit(Renderer{ground}, *spec);
}

json render_instance(const Instance& instance) {
  const GroundSet& g = instance.ground;
  json pref_d = json::object();
  json pref_h = json::object();
  for (Element e : g.all()) {
    pref_d[g.id(e)] = instance.pref_d.tier(e);
    pref_h[g.id(e)] = instance.pref_h.tier(e);
  }
  return {{"elements", g.ids()},
          {"matroid_d", render_matroid(instance.m_d, g)},
          {"matroid_h", render_matroid(instance.m_h, g)},
          {"pref_d", pref_d},
          {"pref_h", pref_h},
          {"e1", set_to_json(g, instance.e1)}};
}

json report_to_json(const GroundSet& ground, const BlockReport& report) {
  json out = {{"element", ground.id(report.element)},
              {"verdict", report.verdict}};
  for (Side side : kSides) {
    const int s = static_cast<int>(side);
    json entry = {{"weak", report.weak[s]}, {"strong", report.strong[s]}};
    if (report.witness_f[s]) {
      entry["witness_f"] = ground.id(*report.witness_f[s]);
    }
    out[std::string(side_name(side))] = entry;
  }
  return out;
}

json trace_to_json(const Instance& instance, const Outcome& outcome) {
  const GroundSet& g = instance.ground;
  json outer = json::array();
  for (const auto& round : outcome.trace.outer) {
    json inner = json::array();
    for (const auto& r : round.inner) {
      json entry = {{"i", r.index},
                    {"p_before", set_to_json(g, r.p_before)},
                    {"k", set_to_json(g, r.choice)},
                    {"q", set_to_json(g, r.h_base)},
                    {"rank_d", r.rank_d},
                    {"rank_h", r.rank_h},
                    {"branch", branch_name(r.branch)},
                    {"p_after", set_to_json(g, r.p_after)}};
      if (r.intersection) entry["i_set"] = set_to_json(g, *r.intersection);
      if (r.critical) entry["z"] = set_to_json(g, *r.critical);
      inner.push_back(std::move(entry));
    }
    json entry = {{"t", round.index},
                  {"r_before", set_to_json(g, round.r_before)},
                  {"inner", inner},
                  {"r_after", set_to_json(g, round.r_after)}};
    if (round.blocking) entry["blocking"] = set_to_json(g, *round.blocking);
    if (round.blocker) entry["b"] = g.id(*round.blocker);
    outer.push_back(std::move(entry));
  }
  json verdict = {{"exists", outcome.exists()},
                  {"halt", halt_name(outcome.halt)}};
  if (outcome.exists()) verdict["set"] = set_to_json(g, outcome.stable_set);
  if (outcome.insertable) verdict["e_r"] = g.id(*outcome.insertable);
  return {{"verdict", verdict}, {"outer", outer}};
}

}  // namespace matstab
