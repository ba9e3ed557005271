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

#include "poishare/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "poishare/error.hpp"

namespace poishare {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("instance is missing field '") + key + "'");
  return *it;
}

std::size_t as_count(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw InputError(where + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<Edge> as_edges(const json& value, const char* key) {
  if (!value.is_array()) throw InputError(std::string(key) + " must be an array of [u, v] pairs");
  std::vector<Edge> edges;
  edges.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& pair = value[i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) throw InputError(where + " must be a pair [u, v]");
    edges.push_back({as_count(pair[0], where), as_count(pair[1], where)});
  }
  return edges;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");

  Instance inst;
  inst.sensing.node_count = as_count(require(doc, "node_count"), "node_count");
  inst.sensing.user_count = as_count(require(doc, "user_count"), "user_count");
  inst.sensing.edges = as_edges(require(doc, "sensing_edges"), "sensing_edges");
  inst.social.user_count = inst.sensing.user_count;
  inst.social.edges = as_edges(require(doc, "social_edges"), "social_edges");
  inst.social_hop_radius =
      static_cast<unsigned>(as_count(require(doc, "social_hop_radius"), "social_hop_radius"));

  if (auto it = doc.find("edge_weights"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw InputError("edge_weights must be an array of numbers");
    for (const json& w : *it) {
      if (!w.is_number()) throw InputError("edge_weights must be an array of numbers");
      inst.sensing.edge_weights.push_back(w.get<double>());
    }
  }
  if (auto it = doc.find("preferences"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw InputError("preferences must be an array of edge-index arrays");
    PreferenceProfile prefs;
    for (std::size_t u = 0; u < it->size(); ++u) {
      const json& row = (*it)[u];
      const std::string where = "preferences[" + std::to_string(u) + "]";
      if (!row.is_array()) throw InputError(where + " must be an array of edge indices");
      std::vector<EdgeIndex> edges;
      for (const json& e : row) edges.push_back(as_count(e, where));
      prefs.per_user_edges.push_back(std::move(edges));
    }
    inst.preferences = std::move(prefs);
  }
  if (auto it = doc.find("self_loops"); it != doc.end()) {
    if (!it->is_boolean()) throw InputError("self_loops must be a boolean");
    inst.sensing.allow_self_loops = it->get<bool>();
  }
  return inst;
}

Instance read_instance(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw InputError("failed to read instance stream");
  return parse_instance(buffer.str());
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path.string() + "'");
  return read_instance(in);
}

std::string dump_instance(const Instance& instance) {
  const SensingGraph& s = instance.sensing;
  std::ostringstream out;
  out << "{\n";
  out << "  \"node_count\": " << s.node_count << ",\n";
  out << "  \"user_count\": " << s.user_count << ",\n";
  out << "  \"sensing_edges\": " << edges_json(s.edges).dump() << ",\n";
  if (s.weighted()) out << "  \"edge_weights\": " << json(s.edge_weights).dump() << ",\n";
  out << "  \"social_edges\": " << edges_json(instance.social.edges).dump() << ",\n";
  if (instance.preferences) {
    out << "  \"preferences\": " << json(instance.preferences->per_user_edges).dump() << ",\n";
  }
  if (s.allow_self_loops) out << "  \"self_loops\": true,\n";
  out << "  \"social_hop_radius\": " << instance.social_hop_radius << "\n";
  out << "}\n";
  return out.str();
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write instance file '" + path.string() + "'");
  out << dump_instance(instance);
  if (!out) throw InputError("failed writing instance file '" + path.string() + "'");
}

}  // namespace poishare
