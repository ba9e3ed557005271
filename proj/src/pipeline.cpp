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

#include "poishare/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <random>
#include <regex>
#include <set>
#include <tuple>

#include "poishare/error.hpp"
#include "poishare/mobile_solver.hpp"
#include "poishare/static_solver.hpp"

namespace poishare {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return out;
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool valid_timestamp(const std::string& text) {
  static const std::regex pattern(
      R"((\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-]\d{2}:?\d{2})?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return false;
  const int month = std::stoi(m[2]);
  const int day = std::stoi(m[3]);
  const int hour = std::stoi(m[4]);
  const int minute = std::stoi(m[5]);
  const int second = std::stoi(m[6]);
  return month >= 1 && month <= 12 && day >= 1 && day <= 31 && hour <= 23 && minute <= 59 &&
         second <= 60;
}

// Union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CheckInLog parse_checkins(std::istream& in) {
  if (!in) throw InputError("check-in stream is not readable");
  CheckInLog log;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto fields = split_tabs(line);
    auto reject = [&](std::string message) { log.issues.push_back({number, std::move(message)}); };
    if (fields.size() != 5) {
      reject("expected 5 tab-separated fields, found " + std::to_string(fields.size()));
      continue;
    }
    CheckIn c;
    c.user_id = std::string(fields[0]);
    c.timestamp = std::string(fields[1]);
    c.location_id = std::string(fields[4]);
    if (c.user_id.empty()) {
      reject("empty user_id");
      continue;
    }
    if (!valid_timestamp(c.timestamp)) {
      reject("timestamp '" + c.timestamp + "' is not ISO-8601");
      continue;
    }
    if (!parse_double(fields[2], c.latitude) || c.latitude < -90.0 || c.latitude > 90.0) {
      reject("latitude '" + std::string(fields[2]) + "' outside [-90, 90]");
      continue;
    }
    if (!parse_double(fields[3], c.longitude) || c.longitude < -180.0 || c.longitude > 180.0) {
      reject("longitude '" + std::string(fields[3]) + "' outside [-180, 180]");
      continue;
    }
    log.records.push_back(std::move(c));
  }
  if (in.bad()) throw InputError("read error in check-in stream at line " + std::to_string(number));
  return log;
}

BoundingBox BoundingBox::sf_sensing_area() {
  return {37.0 + 46.0 / 60.0 + 20.0 / 3600.0, 37.0 + 47.0 / 60.0,
          -(122.0 + 26.0 / 60.0 + 30.0 / 3600.0), -(122.0 + 25.0 / 60.0 + 30.0 / 3600.0)};
}

void BoundingBox::check() const {
  if (!(lat_min < lat_max) || !(lon_min < lon_max)) {
    throw InputError("bounding box needs lat_min < lat_max and lon_min < lon_max");
  }
}

bool BoundingBox::contains(double lat, double lon) const {
  return lat >= lat_min && lat <= lat_max && lon >= lon_min && lon <= lon_max;
}

std::vector<CheckIn> filter_bbox(std::span<const CheckIn> checkins, const BoundingBox& box) {
  std::vector<CheckIn> out;
  for (const CheckIn& c : checkins) {
    if (box.contains(c.latitude, c.longitude)) out.push_back(c);
  }
  return out;
}

double haversine_km(LatLon a, LatLon b) {
  constexpr double rad = std::numbers::pi / 180.0;
  const double dlat = (b.lat - a.lat) * rad;
  const double dlon = (b.lon - a.lon) * rad;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.lat * rad) * std::cos(b.lat * rad) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

Clustering cluster_locations(std::span<const LatLon> points, std::size_t target) {
  if (target == 0) throw InputError("cluster target must be >= 1");

  std::map<LatLon, std::size_t> index;
  std::vector<LatLon> distinct;
  std::vector<std::size_t> point_to_distinct(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = index.emplace(points[i], distinct.size());
    if (inserted) distinct.push_back(points[i]);
    point_to_distinct[i] = it->second;
  }
  const std::size_t n = distinct.size();
  if (target > n) {
    throw InputError("cluster target " + std::to_string(target) + " exceeds the " +
                     std::to_string(n) + " distinct coordinates");
  }

  std::vector<LatLon> centroid = distinct;
  std::vector<double> mass(n, 0.0);
  for (std::size_t d : point_to_distinct) mass[d] += 1.0;
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < n; ++i) owner[i] = i;
  std::vector<char> alive(n, 1);

  // Nearest live neighbor per cluster; ties go to the lower index.
  std::vector<std::size_t> nn(n, n);
  std::vector<double> nn_dist(n, 0.0);
  auto refresh = [&](std::size_t i) {
    nn[i] = n;
    for (std::size_t o = 0; o < n; ++o) {
      if (o == i || !alive[o]) continue;
      const double d = haversine_km(centroid[i], centroid[o]);
      if (nn[i] == n || d < nn_dist[i]) {
        nn[i] = o;
        nn_dist[i] = d;
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);

  for (std::size_t clusters = n; clusters > target; --clusters) {
    std::size_t a = n;
    std::size_t b = n;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const std::size_t lo = std::min(i, nn[i]);
      const std::size_t hi = std::max(i, nn[i]);
      if (a == n || std::tie(nn_dist[i], lo, hi) < std::tie(best, a, b)) {
        best = nn_dist[i];
        a = lo;
        b = hi;
      }
    }
    const double total = mass[a] + mass[b];
    centroid[a] = {(centroid[a].lat * mass[a] + centroid[b].lat * mass[b]) / total,
                   (centroid[a].lon * mass[a] + centroid[b].lon * mass[b]) / total};
    mass[a] = total;
    alive[b] = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (owner[x] == b) owner[x] = a;
    }
    if (clusters - 1 == target) break;
    refresh(a);
    for (std::size_t o = 0; o < n; ++o) {
      if (!alive[o] || o == a) continue;
      if (nn[o] == a || nn[o] == b) {
        refresh(o);
        continue;
      }
      const double d = haversine_km(centroid[o], centroid[a]);
      if (d < nn_dist[o] || (d == nn_dist[o] && a < nn[o])) {
        nn[o] = a;
        nn_dist[o] = d;
      }
    }
  }

  Clustering out;
  std::vector<std::size_t> renumber(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    renumber[i] = out.centroids.size();
    out.centroids.push_back(centroid[i]);
  }
  out.assignment.reserve(points.size());
  for (std::size_t d : point_to_distinct) out.assignment.push_back(renumber[owner[d]]);
  return out;
}

Clustering cluster_locations(std::span<const CheckIn> checkins, std::size_t target) {
  std::vector<LatLon> points;
  points.reserve(checkins.size());
  for (const CheckIn& c : checkins) points.push_back({c.latitude, c.longitude});
  return cluster_locations(points, target);
}

std::vector<Edge> build_roads(std::span<const LatLon> locations, std::size_t knn) {
  if (knn < 1) throw InputError("knn must be >= 1");
  const std::size_t n = locations.size();
  if (n < 2) throw InputError("road construction needs at least 2 locations");

  std::set<std::pair<NodeId, NodeId>> edges;
  std::vector<std::pair<double, NodeId>> order;
  for (NodeId v = 0; v < n; ++v) {
    order.clear();
    for (NodeId w = 0; w < n; ++w) {
      if (w != v) order.emplace_back(haversine_km(locations[v], locations[w]), w);
    }
    const std::size_t take = std::min(knn, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                      order.end());
    for (std::size_t i = 0; i < take; ++i) {
      edges.emplace(std::min(v, order[i].second), std::max(v, order[i].second));
    }
  }

  DisjointSets components(n);
  std::size_t count = n;
  for (const auto& [u, v] : edges) count -= components.unite(u, v) ? 1 : 0;
  if (count > 1) {
    std::vector<std::tuple<double, NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        pairs.emplace_back(haversine_km(locations[u], locations[v]), u, v);
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [d, u, v] : pairs) {
      if (components.unite(u, v)) {
        edges.emplace(u, v);
        if (--count == 1) break;
      }
    }
  }

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

SocialGraph synth_social(std::size_t m, double degree_mean, double degree_sigma,
                         std::uint64_t seed) {
  if (m < 1) throw InputError("social graph needs at least one user");
  if (degree_sigma < 0.0) throw InputError("degree sigma must be non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(degree_mean, degree_sigma > 0.0 ? degree_sigma : 1.0);
  const double cap = static_cast<double>(m - 1);

  std::vector<NodeId> stubs;
  for (NodeId u = 0; u < m; ++u) {
    const double raw = degree_sigma > 0.0 ? normal(rng) : degree_mean;
    const auto degree = static_cast<std::size_t>(std::clamp(std::round(raw), 0.0, cap));
    stubs.insert(stubs.end(), degree, u);
  }
  std::shuffle(stubs.begin(), stubs.end(), rng);

  std::set<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const NodeId a = stubs[i];
    const NodeId b = stubs[i + 1];
    if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
  }
  SocialGraph g;
  g.user_count = m;
  for (const auto& [a, b] : edges) g.edges.push_back({a, b});
  return g;
}

GenMode parse_gen_mode(std::string_view name) {
  if (name == "synthetic-random") return GenMode::SyntheticRandom;
  if (name == "gowalla-like") return GenMode::GowallaLike;
  if (name == "reduction") return GenMode::Reduction;
  throw InputError("unknown generator mode '" + std::string(name) +
                   "' (expected synthetic-random|gowalla-like|reduction)");
}

ReductionKind parse_reduction_kind(std::string_view name) {
  if (name == "vcp") return ReductionKind::Vcp;
  if (name == "mobile") return ReductionKind::Mobile;
  throw InputError("unknown reduction kind '" + std::string(name) + "' (expected vcp|mobile)");
}

std::vector<CheckIn> synth_checkins(const BoundingBox& box, std::size_t count,
                                    std::size_t hotspots, std::uint64_t seed) {
  box.check();
  if (hotspots == 0) throw InputError("hotspot count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lat(box.lat_min, box.lat_max);
  std::uniform_real_distribution<double> lon(box.lon_min, box.lon_max);
  std::vector<LatLon> centers(hotspots);
  for (auto& c : centers) c = {lat(rng), lon(rng)};

  // Jitter of roughly 20 m around each hotspot.
  std::normal_distribution<double> jitter(0.0, 0.00018);
  std::uniform_int_distribution<std::size_t> pick(0, hotspots - 1);
  std::vector<CheckIn> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const LatLon& c = centers[pick(rng)];
    CheckIn record;
    record.user_id = std::to_string(i % 997);
    record.timestamp = "2010-10-19T12:00:00Z";
    record.latitude = std::clamp(c.lat + jitter(rng), box.lat_min, box.lat_max);
    record.longitude = std::clamp(c.lon + jitter(rng), box.lon_min, box.lon_max);
    record.location_id = "h" + std::to_string(i);
    out.push_back(std::move(record));
  }
  return out;
}

Instance instance_from_checkins(std::span<const CheckIn> checkins, std::size_t cluster_target,
                                std::size_t knn, double social_mean, double social_sigma,
                                std::uint64_t seed) {
  const Clustering clusters = cluster_locations(checkins, cluster_target);
  Instance inst;
  inst.sensing.node_count = clusters.centroids.size();
  inst.sensing.user_count = clusters.centroids.size();
  inst.sensing.edges = build_roads(clusters.centroids, knn);
  inst.social = synth_social(inst.sensing.user_count, social_mean, social_sigma, seed);
  return inst;
}

Instance synth_instance(const GenSpec& spec) {
  Instance inst;
  switch (spec.mode) {
    case GenMode::SyntheticRandom: {
      if (spec.user_count < 1 || spec.user_count > spec.node_count) {
        throw InputError("synthetic-random needs 1 <= users <= nodes");
      }
      if (spec.edge_density < 0.0 || spec.edge_density > 1.0) {
        throw InputError("edge density must lie in [0, 1]");
      }
      std::mt19937_64 rng(spec.seed);
      std::bernoulli_distribution coin(spec.edge_density);
      inst.sensing.node_count = spec.node_count;
      inst.sensing.user_count = spec.user_count;
      for (NodeId u = 0; u < spec.node_count; ++u)
        for (NodeId v = u + 1; v < spec.node_count; ++v)
          if (coin(rng)) inst.sensing.edges.push_back({u, v});
      inst.social =
          synth_social(spec.user_count, spec.social_mean, spec.social_sigma, rng());
      inst.social_hop_radius = spec.social_hop_radius;
      break;
    }
    case GenMode::GowallaLike: {
      const BoundingBox box = BoundingBox::sf_sensing_area();
      const auto checkins = synth_checkins(box, spec.checkin_count, spec.hotspot_count, spec.seed);
      inst = instance_from_checkins(checkins, spec.cluster_target, spec.knn, spec.social_mean,
                                    spec.social_sigma, spec.seed + 1);
      inst.social_hop_radius = spec.social_hop_radius;
      break;
    }
    case GenMode::Reduction: {
      inst = vcp_reduction_instance(spec.graph_nodes, spec.graph_edges);
      if (spec.reduction == ReductionKind::Mobile) inst = mobile_reduction_instance(inst, spec.hops);
      break;
    }
  }
  if (auto violations = validate(inst); !violations.empty()) {
    throw InputError("generated instance is invalid: " + describe(violations));
  }
  return inst;
}

}  // namespace poishare
