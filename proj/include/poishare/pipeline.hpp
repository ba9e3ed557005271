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

// Instance construction from check-in logs and from seeded generators.

#ifndef POISHARE_PIPELINE_HPP_
#define POISHARE_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "poishare/model.hpp"

namespace poishare {

struct CheckIn {
  std::string user_id;
  std::string timestamp;
  double latitude = 0.0;
  double longitude = 0.0;
  std::string location_id;
};

struct ParseIssue {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct CheckInLog {
  std::vector<CheckIn> records;
  std::vector<ParseIssue> issues;
};

// Tab-separated user_id, timestamp, latitude, longitude, location_id.
// Malformed lines are skipped and reported; blank lines are ignored.
// Throws InputError if the stream cannot be read.
CheckInLog parse_checkins(std::istream& in);

struct BoundingBox {
  double lat_min = -90.0;
  double lat_max = 90.0;
  double lon_min = -180.0;
  double lon_max = 180.0;

  // 37°46'20"N..37°47'N, 122°26'30"W..122°25'30"W (central San Francisco).
  static BoundingBox sf_sensing_area();
  // Throws InputError unless lat_min < lat_max and lon_min < lon_max.
  void check() const;
  bool contains(double lat, double lon) const;
};

std::vector<CheckIn> filter_bbox(std::span<const CheckIn> checkins, const BoundingBox& box);

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const LatLon&, const LatLon&) = default;
  friend auto operator<=>(const LatLon&, const LatLon&) = default;
};

double haversine_km(LatLon a, LatLon b);

struct Clustering {
  std::vector<LatLon> centroids;
  std::vector<std::size_t> assignment;  // input point -> centroid index
};

// Agglomerative centroid-linkage clustering under haversine distance, stopped
// at exactly `target` clusters. Identical coordinates are merged first.
// Throws InputError if target is 0 or exceeds the distinct coordinate count.
Clustering cluster_locations(std::span<const LatLon> points, std::size_t target);
Clustering cluster_locations(std::span<const CheckIn> checkins, std::size_t target);

// Undirected kNN graph (an edge if either endpoint picks the other) plus the
// shortest extra edges needed to connect it. Edges come out with u < v, sorted.
std::vector<Edge> build_roads(std::span<const LatLon> locations, std::size_t knn);

// Gaussian target degrees, rounded and clipped to [0, m-1], realized by a
// random stub matching that drops self-loops and repeated pairs.
SocialGraph synth_social(std::size_t m, double degree_mean, double degree_sigma,
                         std::uint64_t seed);

enum class GenMode { SyntheticRandom, GowallaLike, Reduction };
enum class ReductionKind { Vcp, Mobile };

GenMode parse_gen_mode(std::string_view name);
ReductionKind parse_reduction_kind(std::string_view name);

struct GenSpec {
  GenMode mode = GenMode::SyntheticRandom;
  std::uint64_t seed = 1;

  // synthetic-random
  std::size_t node_count = 10;
  std::size_t user_count = 10;
  double edge_density = 0.3;

  // social graph (synthetic-random, gowalla-like)
  double social_mean = 24.0;
  double social_sigma = 8.0;
  unsigned social_hop_radius = 1;

  // gowalla-like
  std::size_t checkin_count = 2176;
  std::size_t hotspot_count = 140;
  std::size_t cluster_target = 92;
  std::size_t knn = 4;

  // reduction
  ReductionKind reduction = ReductionKind::Vcp;
  std::size_t graph_nodes = 3;
  std::vector<Edge> graph_edges = {{0, 1}, {1, 2}, {0, 2}};
  std::size_t hops = 1;
};

// Synthetic check-ins scattered around seeded hotspots inside `box`.
std::vector<CheckIn> synth_checkins(const BoundingBox& box, std::size_t count,
                                    std::size_t hotspots, std::uint64_t seed);

// Clusters check-ins into user nodes, joins them with roads and attaches a
// Gaussian social graph.
Instance instance_from_checkins(std::span<const CheckIn> checkins, std::size_t cluster_target,
                                std::size_t knn, double social_mean, double social_sigma,
                                std::uint64_t seed);

// Every produced instance passes validate().
Instance synth_instance(const GenSpec& spec);

}  // namespace poishare

#endif  // POISHARE_PIPELINE_HPP_
