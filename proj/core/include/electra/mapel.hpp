#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "electra/election.hpp"

namespace electra {

enum class CompassKind { identity, uniformity, antagonism, stratification };

std::string to_string(CompassKind kind);

/// A compass election, or the convex path alpha * A + (1 - alpha) * B.
struct CompassSpec {
  CompassKind kind = CompassKind::identity;
  std::optional<CompassKind> path_to;  // set for paths
  double alpha = 1.0;
  int m = 1;

  static CompassSpec single(CompassKind kind, int m) { return {kind, std::nullopt, 1.0, m}; }
  static CompassSpec path(CompassKind a, CompassKind b, double alpha, int m) { return {a, b, alpha, m}; }
};

/// Frequency matrix of a compass election or path. Path endpoints are mixed
/// after aligning B's columns to A's by the optimal EMD matching.
FrequencyMatrix compass_matrix(const CompassSpec& spec);

/// 1-D earth mover's distance between two distributions over positions
/// 0..m-1 with unit spacing: sum of absolute prefix-sum differences.
double emd(std::span<const double> a, std::span<const double> b);

/// Minimum over candidate bijections of the summed column EMDs.
double positionwise_distance(const FrequencyMatrix& f, const FrequencyMatrix& g);

/// Same, also returning the minimizing column matching (column c of f -> column_of[c] of g).
double positionwise_distance(const FrequencyMatrix& f, const FrequencyMatrix& g, std::vector<int>& column_of);

struct MapPoint {
  std::string id;
  std::string tag;
  FrequencyMatrix matrix;
};

struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<std::string> tags;
  int size = 0;
  std::vector<double> d;  // row-major size x size

  double operator()(int i, int j) const {
    return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)];
  }
  /// Mean distance between members of tag a and of tag b (distinct points only).
  std::map<std::pair<std::string, std::string>, double> group_averages() const;
};

inline constexpr std::string_view kCompassTag = "compass";

/// Compass points (and paths at alpha 0.25/0.5/0.75 between every compass
/// pair) tagged "compass". Stratification is skipped for odd m.
std::vector<MapPoint> compass_points(int m);

/// All pairwise positionwise distances, computed with `jobs` threads.
DistanceMatrix distance_matrix(std::vector<MapPoint> points, bool include_compass, int jobs = 1);

struct EmbeddedMap {
  std::vector<std::pair<double, double>> points;
  double stress = 0.0;
};

struct EmbedOptions {
  int iterations = 1000;
  std::uint64_t seed = 0;
};

/// Force-directed 2-D layout: springs pull each pair toward its target
/// distance, a 1/r repulsion that cools to zero keeps points apart early on,
/// and step lengths are capped by a decreasing temperature. Starts from
/// seeded uniform positions in the unit square.
EmbeddedMap embed_map(const DistanceMatrix& d, const EmbedOptions& options = {});

/// sqrt(sum (|p_i - p_j| - d_ij)^2 / sum d_ij^2) over i < j.
double normalized_stress(const DistanceMatrix& d, const std::vector<std::pair<double, double>>& points);

}  // namespace electra
