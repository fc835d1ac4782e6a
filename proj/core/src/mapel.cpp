#include "electra/mapel.hpp"

#include <cmath>
#include <cstdio>

#include "electra/assignment.hpp"
#include "electra/parallel.hpp"

namespace electra {

std::string to_string(CompassKind kind) {
  switch (kind) {
    case CompassKind::identity: return "identity";
    case CompassKind::uniformity: return "uniformity";
    case CompassKind::antagonism: return "antagonism";
    case CompassKind::stratification: return "stratification";
  }
  return "unknown";
}

namespace {

FrequencyMatrix base_matrix(CompassKind kind, int m) {
  if (m < 1) throw InvalidElection("compass_matrix: m must be positive");
  FrequencyMatrix f(m);
  switch (kind) {
    case CompassKind::identity:
      for (int p = 0; p < m; ++p) f.at(p, p) = 1.0;
      break;
    case CompassKind::uniformity:
      for (int p = 0; p < m; ++p) {
        for (int c = 0; c < m; ++c) f.at(p, c) = 1.0 / m;
      }
      break;
    case CompassKind::antagonism:
      for (int c = 0; c < m; ++c) {
        f.at(c, c) += 0.5;
        f.at(m - 1 - c, c) += 0.5;
      }
      break;
    case CompassKind::stratification: {
      if (m % 2 != 0) throw InvalidElection("compass_matrix: stratification needs an even number of candidates");
      const int half = m / 2;
      for (int p = 0; p < m; ++p) {
        for (int c = 0; c < m; ++c) {
          if ((p < half) == (c < half)) f.at(p, c) = 2.0 / m;
        }
      }
      break;
    }
  }
  return f;
}

std::vector<double> column(const FrequencyMatrix& f, int c) {
  std::vector<double> out(static_cast<std::size_t>(f.m()));
  for (int p = 0; p < f.m(); ++p) out[static_cast<std::size_t>(p)] = f.at(p, c);
  return out;
}

}  // namespace

FrequencyMatrix compass_matrix(const CompassSpec& spec) {
  FrequencyMatrix a = base_matrix(spec.kind, spec.m);
  if (!spec.path_to) return a;
  if (!(spec.alpha >= 0.0 && spec.alpha <= 1.0)) throw InvalidElection("compass_matrix: alpha must lie in [0, 1]");
  const FrequencyMatrix b = base_matrix(*spec.path_to, spec.m);
  std::vector<int> column_of;
  positionwise_distance(a, b, column_of);
  FrequencyMatrix mixed(spec.m);
  for (int c = 0; c < spec.m; ++c) {
    const int aligned = column_of[static_cast<std::size_t>(c)];
    for (int p = 0; p < spec.m; ++p) {
      mixed.at(p, c) = spec.alpha * a.at(p, c) + (1.0 - spec.alpha) * b.at(p, aligned);
    }
  }
  return mixed;
}

double emd(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeMismatch("emd: distributions differ in length");
  double prefix = 0.0;
  double total = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    prefix += a[p] - b[p];
    total += std::abs(prefix);
  }
  return total;
}

double positionwise_distance(const FrequencyMatrix& f, const FrequencyMatrix& g, std::vector<int>& column_of) {
  if (f.m() != g.m()) throw ShapeMismatch("positionwise_distance: matrices differ in size");
  const int m = f.m();
  std::vector<std::vector<double>> fc, gc;
  for (int c = 0; c < m; ++c) {
    fc.push_back(column(f, c));
    gc.push_back(column(g, c));
  }
  std::vector<double> costs(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      costs[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          emd(fc[static_cast<std::size_t>(i)], gc[static_cast<std::size_t>(j)]);
    }
  }
  Assignment a = solve_assignment(costs, m);
  column_of = std::move(a.column_of_row);
  return a.cost;
}

double positionwise_distance(const FrequencyMatrix& f, const FrequencyMatrix& g) {
  std::vector<int> ignored;
  return positionwise_distance(f, g, ignored);
}

std::map<std::pair<std::string, std::string>, double> DistanceMatrix::group_averages() const {
  std::map<std::pair<std::string, std::string>, std::pair<double, long long>> sums;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == j) continue;
      auto& [sum, count] = sums[{tags[static_cast<std::size_t>(i)], tags[static_cast<std::size_t>(j)]}];
      sum += (*this)(i, j);
      ++count;
    }
  }
  std::map<std::pair<std::string, std::string>, double> out;
  for (const auto& [key, value] : sums) out[key] = value.first / static_cast<double>(value.second);
  return out;
}

std::vector<MapPoint> compass_points(int m) {
  std::vector<CompassKind> kinds{CompassKind::identity, CompassKind::uniformity, CompassKind::antagonism};
  if (m % 2 == 0) kinds.push_back(CompassKind::stratification);
  std::vector<MapPoint> points;
  const std::string tag(kCompassTag);
  for (CompassKind k : kinds) points.push_back({to_string(k), tag, compass_matrix(CompassSpec::single(k, m))});
  for (std::size_t a = 0; a < kinds.size(); ++a) {
    for (std::size_t b = a + 1; b < kinds.size(); ++b) {
      for (double alpha : {0.25, 0.5, 0.75}) {
        char id[96];
        std::snprintf(id, sizeof id, "path_%s_%s_%.2f", to_string(kinds[a]).c_str(), to_string(kinds[b]).c_str(), alpha);
        points.push_back({id, tag, compass_matrix(CompassSpec::path(kinds[a], kinds[b], alpha, m))});
      }
    }
  }
  return points;
}

DistanceMatrix distance_matrix(std::vector<MapPoint> points, bool include_compass, int jobs) {
  if (points.empty() && !include_compass) throw InvalidElection("distance_matrix: no points");
  const int m = points.empty() ? 0 : points.front().matrix.m();
  for (const MapPoint& p : points) {
    if (p.matrix.m() != m) throw ShapeMismatch("distance_matrix: elections have different numbers of candidates");
  }
  if (include_compass) {
    if (m == 0) throw InvalidElection("distance_matrix: compass needs at least one election to fix m");
    for (MapPoint& p : compass_points(m)) points.push_back(std::move(p));
  }
  DistanceMatrix out;
  out.size = static_cast<int>(points.size());
  out.d.assign(points.size() * points.size(), 0.0);
  for (const MapPoint& p : points) {
    out.labels.push_back(p.id);
    out.tags.push_back(p.tag);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < out.size; ++i) {
    for (int j = i + 1; j < out.size; ++j) pairs.emplace_back(i, j);
  }
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    const double d = positionwise_distance(points[static_cast<std::size_t>(i)].matrix, points[static_cast<std::size_t>(j)].matrix);
    out.d[static_cast<std::size_t>(i) * points.size() + static_cast<std::size_t>(j)] = d;
    out.d[static_cast<std::size_t>(j) * points.size() + static_cast<std::size_t>(i)] = d;
  });
  return out;
}

}  // namespace electra
