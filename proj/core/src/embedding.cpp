#include <algorithm>
#include <cmath>

#include "electra/mapel.hpp"
#include "electra/rng.hpp"

namespace electra {

double normalized_stress(const DistanceMatrix& d, const std::vector<std::pair<double, double>>& points) {
  double residual = 0.0;
  double scale = 0.0;
  for (int i = 0; i < d.size; ++i) {
    for (int j = i + 1; j < d.size; ++j) {
      const double dx = points[static_cast<std::size_t>(i)].first - points[static_cast<std::size_t>(j)].first;
      const double dy = points[static_cast<std::size_t>(i)].second - points[static_cast<std::size_t>(j)].second;
      const double gap = std::hypot(dx, dy) - d(i, j);
      residual += gap * gap;
      scale += d(i, j) * d(i, j);
    }
  }
  return scale > 0.0 ? std::sqrt(residual / scale) : 0.0;
}

EmbeddedMap embed_map(const DistanceMatrix& d, const EmbedOptions& options) {
  const int n = d.size;
  EmbeddedMap out;
  out.points.resize(static_cast<std::size_t>(n));
  if (n == 0) return out;

  Rng rng(options.seed);
  for (auto& [x, y] : out.points) {
    x = rng.unit();
    y = rng.unit();
  }
  if (n == 1) {
    out.points[0] = {0.0, 0.0};
    return out;
  }

  double longest = 0.0;
  for (double v : d.d) longest = std::max(longest, v);
  if (longest <= 0.0) longest = 1.0;

  const int iterations = std::max(options.iterations, 1);
  const double step = 1.0 / (2.0 * n);  // Jacobi spring step, stable for any n
  const double start_temperature = 0.25 * longest;
  const double min_temperature = 1e-3 * longest;
  const double start_repulsion = 0.05 * longest * longest / n;

  std::vector<std::pair<double, double>> shift(static_cast<std::size_t>(n));
  for (int it = 0; it < iterations; ++it) {
    const double progress = static_cast<double>(it) / iterations;
    const double temperature = std::max(start_temperature * (1.0 - progress), min_temperature);
    const double repulsion = start_repulsion * std::max(0.0, 1.0 - 2.0 * progress);

    std::fill(shift.begin(), shift.end(), std::pair{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto& pi = out.points[static_cast<std::size_t>(i)];
        auto& pj = out.points[static_cast<std::size_t>(j)];
        double dx = pj.first - pi.first;
        double dy = pj.second - pi.second;
        double r = std::hypot(dx, dy);
        if (r < 1e-12) {
          // Coincident points: separate along a fixed pair-dependent direction.
          const double angle = 0.618033988749895 * (i * n + j);
          dx = std::cos(angle) * 1e-12;
          dy = std::sin(angle) * 1e-12;
          r = 1e-12;
        }
        const double spring = step * (r - d(i, j)) / r;
        const double push = repulsion / (r * r);
        const double fx = (spring - push) * dx;
        const double fy = (spring - push) * dy;
        shift[static_cast<std::size_t>(i)].first += fx;
        shift[static_cast<std::size_t>(i)].second += fy;
        shift[static_cast<std::size_t>(j)].first -= fx;
        shift[static_cast<std::size_t>(j)].second -= fy;
      }
    }
    for (int i = 0; i < n; ++i) {
      auto [sx, sy] = shift[static_cast<std::size_t>(i)];
      const double length = std::hypot(sx, sy);
      if (length > temperature) {
        sx *= temperature / length;
        sy *= temperature / length;
      }
      out.points[static_cast<std::size_t>(i)].first += sx;
      out.points[static_cast<std::size_t>(i)].second += sy;
    }
  }
  out.stress = normalized_stress(d, out.points);
  return out;
}

}  // namespace electra
