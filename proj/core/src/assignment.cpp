#include "electra/assignment.hpp"

#include <limits>

#include "electra/error.hpp"

namespace electra {

Assignment solve_assignment(std::span<const double> costs, int size) {
  if (size < 0 || costs.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw ShapeMismatch("solve_assignment: cost matrix is not size x size");
  }
  const auto n = static_cast<std::size_t>(size);
  const double inf = std::numeric_limits<double>::infinity();
  auto cost = [&](std::size_t r, std::size_t c) { return costs[(r - 1) * n + (c - 1)]; };

  // 1-based potentials; row_of_col[0] is the virtual root.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0), way(n + 1, 0);
  for (std::size_t r = 1; r <= n; ++r) {
    row_of_col[0] = r;
    std::size_t col = 0;
    std::vector<double> min_slack(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[col] = 1;
      const std::size_t row = row_of_col[col];
      double delta = inf;
      std::size_t next = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double slack = cost(row, c) - u[row] - v[c];
        if (slack < min_slack[c]) {
          min_slack[c] = slack;
          way[c] = col;
        }
        if (min_slack[c] < delta) {
          delta = min_slack[c];
          next = c;
        }
      }
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[row_of_col[c]] += delta;
          v[c] -= delta;
        } else {
          min_slack[c] -= delta;
        }
      }
      col = next;
    } while (row_of_col[col] != 0);
    do {
      const std::size_t prev = way[col];
      row_of_col[col] = row_of_col[prev];
      col = prev;
    } while (col != 0);
  }

  Assignment result;
  result.column_of_row.assign(n, -1);
  for (std::size_t c = 1; c <= n; ++c) {
    result.column_of_row[row_of_col[c] - 1] = static_cast<int>(c - 1);
  }
  for (std::size_t r = 0; r < n; ++r) {
    result.cost += costs[r * n + static_cast<std::size_t>(result.column_of_row[r])];
  }
  return result;
}

}  // namespace electra
