#pragma once

#include <span>
#include <vector>

namespace electra {

struct Assignment {
  double cost = 0.0;
  std::vector<int> column_of_row;  // row r is matched to column column_of_row[r]
};

/// Exact minimum-cost perfect matching on a square cost matrix (row-major,
/// size x size) by the shortest-augmenting-path Hungarian method, O(size^3).
Assignment solve_assignment(std::span<const double> costs, int size);

}  // namespace electra
