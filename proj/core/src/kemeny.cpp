#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "electra/metrics.hpp"

namespace electra {

// g[S] = cheapest ordering of the candidate set S when it occupies the
// bottom |S| positions. Placing c first among S costs the voters who prefer
// some b in S \ {c} to c. Column sums over S are split into two half-width
// lookup tables so each transition is O(1).
KemenyResult kemeny(const Election& e, int max_candidates) {
  e.require_complete();
  const int m = e.m();
  if (m > max_candidates || m > kKemenyMaxCandidates) {
    throw InstanceTooLarge("kemeny: " + std::to_string(m) + " candidates exceeds the exact-solver guard of " +
                           std::to_string(std::min(max_candidates, kKemenyMaxCandidates)));
  }
  const PairwiseCounts w = pairwise_counts(e);
  if (static_cast<long long>(e.n()) * candidate_pairs(m) >= std::numeric_limits<std::uint32_t>::max()) {
    throw InstanceTooLarge("kemeny: score range exceeds 32-bit table");
  }

  const int lo_bits = m / 2;
  const int hi_bits = m - lo_bits;
  const std::uint32_t lo_mask = (std::uint32_t{1} << lo_bits) - 1;
  // lo[c][mask] = sum_{b in mask} wins(b, c) for b < lo_bits; hi likewise for b >= lo_bits.
  std::vector<std::vector<std::uint32_t>> lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    auto& tl = lo[static_cast<std::size_t>(c)];
    auto& th = hi[static_cast<std::size_t>(c)];
    tl.assign(std::size_t{1} << lo_bits, 0);
    th.assign(std::size_t{1} << hi_bits, 0);
    for (std::uint32_t mask = 1; mask < tl.size(); ++mask) {
      const int b = std::countr_zero(mask);
      tl[mask] = tl[mask & (mask - 1)] + static_cast<std::uint32_t>(w(b, c));
    }
    for (std::uint32_t mask = 1; mask < th.size(); ++mask) {
      const int b = std::countr_zero(mask) + lo_bits;
      th[mask] = th[mask & (mask - 1)] + static_cast<std::uint32_t>(w(b, c));
    }
  }
  auto against = [&](int c, std::uint32_t set) {
    return lo[static_cast<std::size_t>(c)][set & lo_mask] + hi[static_cast<std::size_t>(c)][set >> lo_bits];
  };

  const std::uint32_t full = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> g(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t set = 1; set <= full && set != 0; ++set) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      const std::uint32_t without = set & ~(std::uint32_t{1} << c);
      const std::uint32_t cost = g[without] + against(c, without);
      if (cost < best) best = cost;
    }
    g[set] = best;
  }

  KemenyResult result;
  result.score = g[full];
  std::uint32_t set = full;
  while (set != 0) {
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      const std::uint32_t without = set & ~(std::uint32_t{1} << c);
      if (g[without] + against(c, without) == g[set]) {
        result.ranking.push_back(c);
        set = without;
        break;
      }
    }
  }
  return result;
}

}  // namespace electra
