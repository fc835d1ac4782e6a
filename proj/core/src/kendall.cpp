#include <algorithm>
#include <vector>

#include "electra/metrics.hpp"

namespace electra {

namespace {

// Counts inversions of seq[lo, hi) while merge-sorting it.
long long count_inversions(std::vector<int>& seq, std::vector<int>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long long inversions = count_inversions(seq, scratch, lo, mid) + count_inversions(seq, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (seq[j] < seq[i]) {
      inversions += static_cast<long long>(mid - i);
      scratch[k++] = seq[j++];
    } else {
      scratch[k++] = seq[i++];
    }
  }
  while (i < mid) scratch[k++] = seq[i++];
  while (j < hi) scratch[k++] = seq[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            seq.begin() + static_cast<std::ptrdiff_t>(lo));
  return inversions;
}

}  // namespace

long long kendall_tau(const Vote& u, const Vote& v) {
  if (u.size() != v.size()) throw ShapeMismatch("kendall_tau: votes rank different numbers of candidates");
  if (u.empty()) return 0;
  const Candidate top = std::max(*std::max_element(u.begin(), u.end()), *std::max_element(v.begin(), v.end()));
  std::vector<int> pos_u(static_cast<std::size_t>(top) + 1, -1);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p] < 0) throw ShapeMismatch("kendall_tau: negative candidate index");
    pos_u[static_cast<std::size_t>(u[p])] = static_cast<int>(p);
  }
  std::vector<int> seq(v.size());
  std::vector<char> seen(pos_u.size(), 0);
  for (std::size_t p = 0; p < v.size(); ++p) {
    const Candidate c = v[p];
    if (c < 0 || pos_u[static_cast<std::size_t>(c)] == -1 || seen[static_cast<std::size_t>(c)]) {
      throw ShapeMismatch("kendall_tau: votes rank different candidate sets");
    }
    seen[static_cast<std::size_t>(c)] = 1;
    seq[p] = pos_u[static_cast<std::size_t>(c)];
  }
  std::vector<int> scratch(seq.size());
  return count_inversions(seq, scratch, 0, seq.size());
}

PairwiseCounts pairwise_counts(const Election& e) {
  e.require_complete();
  PairwiseCounts counts;
  counts.m = e.m();
  counts.n = e.n();
  const auto m = static_cast<std::size_t>(e.m());
  counts.wins.assign(m * m, 0);
  for (const Vote& v : e.votes()) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) ++counts.wins[static_cast<std::size_t>(v[i]) * m + static_cast<std::size_t>(v[j])];
    }
  }
  return counts;
}

}  // namespace electra
