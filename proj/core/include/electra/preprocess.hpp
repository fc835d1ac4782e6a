#pragma once

#include <cstdint>
#include <vector>

#include "electra/election.hpp"

namespace electra {

/// Voter and candidate subsets such that every kept voter ranks every kept candidate.
struct Biclique {
  std::vector<int> voters;
  std::vector<Candidate> candidates;

  long long edges() const { return static_cast<long long>(voters.size()) * static_cast<long long>(candidates.size()); }
};

/// Large voter x candidate biclique of the "voter ranks candidate" graph.
///
/// Randomized greedy with local search. Start sets are tried in a fixed
/// order: all candidates, then each voter's ranked set from the densest
/// voter down, then random voters with random tie-breaking. `effort` is the
/// number of starts. From each start the greedy repeatedly drops the
/// candidate whose removal admits the most new voters and remembers the best
/// product seen; a swap-based local search polishes the result. The best
/// product wins, ties going to the earliest start. Deterministic per seed.
Biclique max_edge_biclique(const Election& e, int effort = 64, std::uint64_t seed = 0);

/// Complete sub-election induced by max_edge_biclique. Kept votes are the
/// source votes restricted to the kept candidates; nothing is imputed.
Election complete_election(const Election& e, int effort = 64, std::uint64_t seed = 0);

/// An election is relevant when it has at least min_candidates candidates.
bool is_relevant(const Election& e, int min_candidates = 15);

/// Draws m_out candidates uniformly without replacement, then n_out votes
/// uniformly with replacement, from one generator in that order.
Election normalize_sample(const Election& e, int m_out = 15, int n_out = 30, std::uint64_t seed = 0);

}  // namespace electra
