#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "electra/error.hpp"

namespace electra {

/// 0-based candidate index. Labels are metadata; identity is the index.
using Candidate = int;

/// A ballot: candidate indices from most to least preferred.
using Vote = std::vector<Candidate>;

enum class ElectionKind { complete, incomplete };

/// Candidate roster plus an ordered sequence of strict ballots.
///
/// Immutable once built. For complete elections every vote is a permutation
/// of 0..m-1; for incomplete elections every vote is a non-empty,
/// duplicate-free subsequence. The kind is derived, never declared.
class Election {
 public:
  /// Validates and builds; throws InvalidElection on any violated invariant.
  Election(std::vector<std::string> labels, std::vector<Vote> votes);

  /// Convenience: m unnamed candidates.
  static Election unlabeled(int m, std::vector<Vote> votes);

  int m() const { return static_cast<int>(labels_.size()); }
  int n() const { return static_cast<int>(votes_.size()); }
  ElectionKind kind() const { return kind_; }
  bool is_complete() const { return kind_ == ElectionKind::complete; }

  const std::vector<Vote>& votes() const { return votes_; }
  const Vote& vote(int i) const { return votes_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Candidate c) const { return labels_[static_cast<std::size_t>(c)]; }

  /// 0-based position of c in vote i, or -1 if vote i does not rank c.
  int position(int i, Candidate c) const {
    return positions_[static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(c)];
  }
  /// True iff voter i ranks a above b (both must be ranked).
  bool prefers(int i, Candidate a, Candidate b) const { return position(i, a) < position(i, b); }

  /// Throws IncompleteElection unless complete.
  void require_complete() const;

  friend bool operator==(const Election& a, const Election& b) {
    return a.labels_ == b.labels_ && a.votes_ == b.votes_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Vote> votes_;
  std::vector<int> positions_;
  ElectionKind kind_ = ElectionKind::complete;
};

/// Sub-election on the given candidates and voters (all kept when absent).
///
/// Candidates are reindexed to 0..m'-1 in increasing original index order;
/// relative order inside votes and voter order are preserved. Incomplete
/// votes that lose all their candidates are dropped. Throws InvalidElection
/// if indices are out of range or the result would be empty.
Election restrict(const Election& e, const std::optional<std::vector<Candidate>>& keep_candidates,
                  const std::optional<std::vector<int>>& keep_voters);

/// Position-by-candidate matrix of rank frequencies (row = position).
class FrequencyMatrix {
 public:
  FrequencyMatrix() = default;
  explicit FrequencyMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0) {}

  int m() const { return m_; }
  double& at(int position, Candidate c) { return entries_[index(position, c)]; }
  double at(int position, Candidate c) const { return entries_[index(position, c)]; }
  std::span<const double> entries() const { return entries_; }

  /// Every row and column sums to 1 within tol and entries lie in [0, 1].
  bool is_doubly_stochastic(double tol = 1e-9) const;

 private:
  std::size_t index(int p, Candidate c) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c);
  }
  int m_ = 0;
  std::vector<double> entries_;
};

/// entries[p][c] = fraction of voters ranking c at position p.
FrequencyMatrix frequency_matrix(const Election& e);

/// Number of unordered candidate pairs, m(m-1)/2.
constexpr long long candidate_pairs(long long m) { return m * (m - 1) / 2; }

}  // namespace electra
