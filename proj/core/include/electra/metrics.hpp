#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "electra/election.hpp"

namespace electra {

/// Number of candidate pairs ordered oppositely by u and v (merge-count,
/// O(m log m)). Throws ShapeMismatch unless u and v rank the same set.
long long kendall_tau(const Vote& u, const Vote& v);

/// wins[a * m + b] = number of voters ranking a above b.
struct PairwiseCounts {
  int m = 0;
  int n = 0;
  std::vector<int> wins;

  int operator()(Candidate a, Candidate b) const {
    return wins[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)];
  }
};
PairwiseCounts pairwise_counts(const Election& e);

struct SimilaritySummary {
  long long max_kt = 0;
  double avg_kt = 0.0;
  long long disagreeing_pairs = 0;
  long long kemeny_score = 0;
};

/// Max/average KT over unordered vote pairs, candidate pairs without
/// unanimity, and the Kemeny score. Requires a complete election with n >= 2.
SimilaritySummary similarity_summary(const Election& e);

struct KemenyResult {
  long long score = 0;
  Vote ranking;
};

inline constexpr int kKemenyMaxCandidates = 24;

/// Exact Kemeny ranking by dynamic programming over candidate subsets.
/// Among optimal rankings the lexicographically smallest is returned.
/// Throws InstanceTooLarge above max_candidates (never falls back to a heuristic).
KemenyResult kemeny(const Election& e, int max_candidates = kKemenyMaxCandidates);

/// Pearson correlation coefficient. Throws UndefinedCorrelation for fewer
/// than two points or zero variance, ShapeMismatch for unequal lengths.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// 1 - 6 sum d^2 / (m (m^2 - 1)) over per-candidate position differences.
double spearman_rank(const Vote& r1, const Vote& r2);

enum class VotePart { top, middle, bottom };

struct PartIntersection {
  VotePart part = VotePart::top;
  int first_position = 1;  // 1-based, inclusive
  int last_position = 1;
  double pairwise = 0.0;
  int total = 0;
  std::vector<Candidate> common;  // candidates inside the part in every vote
  double restricted_avg_kt = 0.0; // mean KT over vote pairs restricted to `common`
};

struct PartReport {
  bool canonical = true;  // false when m != 15 and parts were scaled
  std::array<PartIntersection, 3> parts;
};

/// Overlap of the top (1-8), middle (5-12) and bottom (8-15) position
/// windows for m = 15. Other m use windows of ceil(8m/15) positions placed
/// the same way and the report is flagged non-canonical.
PartReport part_intersections(const Election& e);

struct TemporalProfile {
  double avg_ordering_change = 0.0;
  long long max_ordering_change = 0;
  std::vector<long long> fluctuation_per_position;
  double avg_fluctuation = 0.0;
  /// PCC between KT distance and temporal distance over all vote pairs;
  /// empty when undefined (e.g. constant sequences).
  std::optional<double> kt_temporal_pcc;
};

/// Change statistics along the vote order. With shuffled = true the votes
/// are first permuted with the seed (the random-order baseline).
TemporalProfile temporal_profile(const Election& e, bool shuffled = false, std::uint64_t seed = 0);

struct Magnitude {
  double log10 = 0.0;
  std::string decimal;
};

/// Exponential parts of the O*(2^m), O*(1.53^k) and O*(16^d) Kemeny algorithms.
struct ParameterBudget {
  Magnitude two_pow_m;
  Magnitude pow153_k;
  Magnitude pow16_d;
};

ParameterBudget parameter_budget(int m, long long kemeny_score, double avg_kt);
ParameterBudget parameter_budget(const Election& e);

/// Decimal rendering of base^exponent (scientific once it gets large).
Magnitude magnitude(double base, double exponent);

}  // namespace electra
