#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "electra/election.hpp"

namespace electra {

/// Societal order over candidates (leftmost first).
struct Axis {
  std::vector<Candidate> order;
  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Order of voters (indices into the election).
struct VoterOrder {
  std::vector<int> voters;
  friend bool operator==(const VoterOrder&, const VoterOrder&) = default;
};

/// Laminar decomposition: a leaf holds one candidate, an inner node splits
/// its candidates into two children that every voter ranks one fully above
/// the other.
struct PartitionTree {
  std::vector<Candidate> candidates;
  std::vector<PartitionTree> children;
};

// ---- Recognition -----------------------------------------------------------

enum class TieBreak { greedy_fixed, random };

/// Single-peaked axis if one exists. Builds the axis from the outside in:
/// candidates ranked last among the remaining ones by some voter go to the
/// free ends, with backtracking over the side choice. greedy_fixed tries the
/// lower-index candidate on the left (top) free position first; random
/// orders the choices with the seed. The axis is verified before returning.
std::optional<Axis> detect_single_peaked(const Election& e, TieBreak tie_break = TieBreak::greedy_fixed,
                                         std::uint64_t seed = 0);

/// Single-crossing voter order if one exists: votes sorted by KT distance to
/// the vote farthest from vote 0, then verified.
std::optional<VoterOrder> detect_single_crossing(const Election& e);

/// Group-separable decomposition tree if one exists (polynomial recursive split search).
std::optional<PartitionTree> detect_group_separable(const Election& e);

/// No candidate triple on which every candidate is ranked first, middle and
/// last by some voter.
bool is_value_restricted(const Election& e);

bool is_compatible_axis(const Election& e, const Axis& axis);
bool is_single_crossing_order(const Election& e, const VoterOrder& order);
bool is_valid_partition_tree(const Election& e, const PartitionTree& tree);

// ---- Forbidden configurations ---------------------------------------------

enum class ConfigurationKind { alpha, beta, gamma, delta, best, worst, medium, value };
inline constexpr std::array<ConfigurationKind, 8> kAllConfigurations{
    ConfigurationKind::alpha, ConfigurationKind::beta,  ConfigurationKind::gamma,  ConfigurationKind::delta,
    ConfigurationKind::best,  ConfigurationKind::worst, ConfigurationKind::medium, ConfigurationKind::value};

std::string to_string(ConfigurationKind kind);

/// Voter and candidate tuples in the roles of the pattern's definition
/// (alpha/beta: v, v' and a, b, c, d; gamma: v, v', v'' and a..f; delta:
/// v..v''' and a, b, c, d; best/worst/medium/value: v, v', v'' and a, b, c).
struct ForbiddenConfigurationWitness {
  ConfigurationKind kind = ConfigurationKind::alpha;
  std::vector<int> voters;
  std::vector<Candidate> candidates;
  friend bool operator==(const ForbiddenConfigurationWitness&, const ForbiddenConfigurationWitness&) = default;
};

/// Lexicographically first witness by (voter tuple, candidate tuple).
std::optional<ForbiddenConfigurationWitness> find_configuration(const Election& e, ConfigurationKind kind);

/// True iff the cited voters and candidates realize the pattern verbatim.
bool witness_holds(const Election& e, const ForbiddenConfigurationWitness& w);

// ---- Deletion distances ----------------------------------------------------

enum class Domain { single_peaked, single_crossing, group_separable, value_restricted };
enum class DeletionMode { voters, candidates };

inline constexpr std::array<Domain, 4> kAllDomains{Domain::single_peaked, Domain::single_crossing,
                                                   Domain::group_separable, Domain::value_restricted};

std::string to_string(Domain domain);
std::string to_string(DeletionMode mode);

/// Configurations whose joint absence characterizes the domain
/// (value-restriction has a single one).
std::vector<ConfigurationKind> forbidden_configurations(Domain domain);

using Certificate = std::variant<std::monostate, Axis, VoterOrder, PartitionTree>;

/// Membership test; certificate for SP/SC/GS members, monostate for VR members.
std::optional<Certificate> recognize(const Election& e, Domain domain);

struct DeletionResult {
  Domain domain = Domain::single_peaked;
  DeletionMode mode = DeletionMode::voters;
  int k = 0;                 // optimum, or a lower bound when exceeds_budget
  bool exceeds_budget = false;
  std::vector<int> deleted;  // voter or candidate indices of the input election
  Certificate certificate;   // for the residual, in input indices
};

/// Exact minimum number of voters (or candidates) to delete so that the rest
/// lies in the domain. Witnesses of the domain's forbidden configurations are
/// collected as sets that must be hit; a branch-and-bound minimum hitting set
/// is re-solved until the recognizer accepts the residual. With a budget the
/// search stops once the optimum provably exceeds it.
DeletionResult deletion_distance(const Election& e, Domain domain, DeletionMode mode,
                                 std::optional<int> budget = std::nullopt);

// ---- Reports and statistics -------------------------------------------------

struct DomainRow {
  std::string id;
  std::array<bool, 4> member{};  // indexed like kAllDomains
  /// Deletion distances for SP, SC, GS; empty when beyond the budget.
  std::array<std::optional<int>, 3> candidate_distance;
  std::array<std::optional<int>, 3> voter_distance;
};

/// Elections within distance `threshold` of exactly the domains in a region.
/// Region bit 0 = single-peaked, bit 1 = single-crossing, bit 2 = group-separable.
struct VennTable {
  DeletionMode mode = DeletionMode::candidates;
  int threshold = 0;
  std::array<int, 8> regions{};
};

struct DomainReport {
  std::vector<DomainRow> rows;
  std::vector<VennTable> venn;
  /// PCC of deletion distances for domain pairs (SP,SC), (SP,GS), (SC,GS);
  /// empty when undefined or when some distance exceeded the budget.
  std::array<std::optional<double>, 3> candidate_distance_pcc;
  std::array<std::optional<double>, 3> voter_distance_pcc;
};

inline constexpr std::array<int, 4> kCandidateVennThresholds{0, 1, 2, 3};
inline constexpr std::array<int, 4> kVoterVennThresholds{0, 2, 4, 6};

DomainReport domain_report(const std::vector<std::pair<std::string, Election>>& elections,
                           std::optional<int> budget = std::nullopt, int jobs = 1);

struct AxisStatistics {
  std::vector<int> top_choice_rank_histogram;  // index p = axis position p + 1
  int distinct_top_choices = 0;
};

AxisStatistics axis_statistics(const Election& e, const Axis& axis);

/// Fraction of candidate pairs whose relative order changes somewhere along the voter order.
double changing_pairs_fraction(const Election& e, const VoterOrder& order);

}  // namespace electra
