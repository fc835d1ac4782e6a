#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "electra/election.hpp"

namespace electra {

enum class Rule { plurality, plurality_runoff, borda, copeland, hare, kemeny };

inline constexpr std::array<Rule, 6> kAllRules{Rule::plurality, Rule::plurality_runoff, Rule::borda,
                                               Rule::copeland,  Rule::hare,             Rule::kemeny};

std::string to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);

/// Weak order over candidates: tie groups from best to worst, each sorted by index.
using Ranking = std::vector<std::vector<Candidate>>;

struct RuleOutcome {
  Rule rule = Rule::plurality;
  std::vector<Candidate> winners;  // sorted, nonempty
  Candidate lex_winner = 0;        // smallest index among winners
  Ranking ranking;
  /// Score vector per round, indexed by candidate. Runoff: first and second
  /// round (-1 for candidates not in the second round). Hare: one entry per
  /// round (-1 for eliminated candidates). Kemeny: empty.
  std::vector<std::vector<long long>> round_scores;
  std::vector<Candidate> elimination_order;  // Hare only
};

/// Plurality, Borda (m - i points for position i) and Copeland (+1 / -1 per
/// strict pairwise majority win / loss) rank candidates by score.
/// Plurality with runoff keeps every candidate tied at the top when more
/// than two are, otherwise the highest and second-highest scorers, and
/// ranks by second-round score ahead of first-round score. Hare eliminates
/// a lowest plurality scorer per round; among several, the one the first
/// voter ranks lowest. If all remaining candidates tie they all win, and the
/// ranking is the reverse elimination order. Kemeny returns the exact
/// (lexicographically first optimal) consensus ranking.
RuleOutcome apply_rule(const Election& e, Rule rule);

struct CondorcetWinners {
  std::optional<Candidate> strong;  // beats every other by strict majority
  std::vector<Candidate> weak;      // never beaten by a strict majority
};

CondorcetWinners condorcet_winners(const Election& e);

enum class CondorcetNotion { strong, weak };

struct CondorcetEfficiency {
  double efficiency = 0.0;          // among admitting elections, share where a winner is selected
  double admitting_fraction = 0.0;  // share of elections with such a winner
};

/// Throws Error when no election admits a winner of the notion.
CondorcetEfficiency condorcet_efficiency(const std::vector<Election>& elections, Rule rule, CondorcetNotion notion);

enum class WinnerMeasure { lexicographic, nonempty_overlap, normalized_overlap };

std::string to_string(WinnerMeasure measure);

/// Agreement of two winner sets under the measure.
double winner_agreement(const RuleOutcome& a, const RuleOutcome& b, WinnerMeasure measure);

/// Mean winner agreement of two rules over a nonempty list.
double winner_consensus(const std::vector<Election>& elections, Rule a, Rule b, WinnerMeasure measure);

/// 1-based average ranks of a weak order (ties share the mean of their ranks).
std::vector<double> average_ranks(const Ranking& ranking, int m);

/// Spearman correlation of two weak orders with average ranks; empty when
/// undefined (a constant ranking that differs from the other one).
std::optional<double> ranking_correlation(const Ranking& a, const Ranking& b, int m);

/// Mean ranking correlation over the elections where it is defined. Throws
/// UndefinedCorrelation when it is defined for none.
double ranking_consensus(const std::vector<Election>& elections, Rule a, Rule b);

struct TieReport {
  std::vector<Rule> rules;
  std::vector<double> overall;  // share of elections with two or more winners, per rule
  /// Same, restricted to elections without a strong Condorcet winner; empty if there are none.
  std::optional<std::vector<double>> without_strong_condorcet;
};

TieReport tie_report(const std::vector<Election>& elections, const std::vector<Rule>& rules);

}  // namespace electra
