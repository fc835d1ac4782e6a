#include <algorithm>
#include <iterator>

#include "electra/metrics.hpp"
#include "electra/rules.hpp"

namespace electra {

std::string to_string(WinnerMeasure measure) {
  switch (measure) {
    case WinnerMeasure::lexicographic: return "lexicographic";
    case WinnerMeasure::nonempty_overlap: return "nonempty_overlap";
    case WinnerMeasure::normalized_overlap: return "normalized_overlap";
  }
  return "unknown";
}

double winner_agreement(const RuleOutcome& a, const RuleOutcome& b, WinnerMeasure measure) {
  std::vector<Candidate> common;
  std::set_intersection(a.winners.begin(), a.winners.end(), b.winners.begin(), b.winners.end(),
                        std::back_inserter(common));
  switch (measure) {
    case WinnerMeasure::lexicographic:
      return a.lex_winner == b.lex_winner ? 1.0 : 0.0;
    case WinnerMeasure::nonempty_overlap:
      return common.empty() ? 0.0 : 1.0;
    case WinnerMeasure::normalized_overlap: {
      const std::size_t joined = a.winners.size() + b.winners.size() - common.size();
      return static_cast<double>(common.size()) / static_cast<double>(joined);
    }
  }
  return 0.0;
}

double winner_consensus(const std::vector<Election>& elections, Rule a, Rule b, WinnerMeasure measure) {
  if (elections.empty()) throw Error("winner consensus needs at least one election");
  double total = 0.0;
  for (const Election& e : elections) {
    const RuleOutcome x = apply_rule(e, a);
    total += a == b ? 1.0 : winner_agreement(x, apply_rule(e, b), measure);
  }
  return total / static_cast<double>(elections.size());
}

std::vector<double> average_ranks(const Ranking& ranking, int m) {
  std::vector<double> rank(static_cast<std::size_t>(m), 0.0);
  int placed = 0;
  for (const auto& group : ranking) {
    const double mean = placed + (static_cast<double>(group.size()) + 1.0) / 2.0;
    for (Candidate c : group) rank[static_cast<std::size_t>(c)] = mean;
    placed += static_cast<int>(group.size());
  }
  if (placed != m) throw ShapeMismatch("ranking does not cover every candidate exactly once");
  return rank;
}

std::optional<double> ranking_correlation(const Ranking& a, const Ranking& b, int m) {
  const std::vector<double> x = average_ranks(a, m);
  const std::vector<double> y = average_ranks(b, m);
  if (x == y) return 1.0;
  try {
    return pearson(x, y);
  } catch (const UndefinedCorrelation&) {
    return std::nullopt;
  }
}

double ranking_consensus(const std::vector<Election>& elections, Rule a, Rule b) {
  double total = 0.0;
  long long defined = 0;
  for (const Election& e : elections) {
    const auto r = ranking_correlation(apply_rule(e, a).ranking, apply_rule(e, b).ranking, e.m());
    if (!r) continue;
    total += *r;
    ++defined;
  }
  if (defined == 0) throw UndefinedCorrelation("ranking correlation is undefined on every election");
  return total / static_cast<double>(defined);
}

TieReport tie_report(const std::vector<Election>& elections, const std::vector<Rule>& rules) {
  if (elections.empty()) throw Error("tie report needs at least one election");
  TieReport report;
  report.rules = rules;
  std::vector<long long> tied(rules.size(), 0);
  std::vector<long long> tied_without(rules.size(), 0);
  long long without = 0;
  for (const Election& e : elections) {
    const bool no_strong = !condorcet_winners(e).strong.has_value();
    if (no_strong) ++without;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (apply_rule(e, rules[r]).winners.size() < 2) continue;
      ++tied[r];
      if (no_strong) ++tied_without[r];
    }
  }
  for (std::size_t r = 0; r < rules.size(); ++r) {
    report.overall.push_back(static_cast<double>(tied[r]) / static_cast<double>(elections.size()));
  }
  if (without > 0) {
    report.without_strong_condorcet.emplace();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      report.without_strong_condorcet->push_back(static_cast<double>(tied_without[r]) / static_cast<double>(without));
    }
  }
  return report;
}

}  // namespace electra
