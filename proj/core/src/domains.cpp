#include <algorithm>

#include "electra/domains.hpp"
#include "electra/metrics.hpp"
#include "electra/parallel.hpp"

namespace electra {

std::string to_string(Domain domain) {
  switch (domain) {
    case Domain::single_peaked: return "single_peaked";
    case Domain::single_crossing: return "single_crossing";
    case Domain::group_separable: return "group_separable";
    case Domain::value_restricted: return "value_restricted";
  }
  return "unknown";
}

std::string to_string(DeletionMode mode) { return mode == DeletionMode::voters ? "voters" : "candidates"; }

namespace {

std::optional<double> distance_pcc(const std::vector<DomainRow>& rows, DeletionMode mode, int x, int y) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const DomainRow& row : rows) {
    const auto& d = mode == DeletionMode::candidates ? row.candidate_distance : row.voter_distance;
    if (!d[static_cast<std::size_t>(x)] || !d[static_cast<std::size_t>(y)]) return std::nullopt;
    xs.push_back(*d[static_cast<std::size_t>(x)]);
    ys.push_back(*d[static_cast<std::size_t>(y)]);
  }
  try {
    return pearson(xs, ys);
  } catch (const UndefinedCorrelation&) {
    return std::nullopt;
  }
}

}  // namespace

DomainReport domain_report(const std::vector<std::pair<std::string, Election>>& elections, std::optional<int> budget,
                           int jobs) {
  for (const auto& [id, e] : elections) {
    e.require_complete();
    if (e.m() != elections.front().second.m()) throw ShapeMismatch("domain report needs a uniform number of candidates");
  }

  DomainReport report;
  report.rows.resize(elections.size());
  parallel_for(elections.size(), jobs, [&](std::size_t k) {
    const auto& [id, e] = elections[k];
    DomainRow& row = report.rows[k];
    row.id = id;
    for (std::size_t d = 0; d < kAllDomains.size(); ++d) row.member[d] = recognize(e, kAllDomains[d]).has_value();
    for (std::size_t d = 0; d < 3; ++d) {
      const auto by_candidates = deletion_distance(e, kAllDomains[d], DeletionMode::candidates, budget);
      if (!by_candidates.exceeds_budget) row.candidate_distance[d] = by_candidates.k;
      const auto by_voters = deletion_distance(e, kAllDomains[d], DeletionMode::voters, budget);
      if (!by_voters.exceeds_budget) row.voter_distance[d] = by_voters.k;
    }
  });

  for (DeletionMode mode : {DeletionMode::candidates, DeletionMode::voters}) {
    const auto& thresholds = mode == DeletionMode::candidates ? kCandidateVennThresholds : kVoterVennThresholds;
    for (int t : thresholds) {
      VennTable table;
      table.mode = mode;
      table.threshold = t;
      for (const DomainRow& row : report.rows) {
        const auto& d = mode == DeletionMode::candidates ? row.candidate_distance : row.voter_distance;
        int region = 0;
        for (std::size_t x = 0; x < 3; ++x) {
          if (d[x] && *d[x] <= t) region |= 1 << x;
        }
        ++table.regions[static_cast<std::size_t>(region)];
      }
      report.venn.push_back(table);
    }
  }

  constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    report.candidate_distance_pcc[p] = distance_pcc(report.rows, DeletionMode::candidates, pairs[p].first, pairs[p].second);
    report.voter_distance_pcc[p] = distance_pcc(report.rows, DeletionMode::voters, pairs[p].first, pairs[p].second);
  }
  return report;
}

AxisStatistics axis_statistics(const Election& e, const Axis& axis) {
  e.require_complete();
  if (static_cast<int>(axis.order.size()) != e.m()) throw ShapeMismatch("axis length differs from the number of candidates");
  std::vector<int> where(static_cast<std::size_t>(e.m()), 0);
  for (std::size_t p = 0; p < axis.order.size(); ++p) where[static_cast<std::size_t>(axis.order[p])] = static_cast<int>(p);

  AxisStatistics stats;
  stats.top_choice_rank_histogram.assign(static_cast<std::size_t>(e.m()), 0);
  std::vector<char> top(static_cast<std::size_t>(e.m()), 0);
  for (const Vote& v : e.votes()) {
    ++stats.top_choice_rank_histogram[static_cast<std::size_t>(where[static_cast<std::size_t>(v[0])])];
    top[static_cast<std::size_t>(v[0])] = 1;
  }
  stats.distinct_top_choices = static_cast<int>(std::count(top.begin(), top.end(), 1));
  return stats;
}

double changing_pairs_fraction(const Election& e, const VoterOrder& order) {
  e.require_complete();
  const long long pairs = candidate_pairs(e.m());
  if (pairs == 0 || order.voters.empty()) return 0.0;
  long long changing = 0;
  for (Candidate a = 0; a < e.m(); ++a) {
    for (Candidate b = a + 1; b < e.m(); ++b) {
      const bool first = e.prefers(order.voters.front(), a, b);
      for (int i : order.voters) {
        if (e.prefers(i, a, b) != first) {
          ++changing;
          break;
        }
      }
    }
  }
  return static_cast<double>(changing) / static_cast<double>(pairs);
}

}  // namespace electra
