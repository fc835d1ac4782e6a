#include <algorithm>
#include <functional>
#include <numeric>

#include "electra/metrics.hpp"
#include "electra/rules.hpp"

namespace electra {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::plurality: return "plurality";
    case Rule::plurality_runoff: return "plurality_runoff";
    case Rule::borda: return "borda";
    case Rule::copeland: return "copeland";
    case Rule::hare: return "hare";
    case Rule::kemeny: return "kemeny";
  }
  return "unknown";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : kAllRules) {
    if (to_string(r) == name) return r;
  }
  if (name == "runoff") return Rule::plurality_runoff;
  return std::nullopt;
}

namespace {

// Candidates of `pool` grouped by descending score, ties sorted by index.
Ranking score_order(const std::vector<long long>& score, std::vector<Candidate> pool) {
  std::sort(pool.begin(), pool.end(), [&](Candidate a, Candidate b) {
    const auto sa = score[static_cast<std::size_t>(a)];
    const auto sb = score[static_cast<std::size_t>(b)];
    return sa != sb ? sa > sb : a < b;
  });
  Ranking ranking;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (k == 0 || score[static_cast<std::size_t>(pool[k])] != score[static_cast<std::size_t>(pool[k - 1])]) {
      ranking.emplace_back();
    }
    ranking.back().push_back(pool[k]);
  }
  return ranking;
}

std::vector<Candidate> all_candidates(int m) {
  std::vector<Candidate> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Plurality scores restricted to `active`; inactive candidates get -1.
std::vector<long long> plurality_among(const Election& e, const std::vector<char>& active) {
  std::vector<long long> score(static_cast<std::size_t>(e.m()), -1);
  for (Candidate c = 0; c < e.m(); ++c) {
    if (active[static_cast<std::size_t>(c)]) score[static_cast<std::size_t>(c)] = 0;
  }
  for (const Vote& v : e.votes()) {
    for (Candidate c : v) {
      if (active[static_cast<std::size_t>(c)]) {
        ++score[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  return score;
}

void finish_score_rule(RuleOutcome& out, const std::vector<long long>& score, int m) {
  out.round_scores.push_back(score);
  out.ranking = score_order(score, all_candidates(m));
  out.winners = out.ranking.front();
}

void runoff(const Election& e, RuleOutcome& out) {
  const int m = e.m();
  const std::vector<long long> first = plurality_among(e, std::vector<char>(static_cast<std::size_t>(m), 1));
  std::vector<long long> sorted = first;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const long long top = sorted[0];
  const auto top_count = std::count(first.begin(), first.end(), top);
  // With more than two tied at the top only those advance; otherwise the
  // highest and every candidate with the second-highest score advance.
  const long long cutoff = top_count > 2 ? top : sorted[std::min<std::size_t>(1, sorted.size() - 1)];
  std::vector<char> advance(static_cast<std::size_t>(m), 0);
  std::vector<Candidate> finalists;
  std::vector<Candidate> eliminated;
  for (Candidate c = 0; c < m; ++c) {
    if (first[static_cast<std::size_t>(c)] >= cutoff) {
      advance[static_cast<std::size_t>(c)] = 1;
      finalists.push_back(c);
    } else {
      eliminated.push_back(c);
    }
  }
  const std::vector<long long> second = plurality_among(e, advance);
  out.round_scores = {first, second};
  out.ranking = score_order(second, finalists);
  out.winners = out.ranking.front();
  for (auto& group : score_order(first, eliminated)) out.ranking.push_back(std::move(group));
}

void hare(const Election& e, RuleOutcome& out) {
  const int m = e.m();
  std::vector<char> active(static_cast<std::size_t>(m), 1);
  int remaining = m;
  for (;;) {
    const std::vector<long long> score = plurality_among(e, active);
    out.round_scores.push_back(score);
    long long low = -1;
    long long high = -1;
    for (Candidate c = 0; c < m; ++c) {
      const long long s = score[static_cast<std::size_t>(c)];
      if (!active[static_cast<std::size_t>(c)]) continue;
      if (low < 0 || s < low) low = s;
      high = std::max(high, s);
    }
    if (remaining == 1 || low == high) break;
    Candidate victim = -1;
    for (Candidate c : e.vote(0)) {  // the last lowest scorer in the first vote
      if (active[static_cast<std::size_t>(c)] && score[static_cast<std::size_t>(c)] == low) victim = c;
    }
    active[static_cast<std::size_t>(victim)] = 0;
    out.elimination_order.push_back(victim);
    --remaining;
  }
  for (Candidate c = 0; c < m; ++c) {
    if (active[static_cast<std::size_t>(c)]) out.winners.push_back(c);
  }
  out.ranking.push_back(out.winners);
  for (auto it = out.elimination_order.rbegin(); it != out.elimination_order.rend(); ++it) out.ranking.push_back({*it});
}

}  // namespace

RuleOutcome apply_rule(const Election& e, Rule rule) {
  e.require_complete();
  const int m = e.m();
  RuleOutcome out;
  out.rule = rule;
  switch (rule) {
    case Rule::plurality:
      finish_score_rule(out, plurality_among(e, std::vector<char>(static_cast<std::size_t>(m), 1)), m);
      break;
    case Rule::borda: {
      std::vector<long long> score(static_cast<std::size_t>(m), 0);
      for (const Vote& v : e.votes()) {
        for (int p = 0; p < m; ++p) score[static_cast<std::size_t>(v[static_cast<std::size_t>(p)])] += m - 1 - p;
      }
      finish_score_rule(out, score, m);
      break;
    }
    case Rule::copeland: {
      const PairwiseCounts w = pairwise_counts(e);
      std::vector<long long> score(static_cast<std::size_t>(m), 0);
      for (Candidate a = 0; a < m; ++a) {
        for (Candidate b = 0; b < m; ++b) {
          if (a == b) continue;
          if (w(a, b) > w(b, a)) ++score[static_cast<std::size_t>(a)];
          if (w(a, b) < w(b, a)) --score[static_cast<std::size_t>(a)];
        }
      }
      finish_score_rule(out, score, m);
      break;
    }
    case Rule::plurality_runoff:
      runoff(e, out);
      break;
    case Rule::hare:
      hare(e, out);
      break;
    case Rule::kemeny: {
      const KemenyResult k = kemeny(e);
      for (Candidate c : k.ranking) out.ranking.push_back({c});
      out.winners = {k.ranking.front()};
      break;
    }
  }
  out.lex_winner = out.winners.front();
  return out;
}

CondorcetWinners condorcet_winners(const Election& e) {
  e.require_complete();
  const PairwiseCounts w = pairwise_counts(e);
  CondorcetWinners result;
  for (Candidate a = 0; a < e.m(); ++a) {
    bool beats_all = true;
    bool never_beaten = true;
    for (Candidate b = 0; b < e.m(); ++b) {
      if (a == b) continue;
      beats_all = beats_all && 2 * w(a, b) > e.n();
      never_beaten = never_beaten && 2 * w(b, a) <= e.n();
    }
    if (beats_all) result.strong = a;
    if (never_beaten) result.weak.push_back(a);
  }
  return result;
}

CondorcetEfficiency condorcet_efficiency(const std::vector<Election>& elections, Rule rule, CondorcetNotion notion) {
  long long admitting = 0;
  long long selected = 0;
  for (const Election& e : elections) {
    const CondorcetWinners cw = condorcet_winners(e);
    std::vector<Candidate> targets;
    if (notion == CondorcetNotion::strong) {
      if (cw.strong) targets.push_back(*cw.strong);
    } else {
      targets = cw.weak;
    }
    if (targets.empty()) continue;
    ++admitting;
    const RuleOutcome out = apply_rule(e, rule);
    const bool hit = std::any_of(targets.begin(), targets.end(), [&](Candidate c) {
      return std::binary_search(out.winners.begin(), out.winners.end(), c);
    });
    if (hit) ++selected;
  }
  if (admitting == 0) throw Error("no election admits a Condorcet winner of the requested notion");
  return {static_cast<double>(selected) / static_cast<double>(admitting),
          static_cast<double>(admitting) / static_cast<double>(elections.size())};
}

}  // namespace electra
