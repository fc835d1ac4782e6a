#include <numeric>

#include "doctest.h"
#include "electra/cultures.hpp"
#include "electra/domains.hpp"
#include "electra/rng.hpp"
#include "electra/rules.hpp"
#include "oracles.hpp"

using namespace electra;

namespace {

const Election kAbcAbcBca = Election::unlabeled(3, {{0, 1, 2}, {0, 1, 2}, {1, 2, 0}});
const Election kCycle = Election::unlabeled(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});

Election identity(int m, int n) {
  Vote v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return Election::unlabeled(m, std::vector<Vote>(static_cast<std::size_t>(n), v));
}

}  // namespace

TEST_CASE("plurality and borda examples") {
  const RuleOutcome p = apply_rule(kAbcAbcBca, Rule::plurality);
  CHECK(p.round_scores.front() == std::vector<long long>{2, 1, 0});
  CHECK(p.winners == std::vector<Candidate>{0});
  CHECK(p.ranking == Ranking{{0}, {1}, {2}});

  const RuleOutcome b = apply_rule(kAbcAbcBca, Rule::borda);
  CHECK(b.round_scores.front() == std::vector<long long>{4, 4, 1});
  CHECK(b.winners == std::vector<Candidate>{0, 1});
  CHECK(b.lex_winner == 0);
  CHECK(b.ranking == Ranking{{0, 1}, {2}});
}

TEST_CASE("identity elections elect the common top choice") {
  const Election id = identity(4, 5);
  for (Rule r : kAllRules) {
    const RuleOutcome out = apply_rule(id, r);
    CHECK(out.winners == std::vector<Candidate>{0});
    CHECK(out.ranking.front() == std::vector<Candidate>{0});
  }
  CHECK(apply_rule(id, Rule::borda).ranking == Ranking{{0}, {1}, {2}, {3}});
  CHECK(apply_rule(id, Rule::copeland).ranking == Ranking{{0}, {1}, {2}, {3}});
  CHECK(apply_rule(id, Rule::hare).ranking == Ranking{{0}, {1}, {2}, {3}});
  CHECK(apply_rule(id, Rule::kemeny).ranking == Ranking{{0}, {1}, {2}, {3}});
  CHECK(apply_rule(id, Rule::plurality).ranking == Ranking{{0}, {1, 2, 3}});
  CHECK(apply_rule(id, Rule::plurality_runoff).ranking == Ranking{{0}, {1, 2, 3}});
}

TEST_CASE("copeland scores") {
  const RuleOutcome c = apply_rule(kCycle, Rule::copeland);
  CHECK(c.round_scores.front() == std::vector<long long>{0, 0, 0});
  CHECK(c.winners == std::vector<Candidate>{0, 1, 2});
  const RuleOutcome d = apply_rule(kAbcAbcBca, Rule::copeland);
  CHECK(d.round_scores.front() == std::vector<long long>{2, 0, -2});
}

TEST_CASE("runoff keeps every top-tied candidate when more than two tie") {
  const Election e = Election::unlabeled(4, {{0, 3, 1, 2}, {1, 3, 0, 2}, {2, 1, 0, 3}, {3, 1, 0, 2}, {1, 0, 2, 3}});
  // First round: a=1, b=2, c=1, d=1 -> b plus the three tied at 1 advance.
  const RuleOutcome r = apply_rule(e, Rule::plurality_runoff);
  CHECK(r.round_scores[0] == std::vector<long long>{1, 2, 1, 1});
  CHECK(r.round_scores[1] == std::vector<long long>{1, 2, 1, 1});
  CHECK(r.winners == std::vector<Candidate>{1});

  const Election tied = Election::unlabeled(4, {{0, 3, 1, 2}, {1, 0, 2, 3}, {2, 1, 0, 3}, {3, 1, 0, 2}, {0, 1, 2, 3},
                                                {1, 2, 0, 3}, {2, 0, 1, 3}});
  // First round a=2, b=2, c=2, d=1: three tied at the top advance, d is out.
  const RuleOutcome t = apply_rule(tied, Rule::plurality_runoff);
  CHECK(t.round_scores[0] == std::vector<long long>{2, 2, 2, 1});
  CHECK(t.round_scores[1][3] == -1);
  CHECK(t.ranking.back() == std::vector<Candidate>{3});

  const Election plain = Election::unlabeled(3, {{0, 1, 2}, {0, 1, 2}, {1, 2, 0}, {2, 1, 0}, {2, 1, 0}});
  // a=2, b=1, c=2: a and c advance; b's voter moves to c.
  const RuleOutcome q = apply_rule(plain, Rule::plurality_runoff);
  CHECK(q.round_scores[1] == std::vector<long long>{2, -1, 3});
  CHECK(q.winners == std::vector<Candidate>{2});
  CHECK(q.ranking == Ranking{{2}, {0}, {1}});
}

TEST_CASE("hare elimination and its tie-break") {
  const RuleOutcome h = apply_rule(kAbcAbcBca, Rule::hare);
  CHECK(h.elimination_order == std::vector<Candidate>{2, 1});
  CHECK(h.winners == std::vector<Candidate>{0});
  CHECK(h.ranking == Ranking{{0}, {1}, {2}});

  // b and c tie for last; the first voter ranks c lower, so c goes.
  const Election e = Election::unlabeled(3, {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 0, 1}});
  const RuleOutcome t = apply_rule(e, Rule::hare);
  CHECK(t.elimination_order.front() == 2);
  CHECK(t.winners == std::vector<Candidate>{0});

  const RuleOutcome all = apply_rule(kCycle, Rule::hare);
  CHECK(all.winners == std::vector<Candidate>{0, 1, 2});
  CHECK(all.elimination_order.empty());
}

TEST_CASE("kemeny rule") {
  const RuleOutcome k = apply_rule(Election::unlabeled(3, {{0, 1, 2}, {2, 1, 0}}), Rule::kemeny);
  CHECK(k.winners == std::vector<Candidate>{0});
  CHECK(k.ranking == Ranking{{0}, {1}, {2}});
}

TEST_CASE("condorcet winners") {
  const CondorcetWinners id = condorcet_winners(identity(4, 3));
  CHECK(id.strong == 0);
  CHECK(id.weak == std::vector<Candidate>{0});
  const CondorcetWinners cyc = condorcet_winners(kCycle);
  CHECK_FALSE(cyc.strong.has_value());
  CHECK(cyc.weak.empty());
  const CondorcetWinners tie = condorcet_winners(Election::unlabeled(2, {{0, 1}, {1, 0}}));
  CHECK_FALSE(tie.strong.has_value());
  CHECK(tie.weak == std::vector<Candidate>{0, 1});
}

TEST_CASE("condorcet efficiency") {
  Rng rng(3);
  std::vector<Election> set;
  for (int k = 0; k < 40; ++k) set.push_back(oracle::random_election(5, 7, rng));
  CHECK(condorcet_efficiency(set, Rule::copeland, CondorcetNotion::strong).efficiency == 1.0);
  const std::vector<Election> ids(3, identity(4, 3));
  for (Rule r : kAllRules) {
    const CondorcetEfficiency eff = condorcet_efficiency(ids, r, CondorcetNotion::strong);
    CHECK(eff.efficiency == 1.0);
    CHECK(eff.admitting_fraction == 1.0);
  }
  CHECK_THROWS_AS(condorcet_efficiency({kCycle}, Rule::borda, CondorcetNotion::strong), Error);
}

TEST_CASE("winner consensus measures") {
  RuleOutcome a, b;
  a.winners = {0};
  a.lex_winner = 0;
  b.winners = {0, 1};
  b.lex_winner = 0;
  CHECK(winner_agreement(a, b, WinnerMeasure::lexicographic) == 1.0);
  CHECK(winner_agreement(a, b, WinnerMeasure::nonempty_overlap) == 1.0);
  CHECK(winner_agreement(a, b, WinnerMeasure::normalized_overlap) == 0.5);
  RuleOutcome c;
  c.winners = {2};
  c.lex_winner = 2;
  for (WinnerMeasure m : {WinnerMeasure::lexicographic, WinnerMeasure::nonempty_overlap, WinnerMeasure::normalized_overlap}) {
    CHECK(winner_agreement(a, c, m) == 0.0);
  }
  Rng rng(5);
  std::vector<Election> set;
  for (int k = 0; k < 20; ++k) set.push_back(oracle::random_election(4, 5, rng));
  for (Rule r : kAllRules) CHECK(winner_consensus(set, r, r, WinnerMeasure::normalized_overlap) == 1.0);
}

TEST_CASE("ranking consensus") {
  const auto hand = ranking_correlation(apply_rule(kAbcAbcBca, Rule::borda).ranking,
                                        apply_rule(kAbcAbcBca, Rule::plurality).ranking, 3);
  REQUIRE(hand.has_value());
  CHECK(*hand == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(average_ranks(Ranking{{0, 1}, {2}}, 3) == std::vector<double>{1.5, 1.5, 3.0});
  CHECK(ranking_correlation(Ranking{{0, 1, 2}}, Ranking{{0, 1, 2}}, 3) == 1.0);
  CHECK_FALSE(ranking_correlation(Ranking{{0, 1, 2}}, Ranking{{0}, {1}, {2}}, 3).has_value());

  const std::vector<Election> borda_untied{Election::unlabeled(3, {{0, 1, 2}, {0, 1, 2}, {1, 0, 2}})};
  CHECK(ranking_consensus(borda_untied, Rule::borda, Rule::borda) == 1.0);
  const std::vector<Election> ids{identity(5, 4)};
  CHECK(ranking_consensus(ids, Rule::borda, Rule::kemeny) == 1.0);
  CHECK(ranking_consensus(ids, Rule::copeland, Rule::hare) == 1.0);
}

TEST_CASE("tie report") {
  const std::vector<Election> ids(3, identity(4, 3));
  const TieReport none = tie_report(ids, {kAllRules.begin(), kAllRules.end()});
  for (double f : none.overall) CHECK(f == 0.0);
  CHECK_FALSE(none.without_strong_condorcet.has_value());

  const TieReport anti = tie_report({Election::unlabeled(2, {{0, 1}, {1, 0}})}, {Rule::plurality});
  CHECK(anti.overall[0] == 1.0);
  REQUIRE(anti.without_strong_condorcet.has_value());
  CHECK((*anti.without_strong_condorcet)[0] == 1.0);

  CHECK(tie_report({Election::unlabeled(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}})}, {Rule::borda}).overall[0] == 0.0);
}

TEST_CASE("relabeling candidates permutes the winners") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Election e = oracle::random_election(5, 7, rng);
    Vote perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<Candidate>(perm));
    std::vector<Vote> votes;
    for (const Vote& v : e.votes()) {
      Vote w;
      for (Candidate c : v) w.push_back(perm[static_cast<std::size_t>(c)]);
      votes.push_back(w);
    }
    const Election relabeled = Election::unlabeled(5, votes);
    for (Rule r : {Rule::plurality, Rule::borda, Rule::copeland}) {
      std::vector<Candidate> mapped;
      for (Candidate c : apply_rule(e, r).winners) mapped.push_back(perm[static_cast<std::size_t>(c)]);
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == apply_rule(relabeled, r).winners);
    }
  }
}

TEST_CASE("voter order does not change score-rule winners") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Election e = oracle::random_election(5, 6, rng);
    std::vector<Vote> votes = e.votes();
    rng.shuffle(std::span<Vote>(votes));
    const Election shuffled = Election::unlabeled(5, votes);
    for (Rule r : {Rule::plurality, Rule::borda, Rule::copeland}) {
      CHECK(apply_rule(e, r).winners == apply_rule(shuffled, r).winners);
    }
    CHECK(apply_rule(e, Rule::kemeny).ranking.size() == 5);
  }
}

TEST_CASE("single-peaked elections with an odd number of voters have a strong Condorcet winner") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (Culture culture : {Culture::walsh_sp, Culture::conitzer_sp}) {
      const Election e = sample_culture(culture, 9, 11, seed);
      const CondorcetWinners cw = condorcet_winners(e);
      REQUIRE(cw.strong.has_value());
      CHECK(apply_rule(e, Rule::copeland).winners == std::vector<Candidate>{*cw.strong});
    }
  }
}
