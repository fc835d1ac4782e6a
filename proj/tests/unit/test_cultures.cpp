#include <cmath>
#include <numeric>

#include "doctest.h"
#include "electra/cultures.hpp"
#include "electra/domains.hpp"
#include "electra/metrics.hpp"

using namespace electra;

TEST_CASE("samplers are seed deterministic") {
  for (Culture c : {Culture::impartial, Culture::walsh_sp, Culture::conitzer_sp, Culture::identity, Culture::antagonism}) {
    CHECK(sample_culture(c, 8, 10, 42) == sample_culture(c, 8, 10, 42));
    CHECK(parse_culture(to_string(c)) == c);
  }
  CHECK(sample_culture(Culture::impartial, 8, 10, 1) != sample_culture(Culture::impartial, 8, 10, 2));
  CHECK_FALSE(parse_culture("mallows").has_value());
}

TEST_CASE("compass realizations") {
  const SimilaritySummary id = similarity_summary(sample_culture(Culture::identity, 6, 9, 3));
  CHECK(id.max_kt == 0);
  CHECK(id.avg_kt == 0.0);
  CHECK(id.disagreeing_pairs == 0);
  CHECK(id.kemeny_score == 0);
  const SimilaritySummary an = similarity_summary(sample_culture(Culture::antagonism, 15, 30, 3));
  CHECK(an.max_kt == 105);
  CHECK(an.disagreeing_pairs == 105);
  CHECK_THROWS_AS(sample_culture(Culture::antagonism, 4, 3, 0), InvalidElection);
  CHECK_THROWS_AS(sample_culture(Culture::impartial, 0, 3, 0), InvalidElection);
}

TEST_CASE("impartial culture frequency matrix approaches uniformity") {
  const FrequencyMatrix f = frequency_matrix(sample_culture(Culture::impartial, 6, 5000, 11));
  for (double x : f.entries()) CHECK(std::abs(x - 1.0 / 6.0) <= 0.03);
}

TEST_CASE("single-peaked samplers") {
  const int m = 7;
  const int n = 10000;
  const Election conitzer = sample_culture(Culture::conitzer_sp, m, n, 5);
  const Election walsh = sample_culture(Culture::walsh_sp, m, n, 5);
  Axis axis;
  axis.order.resize(m);
  std::iota(axis.order.begin(), axis.order.end(), 0);
  CHECK(is_compatible_axis(conitzer, axis));
  CHECK(is_compatible_axis(walsh, axis));

  // Chi-square test of uniform peaks, 6 degrees of freedom: p > 0.001 below 22.46.
  const AxisStatistics cs = axis_statistics(conitzer, axis);
  double chi2 = 0.0;
  for (int count : cs.top_choice_rank_histogram) {
    const double expected = static_cast<double>(n) / m;
    chi2 += (count - expected) * (count - expected) / expected;
  }
  CHECK(chi2 < 22.46);

  const AxisStatistics ws = axis_statistics(walsh, axis);
  const auto& h = ws.top_choice_rank_histogram;
  CHECK(h[3] >= h[0]);
  CHECK(h[3] >= h[6]);
  CHECK(h[2] >= h[0]);
  CHECK(h[4] >= h[6]);
}
