#include <cmath>
#include <set>

#include "doctest.h"
#include "electra/assignment.hpp"
#include "electra/mapel.hpp"
#include "electra/rng.hpp"
#include "oracles.hpp"

using namespace electra;

namespace {

std::vector<std::vector<double>> rows(const FrequencyMatrix& f) {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(f.m()), std::vector<double>(static_cast<std::size_t>(f.m())));
  for (int p = 0; p < f.m(); ++p) {
    for (int c = 0; c < f.m(); ++c) out[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] = f.at(p, c);
  }
  return out;
}

FrequencyMatrix compass(CompassKind kind, int m) { return compass_matrix(CompassSpec::single(kind, m)); }

}  // namespace

TEST_CASE("compass matrices") {
  const FrequencyMatrix id = compass(CompassKind::identity, 3);
  for (int p = 0; p < 3; ++p) {
    for (int c = 0; c < 3; ++c) CHECK(id.at(p, c) == (p == c ? 1.0 : 0.0));
  }
  const FrequencyMatrix un = compass(CompassKind::uniformity, 2);
  for (double x : un.entries()) CHECK(x == 0.5);
  const FrequencyMatrix an = compass(CompassKind::antagonism, 4);
  CHECK(an.at(0, 0) == 0.5);
  CHECK(an.at(3, 0) == 0.5);
  CHECK(an.at(1, 0) == 0.0);
  const FrequencyMatrix st = compass(CompassKind::stratification, 4);
  CHECK(st.at(0, 0) == 0.5);
  CHECK(st.at(1, 1) == 0.5);
  CHECK(st.at(2, 0) == 0.0);
  CHECK(st.at(3, 3) == 0.5);
  CHECK_THROWS_AS(compass(CompassKind::stratification, 5), InvalidElection);

  const FrequencyMatrix path = compass_matrix(CompassSpec::path(CompassKind::identity, CompassKind::identity, 0.37, 5));
  for (int p = 0; p < 5; ++p) {
    for (int c = 0; c < 5; ++c) CHECK(path.at(p, c) == doctest::Approx(p == c ? 1.0 : 0.0));
  }
  for (CompassKind a : {CompassKind::identity, CompassKind::uniformity, CompassKind::antagonism, CompassKind::stratification}) {
    for (CompassKind b : {CompassKind::identity, CompassKind::uniformity, CompassKind::antagonism, CompassKind::stratification}) {
      CHECK(compass_matrix(CompassSpec::path(a, b, 0.25, 6)).is_doubly_stochastic());
    }
  }
}

TEST_CASE("emd of point masses") {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      std::vector<double> a(5, 0.0), b(5, 0.0);
      a[static_cast<std::size_t>(i)] = 1.0;
      b[static_cast<std::size_t>(j)] = 1.0;
      CHECK(emd(a, b) == doctest::Approx(std::abs(i - j)));
      CHECK(emd(a, a) == 0.0);
    }
  }
}

TEST_CASE("identity to uniformity equals the closed form") {
  for (int m = 2; m <= 20; ++m) {
    const double d = positionwise_distance(compass(CompassKind::identity, m), compass(CompassKind::uniformity, m));
    CHECK(std::abs(d - (m * m - 1) / 3.0) <= 1e-9);
  }
}

TEST_CASE("positionwise distance matches the bijection oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(6));
    const FrequencyMatrix f = frequency_matrix(oracle::random_election(m, 1 + static_cast<int>(rng.below(7)), rng));
    const FrequencyMatrix g = frequency_matrix(oracle::random_election(m, 1 + static_cast<int>(rng.below(7)), rng));
    CHECK(positionwise_distance(f, g) == doctest::Approx(oracle::positionwise(rows(f), rows(g))).epsilon(1e-12));
  }
}

TEST_CASE("positionwise distance is a pseudometric invariant under relabeling") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Election a = oracle::random_election(7, 9, rng);
    const Election b = oracle::random_election(7, 5, rng);
    const Election c = oracle::random_election(7, 6, rng);
    const FrequencyMatrix fa = frequency_matrix(a), fb = frequency_matrix(b), fc = frequency_matrix(c);
    CHECK(positionwise_distance(fa, fa) == doctest::Approx(0.0));
    CHECK(std::abs(positionwise_distance(fa, fb) - positionwise_distance(fb, fa)) <= 1e-9);
    CHECK(positionwise_distance(fa, fc) <= positionwise_distance(fa, fb) + positionwise_distance(fb, fc) + 1e-9);

    Vote relabel(7);
    std::iota(relabel.begin(), relabel.end(), 0);
    rng.shuffle(std::span<Candidate>(relabel));
    std::vector<Vote> votes;
    for (int i = a.n() - 1; i >= 0; --i) {
      Vote v;
      for (Candidate x : a.vote(i)) v.push_back(relabel[static_cast<std::size_t>(x)]);
      votes.push_back(v);
    }
    const FrequencyMatrix permuted = frequency_matrix(Election::unlabeled(7, votes));
    CHECK(positionwise_distance(permuted, fa) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::abs(positionwise_distance(permuted, fb) - positionwise_distance(fa, fb)) <= 1e-9);
  }
  CHECK_THROWS_AS(positionwise_distance(compass(CompassKind::identity, 3), compass(CompassKind::identity, 4)), ShapeMismatch);
}

TEST_CASE("assignment solver matches enumeration") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int size = 1 + static_cast<int>(rng.below(6));
    std::vector<double> costs(static_cast<std::size_t>(size * size));
    for (double& c : costs) c = std::floor(rng.unit() * 10.0);
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    double best = INFINITY;
    do {
      double total = 0;
      for (int r = 0; r < size; ++r) total += costs[static_cast<std::size_t>(r * size + perm[static_cast<std::size_t>(r)])];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Assignment a = solve_assignment(costs, size);
    CHECK(a.cost == doctest::Approx(best));
    std::set<int> used(a.column_of_row.begin(), a.column_of_row.end());
    CHECK(used.size() == static_cast<std::size_t>(size));
  }
}

TEST_CASE("distance matrices") {
  const FrequencyMatrix id = compass(CompassKind::identity, 4);
  const DistanceMatrix one = distance_matrix({{"a", "x", id}}, false);
  CHECK(one.size == 1);
  CHECK(one(0, 0) == 0.0);

  const DistanceMatrix twins = distance_matrix({{"a", "x", id}, {"b", "x", id}}, false);
  CHECK(twins(0, 1) == 0.0);

  const DistanceMatrix three = distance_matrix({{"id", "c", id},
                                                {"un", "c", compass(CompassKind::uniformity, 4)},
                                                {"an", "c", compass(CompassKind::antagonism, 4)}},
                                               false, 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(three(i, i) == 0.0);
    for (int j = 0; j < 3; ++j) {
      CHECK(three(i, j) == three(j, i));
      CHECK(three(i, j) <= 5.0 + 1e-9);
    }
  }

  const DistanceMatrix with = distance_matrix({{"a", "x", id}}, true);
  CHECK(with.size == 1 + static_cast<int>(compass_points(4).size()));
  CHECK(with.tags.back() == std::string(kCompassTag));
  CHECK_THROWS_AS(distance_matrix({{"a", "x", id}, {"b", "x", compass(CompassKind::identity, 5)}}, false), ShapeMismatch);

  const auto groups = distance_matrix({{"a", "x", id}, {"b", "y", compass(CompassKind::uniformity, 4)}}, false).group_averages();
  CHECK(groups.at({"x", "y"}) == doctest::Approx(5.0));
}

TEST_CASE("embedding") {
  DistanceMatrix two;
  two.labels = {"a", "b"};
  two.tags = {"", ""};
  two.size = 2;
  two.d = {0, 5, 5, 0};
  const EmbeddedMap m2 = embed_map(two);
  const double gap = std::hypot(m2.points[0].first - m2.points[1].first, m2.points[0].second - m2.points[1].second);
  CHECK(std::abs(gap - 5.0) <= 1e-3);

  DistanceMatrix tri;
  tri.labels = {"a", "b", "c"};
  tri.tags = {"", "", ""};
  tri.size = 3;
  tri.d = {0, 3, 4, 3, 0, 5, 4, 5, 0};
  const EmbeddedMap m3 = embed_map(tri, {1000, 42});
  CHECK(m3.stress <= 0.01);
  CHECK(m3.stress == doctest::Approx(normalized_stress(tri, m3.points)));
  const EmbeddedMap again = embed_map(tri, {1000, 42});
  CHECK(again.points == m3.points);
}
