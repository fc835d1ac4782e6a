#include "electra/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "electra/rng.hpp"

namespace electra {

SimilaritySummary similarity_summary(const Election& e) {
  e.require_complete();
  if (e.n() < 2) throw InvalidElection("similarity_summary: need at least two votes");
  SimilaritySummary s;
  long long sum = 0;
  for (int i = 0; i < e.n(); ++i) {
    for (int j = i + 1; j < e.n(); ++j) {
      const long long d = kendall_tau(e.vote(i), e.vote(j));
      sum += d;
      s.max_kt = std::max(s.max_kt, d);
    }
  }
  s.avg_kt = static_cast<double>(sum) / static_cast<double>(candidate_pairs(e.n()));
  const PairwiseCounts w = pairwise_counts(e);
  for (Candidate a = 0; a < e.m(); ++a) {
    for (Candidate b = a + 1; b < e.m(); ++b) {
      if (w(a, b) != 0 && w(b, a) != 0) ++s.disagreeing_pairs;
    }
  }
  s.kemeny_score = kemeny(e).score;
  return s;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ShapeMismatch("pearson: sequences differ in length");
  if (xs.size() < 2) throw UndefinedCorrelation("pearson: need at least two points");
  // Welford-style single pass over co-moments.
  double mean_x = 0.0;
  double mean_y = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  double cov = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double count = static_cast<double>(k + 1);
    const double dx = xs[k] - mean_x;
    const double dy = ys[k] - mean_y;
    mean_x += dx / count;
    mean_y += dy / count;
    var_x += dx * (xs[k] - mean_x);
    var_y += dy * (ys[k] - mean_y);
    cov += dx * (ys[k] - mean_y);
  }
  if (var_x <= 0.0 || var_y <= 0.0) throw UndefinedCorrelation("pearson: zero variance");
  return std::clamp(cov / std::sqrt(var_x * var_y), -1.0, 1.0);
}

double spearman_rank(const Vote& r1, const Vote& r2) {
  if (r1.size() != r2.size()) throw ShapeMismatch("spearman_rank: rankings differ in length");
  const auto m = static_cast<long long>(r1.size());
  if (m < 2) {
    if (r1 != r2) throw ShapeMismatch("spearman_rank: rankings rank different candidate sets");
    return 1.0;
  }
  const Candidate top = std::max(*std::max_element(r1.begin(), r1.end()), *std::max_element(r2.begin(), r2.end()));
  std::vector<long long> pos(static_cast<std::size_t>(top) + 1, -1);
  for (std::size_t p = 0; p < r1.size(); ++p) {
    if (r1[p] < 0 || pos[static_cast<std::size_t>(r1[p])] != -1) throw ShapeMismatch("spearman_rank: invalid ranking");
    pos[static_cast<std::size_t>(r1[p])] = static_cast<long long>(p);
  }
  long long squares = 0;
  std::vector<char> seen(pos.size(), 0);
  for (std::size_t p = 0; p < r2.size(); ++p) {
    const Candidate c = r2[p];
    if (c < 0 || pos[static_cast<std::size_t>(c)] == -1 || seen[static_cast<std::size_t>(c)]) {
      throw ShapeMismatch("spearman_rank: rankings rank different candidate sets");
    }
    seen[static_cast<std::size_t>(c)] = 1;
    const long long d = pos[static_cast<std::size_t>(c)] - static_cast<long long>(p);
    squares += d * d;
  }
  return 1.0 - 6.0 * static_cast<double>(squares) / static_cast<double>(m * (m * m - 1));
}

PartReport part_intersections(const Election& e) {
  e.require_complete();
  if (e.n() < 2) throw InvalidElection("part_intersections: need at least two votes");
  const int m = e.m();
  PartReport report;
  report.canonical = m == 15;
  const int size = (8 * m + 14) / 15;
  const int middle_start = (m - size + 1) / 2;
  const std::array<std::pair<VotePart, int>, 3> windows{
      std::pair{VotePart::top, 0}, std::pair{VotePart::middle, middle_start}, std::pair{VotePart::bottom, m - size}};

  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto [part, start] = windows[w];
    PartIntersection& out = report.parts[w];
    out.part = part;
    out.first_position = start + 1;
    out.last_position = start + size;
    auto inside = [&](int voter, Candidate c) {
      const int p = e.position(voter, c);
      return p >= start && p < start + size;
    };

    long long pair_sum = 0;
    for (int i = 0; i < e.n(); ++i) {
      for (int j = i + 1; j < e.n(); ++j) {
        for (int p = start; p < start + size; ++p) {
          if (inside(j, e.vote(i)[static_cast<std::size_t>(p)])) ++pair_sum;
        }
      }
    }
    out.pairwise = static_cast<double>(pair_sum) / static_cast<double>(candidate_pairs(e.n()));

    for (Candidate c = 0; c < m; ++c) {
      bool everywhere = true;
      for (int i = 0; i < e.n() && everywhere; ++i) everywhere = inside(i, c);
      if (everywhere) out.common.push_back(c);
    }
    out.total = static_cast<int>(out.common.size());

    // Pairwise KT on `common`: count discordant pairs directly.
    long long kt_sum = 0;
    for (int i = 0; i < e.n(); ++i) {
      for (int j = i + 1; j < e.n(); ++j) {
        for (std::size_t a = 0; a < out.common.size(); ++a) {
          for (std::size_t b = a + 1; b < out.common.size(); ++b) {
            if (e.prefers(i, out.common[a], out.common[b]) != e.prefers(j, out.common[a], out.common[b])) ++kt_sum;
          }
        }
      }
    }
    out.restricted_avg_kt = static_cast<double>(kt_sum) / static_cast<double>(candidate_pairs(e.n()));
  }
  return report;
}

TemporalProfile temporal_profile(const Election& e, bool shuffled, std::uint64_t seed) {
  e.require_complete();
  if (e.n() < 2) throw InvalidElection("temporal_profile: need at least two votes");
  std::vector<const Vote*> order;
  for (const Vote& v : e.votes()) order.push_back(&v);
  if (shuffled) {
    Rng rng(seed);
    rng.shuffle(std::span<const Vote*>(order));
  }
  const int m = e.m();
  const int n = e.n();

  TemporalProfile t;
  std::vector<int> pos_prev(static_cast<std::size_t>(m));
  std::vector<int> pos_next(static_cast<std::size_t>(m));
  std::vector<long long> changes(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  t.fluctuation_per_position.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i + 1 < n; ++i) {
    const Vote& prev = *order[static_cast<std::size_t>(i)];
    const Vote& next = *order[static_cast<std::size_t>(i) + 1];
    for (int p = 0; p < m; ++p) {
      pos_prev[static_cast<std::size_t>(prev[static_cast<std::size_t>(p)])] = p;
      pos_next[static_cast<std::size_t>(next[static_cast<std::size_t>(p)])] = p;
      if (prev[static_cast<std::size_t>(p)] != next[static_cast<std::size_t>(p)]) ++t.fluctuation_per_position[static_cast<std::size_t>(p)];
    }
    for (Candidate a = 0; a < m; ++a) {
      for (Candidate b = a + 1; b < m; ++b) {
        const bool before = pos_prev[static_cast<std::size_t>(a)] < pos_prev[static_cast<std::size_t>(b)];
        const bool after = pos_next[static_cast<std::size_t>(a)] < pos_next[static_cast<std::size_t>(b)];
        if (before != after) ++changes[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)];
      }
    }
  }
  long long total = 0;
  for (Candidate a = 0; a < m; ++a) {
    for (Candidate b = a + 1; b < m; ++b) {
      const long long c = changes[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)];
      total += c;
      t.max_ordering_change = std::max(t.max_ordering_change, c);
    }
  }
  t.avg_ordering_change = m < 2 ? 0.0 : static_cast<double>(total) / static_cast<double>(candidate_pairs(m));
  t.avg_fluctuation =
      static_cast<double>(std::accumulate(t.fluctuation_per_position.begin(), t.fluctuation_per_position.end(), 0LL)) / m;

  std::vector<double> kt;
  std::vector<double> gap;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      kt.push_back(static_cast<double>(kendall_tau(*order[static_cast<std::size_t>(i)], *order[static_cast<std::size_t>(j)])));
      gap.push_back(static_cast<double>(j - i));  // votes strictly between, plus one
    }
  }
  try {
    t.kt_temporal_pcc = pearson(kt, gap);
  } catch (const UndefinedCorrelation&) {
    t.kt_temporal_pcc.reset();
  }
  return t;
}

Magnitude magnitude(double base, double exponent) {
  Magnitude out;
  out.log10 = exponent * std::log10(base);
  char buffer[64];
  if (out.log10 < 15.0) {
    const double value = std::pow(base, exponent);
    const double rounded = std::round(value);
    if (std::abs(value - rounded) <= 1e-9 * std::max(1.0, value)) {
      std::snprintf(buffer, sizeof buffer, "%.0f", rounded);
    } else {
      std::snprintf(buffer, sizeof buffer, "%.6g", value);
    }
  } else {
    double exp10 = std::floor(out.log10);
    double mantissa = std::pow(10.0, out.log10 - exp10);
    if (mantissa >= 9.995) {
      mantissa /= 10.0;
      exp10 += 1.0;
    }
    std::snprintf(buffer, sizeof buffer, "%.3ge%.0f", mantissa, exp10);
  }
  out.decimal = buffer;
  return out;
}

ParameterBudget parameter_budget(int m, long long kemeny_score, double avg_kt) {
  return {magnitude(2.0, m), magnitude(1.53, static_cast<double>(kemeny_score)), magnitude(16.0, avg_kt)};
}

ParameterBudget parameter_budget(const Election& e) {
  const SimilaritySummary s = similarity_summary(e);
  return parameter_budget(e.m(), s.kemeny_score, s.avg_kt);
}

}  // namespace electra
