#pragma once

// Brute-force reference implementations for small instances. They follow the
// textbook definitions directly and share no code with the library beyond
// the Election container and restrict().

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "electra/domains.hpp"
#include "electra/election.hpp"
#include "electra/rng.hpp"

namespace oracle {

using electra::Candidate;
using electra::Election;
using electra::Vote;

inline bool above(const Election& e, int i, Candidate a, Candidate b) {
  const Vote& v = e.vote(i);
  return std::find(v.begin(), v.end(), a) < std::find(v.begin(), v.end(), b);
}

// Discordant pairs by checking every pair.
inline long long kendall_tau(const Vote& u, const Vote& v) {
  long long d = 0;
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (std::size_t y = x + 1; y < u.size(); ++y) {
      const auto pu = std::find(v.begin(), v.end(), u[x]);
      const auto pv = std::find(v.begin(), v.end(), u[y]);
      if (pu > pv) ++d;
    }
  }
  return d;
}

struct KemenyOptimum {
  long long score = 0;
  Vote ranking;  // lexicographically first optimum
};

inline long long kemeny_score_of(const Election& e, const Vote& r) {
  long long s = 0;
  for (const Vote& v : e.votes()) s += kendall_tau(r, v);
  return s;
}

inline KemenyOptimum kemeny(const Election& e) {
  Vote r(static_cast<std::size_t>(e.m()));
  std::iota(r.begin(), r.end(), 0);
  KemenyOptimum best{-1, {}};
  do {
    const long long s = kemeny_score_of(e, r);
    if (best.score < 0 || s < best.score) best = {s, r};
  } while (std::next_permutation(r.begin(), r.end()));
  return best;
}

// Every vote decreases away from its peak along the axis.
inline bool single_peaked_on(const Election& e, const std::vector<Candidate>& axis) {
  std::vector<int> pos(axis.size());
  for (std::size_t p = 0; p < axis.size(); ++p) pos[static_cast<std::size_t>(axis[p])] = static_cast<int>(p);
  for (int i = 0; i < e.n(); ++i) {
    const int peak = pos[static_cast<std::size_t>(e.vote(i)[0])];
    for (std::size_t p = 0; p + 1 < axis.size(); ++p) {
      const Candidate x = axis[p];
      const Candidate y = axis[p + 1];
      if (static_cast<int>(p) + 1 <= peak && !above(e, i, y, x)) return false;
      if (static_cast<int>(p) >= peak && !above(e, i, x, y)) return false;
    }
  }
  return true;
}

inline bool single_peaked(const Election& e) {
  std::vector<Candidate> axis(static_cast<std::size_t>(e.m()));
  std::iota(axis.begin(), axis.end(), 0);
  do {
    if (single_peaked_on(e, axis)) return true;
  } while (std::next_permutation(axis.begin(), axis.end()));
  return false;
}

// Each candidate pair changes order at most once along the voter order.
inline bool single_crossing_in(const Election& e, const std::vector<int>& order) {
  for (Candidate a = 0; a < e.m(); ++a) {
    for (Candidate b = a + 1; b < e.m(); ++b) {
      int changes = 0;
      for (std::size_t k = 1; k < order.size(); ++k) {
        if (above(e, order[k - 1], a, b) != above(e, order[k], a, b)) ++changes;
      }
      if (changes > 1) return false;
    }
  }
  return true;
}

inline bool single_crossing(const Election& e) {
  std::vector<int> order(static_cast<std::size_t>(e.n()));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (single_crossing_in(e, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Every subset of at least two candidates splits into two blocks that each
// voter ranks one entirely above the other.
inline bool group_separable(const Election& e) {
  const int m = e.m();
  for (std::uint32_t set = 1; set < (1U << m); ++set) {
    if (std::popcount(set) < 2) continue;
    bool found = false;
    for (std::uint32_t part = (set - 1) & set; part != 0 && !found; part = (part - 1) & set) {
      const std::uint32_t rest = set & ~part;
      bool ok = true;
      for (int i = 0; i < e.n() && ok; ++i) {
        bool part_above = true;
        bool rest_above = true;
        for (Candidate x = 0; x < m; ++x) {
          if (!(part >> x & 1U)) continue;
          for (Candidate y = 0; y < m; ++y) {
            if (!(rest >> y & 1U)) continue;
            if (above(e, i, x, y)) rest_above = false;
            else part_above = false;
          }
        }
        ok = part_above || rest_above;
      }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

// No three voters order some triple as a, b, c / b, c, a / c, a, b.
inline bool value_restricted(const Election& e) {
  const int m = e.m();
  for (Candidate a = 0; a < m; ++a) {
    for (Candidate b = 0; b < m; ++b) {
      for (Candidate c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        bool x = false, y = false, z = false;
        for (int i = 0; i < e.n(); ++i) {
          x = x || (above(e, i, a, b) && above(e, i, b, c));
          y = y || (above(e, i, b, c) && above(e, i, c, a));
          z = z || (above(e, i, c, a) && above(e, i, a, b));
        }
        if (x && y && z) return false;
      }
    }
  }
  return true;
}

inline bool member(const Election& e, electra::Domain d) {
  switch (d) {
    case electra::Domain::single_peaked: return single_peaked(e);
    case electra::Domain::single_crossing: return single_crossing(e);
    case electra::Domain::group_separable: return group_separable(e);
    case electra::Domain::value_restricted: return value_restricted(e);
  }
  return false;
}

// Pattern of each configuration kind, written out from its definition.
inline bool realizes(const Election& e, electra::ConfigurationKind kind, const std::vector<int>& v,
                     const std::vector<Candidate>& c) {
  using K = electra::ConfigurationKind;
  auto p = [&](int voter, Candidate x, Candidate y) { return x != y && above(e, v[static_cast<std::size_t>(voter)], x, y); };
  switch (kind) {
    case K::alpha:
      return p(0, c[0], c[1]) && p(0, c[1], c[2]) && p(0, c[3], c[1]) && p(1, c[2], c[1]) && p(1, c[1], c[0]) &&
             p(1, c[3], c[1]);
    case K::beta:
      return p(0, c[0], c[1]) && p(0, c[1], c[2]) && p(0, c[2], c[3]) && p(1, c[1], c[3]) && p(1, c[3], c[0]) &&
             p(1, c[0], c[2]);
    case K::gamma:
      return p(0, c[1], c[0]) && p(0, c[2], c[3]) && p(0, c[4], c[5]) && p(1, c[0], c[1]) && p(1, c[3], c[2]) &&
             p(1, c[4], c[5]) && p(2, c[0], c[1]) && p(2, c[2], c[3]) && p(2, c[5], c[4]);
    case K::delta:
      return p(0, c[0], c[1]) && p(0, c[2], c[3]) && p(1, c[0], c[1]) && p(1, c[3], c[2]) && p(2, c[1], c[0]) &&
             p(2, c[2], c[3]) && p(3, c[1], c[0]) && p(3, c[3], c[2]);
    case K::best:
      return p(0, c[0], c[1]) && p(0, c[0], c[2]) && p(1, c[1], c[0]) && p(1, c[1], c[2]) && p(2, c[2], c[0]) &&
             p(2, c[2], c[1]);
    case K::worst:
      return p(0, c[0], c[2]) && p(0, c[1], c[2]) && p(1, c[0], c[1]) && p(1, c[2], c[1]) && p(2, c[1], c[0]) &&
             p(2, c[2], c[0]);
    case K::medium:
      return ((p(0, c[1], c[0]) && p(0, c[0], c[2])) || (p(0, c[2], c[0]) && p(0, c[0], c[1]))) &&
             ((p(1, c[0], c[1]) && p(1, c[1], c[2])) || (p(1, c[2], c[1]) && p(1, c[1], c[0]))) &&
             ((p(2, c[0], c[2]) && p(2, c[2], c[1])) || (p(2, c[1], c[2]) && p(2, c[2], c[0])));
    case K::value:
      return p(0, c[0], c[1]) && p(0, c[1], c[2]) && p(1, c[1], c[2]) && p(1, c[2], c[0]) && p(2, c[2], c[0]) &&
             p(2, c[0], c[1]);
  }
  return false;
}

inline std::pair<int, int> arity(electra::ConfigurationKind kind) {
  using K = electra::ConfigurationKind;
  switch (kind) {
    case K::alpha:
    case K::beta: return {2, 4};
    case K::gamma: return {3, 6};
    case K::delta: return {4, 4};
    default: return {3, 3};
  }
}

// Lexicographically first (voters, candidates) realizing the pattern; voters distinct.
inline std::optional<electra::ForbiddenConfigurationWitness> find_configuration(const Election& e,
                                                                               electra::ConfigurationKind kind) {
  const auto [nv, nc] = arity(kind);
  std::vector<int> v(static_cast<std::size_t>(nv), 0);
  std::vector<Candidate> c(static_cast<std::size_t>(nc), 0);
  auto advance = [](std::vector<int>& xs, int bound) {
    for (std::size_t k = xs.size(); k-- > 0;) {
      if (++xs[k] < bound) return true;
      xs[k] = 0;
    }
    return false;
  };
  do {
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    std::fill(c.begin(), c.end(), 0);
    do {
      if (realizes(e, kind, v, c)) return electra::ForbiddenConfigurationWitness{kind, v, c};
    } while (advance(c, e.m()));
  } while (advance(v, e.n()));
  return std::nullopt;
}

// Smallest deletion by enumerating subsets in increasing size.
inline int deletion_distance(const Election& e, electra::DeletionMode mode,
                             const std::function<bool(const Election&)>& accepts) {
  const int universe = mode == electra::DeletionMode::voters ? e.n() : e.m();
  for (int k = 0; k < universe; ++k) {
    std::vector<char> pick(static_cast<std::size_t>(universe), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<int> kept;
      for (int x = 0; x < universe; ++x) {
        if (!pick[static_cast<std::size_t>(x)]) kept.push_back(x);
      }
      const Election r = mode == electra::DeletionMode::voters ? electra::restrict(e, std::nullopt, kept)
                                                               : electra::restrict(e, kept, std::nullopt);
      if (accepts(r)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return universe;
}

// Exhaustive maximum-edge biclique: every candidate subset with the voters ranking all of it.
inline long long max_biclique_edges(const Election& e) {
  const int m = e.m();
  long long best = 0;
  for (std::uint32_t set = 1; set < (1U << m); ++set) {
    long long voters = 0;
    for (int i = 0; i < e.n(); ++i) {
      bool all = true;
      for (Candidate c = 0; c < m && all; ++c) {
        if ((set >> c & 1U) && e.position(i, c) < 0) all = false;
      }
      if (all) ++voters;
    }
    best = std::max(best, voters * std::popcount(set));
  }
  return best;
}

// Minimum over all column bijections of summed 1-D EMDs (two-pass cumulative form).
inline double positionwise(const std::vector<std::vector<double>>& f, const std::vector<std::vector<double>>& g) {
  const std::size_t m = f.size();
  auto column_emd = [&](std::size_t a, std::size_t b) {
    std::vector<double> cf(m), cg(m);
    double sf = 0, sg = 0;
    for (std::size_t p = 0; p < m; ++p) {
      sf += f[p][a];
      sg += g[p][b];
      cf[p] = sf;
      cg[p] = sg;
    }
    double d = 0;
    for (std::size_t p = 0; p < m; ++p) d += std::abs(cf[p] - cg[p]);
    return d;
  };
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double total = 0;
    for (std::size_t c = 0; c < m; ++c) total += column_emd(c, perm[c]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Two-pass Pearson.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Random complete election with uniform votes.
inline Election random_election(int m, int n, electra::Rng& rng) {
  std::vector<Vote> votes;
  for (int i = 0; i < n; ++i) {
    Vote v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    rng.shuffle(std::span<Candidate>(v));
    votes.push_back(v);
  }
  return Election::unlabeled(m, votes);
}

// Random election whose votes are drawn from a small pool, so that
// restricted-domain members and near-members show up often.
inline Election clustered_election(int m, int n, electra::Rng& rng) {
  const int pool_size = 1 + static_cast<int>(rng.below(3));
  std::vector<Vote> pool;
  for (int k = 0; k < pool_size; ++k) {
    Vote v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    rng.shuffle(std::span<Candidate>(v));
    pool.push_back(v);
  }
  std::vector<Vote> votes;
  for (int i = 0; i < n; ++i) {
    Vote v = pool[rng.below(pool.size())];
    const int swaps = static_cast<int>(rng.below(3));
    for (int s = 0; s < swaps && m > 1; ++s) {
      const auto p = rng.below(static_cast<std::uint64_t>(m - 1));
      std::swap(v[p], v[p + 1]);
    }
    votes.push_back(v);
  }
  return Election::unlabeled(m, votes);
}

}  // namespace oracle
