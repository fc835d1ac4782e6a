#include "electra/preprocess.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "electra/rng.hpp"

namespace electra {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
void set(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
void clear(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

int popcount(const Bits& b) {
  int total = 0;
  for (std::uint64_t w : b) total += std::popcount(w);
  return total;
}

class BicliqueSearch {
 public:
  BicliqueSearch(const Election& e, std::uint64_t seed) : m_(e.m()), n_(e.n()), words_((e.m() + 63) / 64), rng_(seed) {
    ranked_.assign(static_cast<std::size_t>(n_), Bits(static_cast<std::size_t>(words_), 0));
    for (int i = 0; i < n_; ++i) {
      for (Candidate c : e.vote(i)) set(ranked_[static_cast<std::size_t>(i)], c);
    }
  }

  Biclique run(int effort) {
    std::vector<int> dense(static_cast<std::size_t>(n_));
    std::iota(dense.begin(), dense.end(), 0);
    std::stable_sort(dense.begin(), dense.end(), [&](int a, int b) {
      return popcount(ranked_[static_cast<std::size_t>(a)]) > popcount(ranked_[static_cast<std::size_t>(b)]);
    });

    Bits best_set;
    long long best_score = -1;
    const int starts = std::max(effort, 1);
    for (int r = 0; r < starts; ++r) {
      Bits start(static_cast<std::size_t>(words_), 0);
      bool randomized = false;
      if (r == 0) {
        for (int c = 0; c < m_; ++c) set(start, c);
      } else if (r <= n_) {
        start = ranked_[static_cast<std::size_t>(dense[static_cast<std::size_t>(r - 1)])];
      } else {
        start = ranked_[rng_.below(static_cast<std::uint64_t>(n_))];
        randomized = true;
      }
      auto [score, found] = descend(start, randomized);
      improve(found, score);
      if (score > best_score) {
        best_score = score;
        best_set = found;
      }
    }

    Biclique result;
    for (int c = 0; c < m_; ++c) {
      if (test(best_set, c)) result.candidates.push_back(c);
    }
    result.voters = covering(best_set);
    return result;
  }

 private:
  bool covers(int voter, const Bits& cands) const {
    const Bits& r = ranked_[static_cast<std::size_t>(voter)];
    for (int w = 0; w < words_; ++w) {
      if ((cands[static_cast<std::size_t>(w)] & ~r[static_cast<std::size_t>(w)]) != 0) return false;
    }
    return true;
  }

  std::vector<int> covering(const Bits& cands) const {
    std::vector<int> voters;
    for (int i = 0; i < n_; ++i) {
      if (covers(i, cands)) voters.push_back(i);
    }
    return voters;
  }

  long long score(const Bits& cands) const {
    return static_cast<long long>(covering(cands).size()) * popcount(cands);
  }

  // Greedy candidate removal path; returns the best set met along it.
  std::pair<long long, Bits> descend(Bits cands, bool randomized) {
    long long best = score(cands);
    Bits best_set = cands;
    std::vector<int> admits(static_cast<std::size_t>(m_));
    std::vector<int> excluded(static_cast<std::size_t>(m_));
    while (popcount(cands) > 1) {
      std::fill(admits.begin(), admits.end(), 0);
      std::fill(excluded.begin(), excluded.end(), 0);
      for (int i = 0; i < n_; ++i) {
        const Bits& r = ranked_[static_cast<std::size_t>(i)];
        int missing = 0;
        int last = -1;
        for (int w = 0; w < words_; ++w) {
          std::uint64_t gap = cands[static_cast<std::size_t>(w)] & ~r[static_cast<std::size_t>(w)];
          missing += std::popcount(gap);
          while (gap != 0) {
            const int c = w * 64 + std::countr_zero(gap);
            ++excluded[static_cast<std::size_t>(c)];
            last = c;
            gap &= gap - 1;
          }
        }
        if (missing == 1) ++admits[static_cast<std::size_t>(last)];
      }
      int chosen = -1;
      int ties = 0;
      for (int c = 0; c < m_; ++c) {
        if (!test(cands, c)) continue;
        if (chosen == -1) {
          chosen = c;
          ties = 1;
          continue;
        }
        const auto key = std::pair(admits[static_cast<std::size_t>(c)], excluded[static_cast<std::size_t>(c)]);
        const auto best_key = std::pair(admits[static_cast<std::size_t>(chosen)], excluded[static_cast<std::size_t>(chosen)]);
        if (key > best_key) {
          chosen = c;
          ties = 1;
        } else if (key == best_key && randomized) {
          ++ties;
          if (rng_.below(static_cast<std::uint64_t>(ties)) == 0) chosen = c;
        }
      }
      clear(cands, chosen);
      const long long s = score(cands);
      if (s > best) {
        best = s;
        best_set = cands;
      }
    }
    return {best, best_set};
  }

  // First-improvement local search over single additions, removals and swaps.
  void improve(Bits& cands, long long& best) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < m_ && !changed; ++c) {
        Bits trial = cands;
        if (test(cands, c)) {
          clear(trial, c);
          if (popcount(trial) == 0) continue;
        } else {
          set(trial, c);
        }
        const long long s = score(trial);
        if (s > best) {
          best = s;
          cands = trial;
          changed = true;
        }
      }
      for (int out = 0; out < m_ && !changed; ++out) {
        if (!test(cands, out)) continue;
        for (int in = 0; in < m_ && !changed; ++in) {
          if (test(cands, in)) continue;
          Bits trial = cands;
          clear(trial, out);
          set(trial, in);
          const long long s = score(trial);
          if (s > best) {
            best = s;
            cands = trial;
            changed = true;
          }
        }
      }
    }
  }

  int m_;
  int n_;
  int words_;
  Rng rng_;
  std::vector<Bits> ranked_;
};

}  // namespace

Biclique max_edge_biclique(const Election& e, int effort, std::uint64_t seed) { return BicliqueSearch(e, seed).run(effort); }

Election complete_election(const Election& e, int effort, std::uint64_t seed) {
  if (e.is_complete()) return e;
  const Biclique b = max_edge_biclique(e, effort, seed);
  return restrict(e, b.candidates, b.voters);
}

bool is_relevant(const Election& e, int min_candidates) { return e.m() >= min_candidates; }

Election normalize_sample(const Election& e, int m_out, int n_out, std::uint64_t seed) {
  e.require_complete();
  if (m_out < 1 || n_out < 1) throw InvalidElection("normalize_sample: m_out and n_out must be positive");
  if (e.m() < m_out) {
    throw InvalidElection("normalize_sample: election has " + std::to_string(e.m()) + " candidates, need " +
                          std::to_string(m_out));
  }
  Rng rng(seed);
  std::vector<Candidate> pool(static_cast<std::size_t>(e.m()));
  std::iota(pool.begin(), pool.end(), 0);
  for (int k = 0; k < m_out; ++k) {
    const auto pick = static_cast<std::size_t>(k) + rng.below(static_cast<std::uint64_t>(e.m() - k));
    std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
  }
  std::vector<Candidate> chosen(pool.begin(), pool.begin() + m_out);
  std::sort(chosen.begin(), chosen.end());

  std::vector<int> remap(static_cast<std::size_t>(e.m()), -1);
  std::vector<std::string> labels;
  for (Candidate c : chosen) {
    remap[static_cast<std::size_t>(c)] = static_cast<int>(labels.size());
    labels.push_back(e.label(c));
  }
  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(n_out));
  for (int k = 0; k < n_out; ++k) {
    const Vote& source = e.vote(static_cast<int>(rng.below(static_cast<std::uint64_t>(e.n()))));
    Vote v;
    v.reserve(static_cast<std::size_t>(m_out));
    for (Candidate c : source) {
      if (remap[static_cast<std::size_t>(c)] != -1) v.push_back(remap[static_cast<std::size_t>(c)]);
    }
    votes.push_back(std::move(v));
  }
  return Election(std::move(labels), std::move(votes));
}

}  // namespace electra
