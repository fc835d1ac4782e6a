#include <algorithm>
#include <bit>
#include <cstdint>

#include "electra/domains.hpp"

namespace electra {

std::string to_string(ConfigurationKind kind) {
  switch (kind) {
    case ConfigurationKind::alpha: return "alpha";
    case ConfigurationKind::beta: return "beta";
    case ConfigurationKind::gamma: return "gamma";
    case ConfigurationKind::delta: return "delta";
    case ConfigurationKind::best: return "best";
    case ConfigurationKind::worst: return "worst";
    case ConfigurationKind::medium: return "medium";
    case ConfigurationKind::value: return "value";
  }
  return "unknown";
}

bool witness_holds(const Election& e, const ForbiddenConfigurationWitness& w) {
  e.require_complete();
  const auto& v = w.voters;
  const auto& c = w.candidates;
  for (int i : v) {
    if (i < 0 || i >= e.n()) return false;
  }
  for (Candidate x : c) {
    if (x < 0 || x >= e.m()) return false;
  }
  auto above = [&](int voter, Candidate x, Candidate y) { return x != y && e.prefers(voter, x, y); };
  auto distinct = [](std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  };
  if (!distinct(v)) return false;

  switch (w.kind) {
    case ConfigurationKind::alpha: {
      if (v.size() != 2 || c.size() != 4 || !distinct(c)) return false;
      const auto [a, b, cc, d] = std::array{c[0], c[1], c[2], c[3]};
      return above(v[0], a, b) && above(v[0], b, cc) && above(v[0], d, b) &&  //
             above(v[1], cc, b) && above(v[1], b, a) && above(v[1], d, b);
    }
    case ConfigurationKind::beta: {
      if (v.size() != 2 || c.size() != 4 || !distinct(c)) return false;
      const auto [a, b, cc, d] = std::array{c[0], c[1], c[2], c[3]};
      return above(v[0], a, b) && above(v[0], b, cc) && above(v[0], cc, d) &&  //
             above(v[1], b, d) && above(v[1], d, a) && above(v[1], a, cc);
    }
    case ConfigurationKind::gamma: {
      if (v.size() != 3 || c.size() != 6) return false;
      const auto [a, b, cc, d, ee, f] = std::array{c[0], c[1], c[2], c[3], c[4], c[5]};
      return above(v[0], b, a) && above(v[0], cc, d) && above(v[0], ee, f) &&  //
             above(v[1], a, b) && above(v[1], d, cc) && above(v[1], ee, f) &&  //
             above(v[2], a, b) && above(v[2], cc, d) && above(v[2], f, ee);
    }
    case ConfigurationKind::delta: {
      if (v.size() != 4 || c.size() != 4) return false;
      const auto [a, b, cc, d] = std::array{c[0], c[1], c[2], c[3]};
      return above(v[0], a, b) && above(v[0], cc, d) && above(v[1], a, b) && above(v[1], d, cc) &&
             above(v[2], b, a) && above(v[2], cc, d) && above(v[3], b, a) && above(v[3], d, cc);
    }
    case ConfigurationKind::best: {
      if (v.size() != 3 || c.size() != 3 || !distinct(c)) return false;
      const auto [a, b, cc] = std::array{c[0], c[1], c[2]};
      return above(v[0], a, b) && above(v[0], a, cc) && above(v[1], b, a) && above(v[1], b, cc) &&
             above(v[2], cc, a) && above(v[2], cc, b);
    }
    case ConfigurationKind::worst: {
      if (v.size() != 3 || c.size() != 3 || !distinct(c)) return false;
      const auto [a, b, cc] = std::array{c[0], c[1], c[2]};
      return above(v[0], a, cc) && above(v[0], b, cc) && above(v[1], a, b) && above(v[1], cc, b) &&
             above(v[2], b, a) && above(v[2], cc, a);
    }
    case ConfigurationKind::medium: {
      if (v.size() != 3 || c.size() != 3 || !distinct(c)) return false;
      const auto [a, b, cc] = std::array{c[0], c[1], c[2]};
      auto between = [&](int voter, Candidate x, Candidate mid, Candidate y) {
        return (above(voter, x, mid) && above(voter, mid, y)) || (above(voter, y, mid) && above(voter, mid, x));
      };
      return between(v[0], b, a, cc) && between(v[1], a, b, cc) && between(v[2], a, cc, b);
    }
    case ConfigurationKind::value: {
      if (v.size() != 3 || c.size() != 3 || !distinct(c)) return false;
      const auto [a, b, cc] = std::array{c[0], c[1], c[2]};
      return above(v[0], a, b) && above(v[0], b, cc) && above(v[1], b, cc) && above(v[1], cc, a) &&
             above(v[2], cc, a) && above(v[2], a, b);
    }
  }
  return false;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Per-voter orientation bitsets over candidate pairs (a < b): bit set iff a above b.
class PairTable {
 public:
  explicit PairTable(const Election& e) : e_(e), m_(e.m()) {
    for (Candidate a = 0; a < m_; ++a) {
      for (Candidate b = a + 1; b < m_; ++b) pairs_.emplace_back(a, b);
    }
    words_ = (pairs_.size() + 63) / 64;
    above_.assign(static_cast<std::size_t>(e.n()), Bits(std::max<std::size_t>(words_, 1), 0));
    for (int i = 0; i < e.n(); ++i) {
      for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (e.prefers(i, pairs_[k].first, pairs_[k].second)) above_[static_cast<std::size_t>(i)][k >> 6] |= std::uint64_t{1} << (k & 63);
      }
    }
  }

  std::size_t words() const { return std::max<std::size_t>(words_, 1); }
  const Bits& above(int i) const { return above_[static_cast<std::size_t>(i)]; }
  std::pair<Candidate, Candidate> pair(std::size_t k) const { return pairs_[k]; }

  // Lexicographically smallest (x, y) over pairs in `mask`, oriented so that
  // voter `ref` ranks x above y when `ref_above` is true, else y above x.
  std::pair<Candidate, Candidate> min_oriented(const Bits& mask, int ref, bool ref_above) const {
    std::pair<Candidate, Candidate> best{m_, m_};
    for (std::size_t w = 0; w < mask.size(); ++w) {
      for (std::uint64_t bits = mask[w]; bits != 0; bits &= bits - 1) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        auto [a, b] = pairs_[k];
        if (e_.prefers(ref, a, b) != ref_above) std::swap(a, b);
        best = std::min(best, std::pair{a, b});
      }
    }
    return best;
  }

 private:
  const Election& e_;
  int m_;
  std::vector<std::pair<Candidate, Candidate>> pairs_;
  std::size_t words_ = 0;
  std::vector<Bits> above_;
};

std::optional<ForbiddenConfigurationWitness> find_alpha(const Election& e) {
  const int m = e.m();
  for (int v = 0; v < e.n(); ++v) {
    for (int w = 0; w < e.n(); ++w) {
      if (v == w) continue;
      // For each b: smallest c below b in v and above b in w; smallest d above b in both.
      std::vector<Candidate> c_of(static_cast<std::size_t>(m), -1), d_of(static_cast<std::size_t>(m), -1);
      for (Candidate b = 0; b < m; ++b) {
        for (Candidate x = 0; x < m; ++x) {
          if (x == b) continue;
          if (c_of[static_cast<std::size_t>(b)] == -1 && e.prefers(v, b, x) && e.prefers(w, x, b)) c_of[static_cast<std::size_t>(b)] = x;
          if (d_of[static_cast<std::size_t>(b)] == -1 && e.prefers(v, x, b) && e.prefers(w, x, b)) d_of[static_cast<std::size_t>(b)] = x;
        }
      }
      for (Candidate a = 0; a < m; ++a) {
        for (Candidate b = 0; b < m; ++b) {
          if (a == b || !e.prefers(v, a, b) || !e.prefers(w, b, a)) continue;
          if (c_of[static_cast<std::size_t>(b)] == -1 || d_of[static_cast<std::size_t>(b)] == -1) continue;
          return ForbiddenConfigurationWitness{ConfigurationKind::alpha, {v, w},
                                               {a, b, c_of[static_cast<std::size_t>(b)], d_of[static_cast<std::size_t>(b)]}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenConfigurationWitness> find_beta(const Election& e) {
  const int m = e.m();
  for (int v = 0; v < e.n(); ++v) {
    for (int w = 0; w < e.n(); ++w) {
      if (v == w) continue;
      auto above = [&](int voter, Candidate x, Candidate y) { return e.prefers(voter, x, y); };
      for (Candidate a = 0; a < m; ++a) {
        for (Candidate b = 0; b < m; ++b) {
          if (b == a || !above(v, a, b) || !above(w, b, a)) continue;
          for (Candidate c = 0; c < m; ++c) {
            if (c == a || c == b || !above(v, b, c) || !above(w, a, c)) continue;
            for (Candidate d = 0; d < m; ++d) {
              if (d == a || d == b || d == c) continue;
              if (above(v, c, d) && above(w, b, d) && above(w, d, a)) {
                return ForbiddenConfigurationWitness{ConfigurationKind::beta, {v, w}, {a, b, c, d}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenConfigurationWitness> find_gamma(const Election& e) {
  const PairTable t(e);
  const std::size_t words = t.words();
  Bits odd0(words), odd1(words), odd2(words);
  for (int v0 = 0; v0 < e.n(); ++v0) {
    for (int v1 = 0; v1 < e.n(); ++v1) {
      if (v1 == v0) continue;
      for (int v2 = 0; v2 < e.n(); ++v2) {
        if (v2 == v0 || v2 == v1) continue;
        const Bits& x0 = t.above(v0);
        const Bits& x1 = t.above(v1);
        const Bits& x2 = t.above(v2);
        for (std::size_t k = 0; k < words; ++k) {
          odd0[k] = (x0[k] ^ x1[k]) & (x0[k] ^ x2[k]);
          odd1[k] = (x1[k] ^ x0[k]) & (x1[k] ^ x2[k]);
          odd2[k] = (x2[k] ^ x0[k]) & (x2[k] ^ x1[k]);
        }
        if (!any(odd0) || !any(odd1) || !any(odd2)) continue;
        const auto [a, b] = t.min_oriented(odd0, v0, false);   // b above a in v
        const auto [c, d] = t.min_oriented(odd1, v0, true);    // c above d in v
        const auto [ee, f] = t.min_oriented(odd2, v0, true);   // e above f in v
        return ForbiddenConfigurationWitness{ConfigurationKind::gamma, {v0, v1, v2}, {a, b, c, d, ee, f}};
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenConfigurationWitness> find_delta(const Election& e) {
  const PairTable t(e);
  const std::size_t words = t.words();
  const std::size_t pair_count = candidate_pairs(e.m());

  // Quick rejection: some two candidate pairs must show all four orientation combinations.
  bool possible = false;
  for (std::size_t p = 0; p < pair_count && !possible; ++p) {
    for (std::size_t q = p + 1; q < pair_count && !possible; ++q) {
      int combos = 0;
      for (int i = 0; i < e.n(); ++i) {
        const int bp = static_cast<int>((t.above(i)[p >> 6] >> (p & 63)) & 1U);
        const int bq = static_cast<int>((t.above(i)[q >> 6] >> (q & 63)) & 1U);
        combos |= 1 << (bp * 2 + bq);
      }
      possible = combos == 15;
    }
  }
  if (!possible) return std::nullopt;

  Bits first(words), second(words);
  for (int v0 = 0; v0 < e.n(); ++v0) {
    for (int v1 = 0; v1 < e.n(); ++v1) {
      if (v1 == v0) continue;
      for (int v2 = 0; v2 < e.n(); ++v2) {
        if (v2 == v0 || v2 == v1) continue;
        for (int v3 = 0; v3 < e.n(); ++v3) {
          if (v3 == v0 || v3 == v1 || v3 == v2) continue;
          const Bits& x0 = t.above(v0);
          const Bits& x1 = t.above(v1);
          const Bits& x2 = t.above(v2);
          const Bits& x3 = t.above(v3);
          for (std::size_t k = 0; k < words; ++k) {
            // (a, b): v, v' agree; v'', v''' agree; v and v'' differ.
            first[k] = ~(x0[k] ^ x1[k]) & ~(x2[k] ^ x3[k]) & (x0[k] ^ x2[k]);
            // (c, d): v, v'' agree; v', v''' agree; v and v' differ.
            second[k] = ~(x0[k] ^ x2[k]) & ~(x1[k] ^ x3[k]) & (x0[k] ^ x1[k]);
          }
          if (!any(first) || !any(second)) continue;
          const auto [a, b] = t.min_oriented(first, v0, true);
          const auto [c, d] = t.min_oriented(second, v0, true);
          return ForbiddenConfigurationWitness{ConfigurationKind::delta, {v0, v1, v2, v3}, {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

// Best/worst/medium/value: three voters, three candidates. For a candidate
// triple, each voter's restriction is stored as (top, middle, bottom).
std::optional<ForbiddenConfigurationWitness> find_triple_kind(const Election& e, ConfigurationKind kind) {
  using Order = std::array<Candidate, 3>;
  const int m = e.m();
  const int n = e.n();
  std::vector<std::vector<Order>> orders;  // [triple][voter]
  for (Candidate a = 0; a < m; ++a) {
    for (Candidate b = a + 1; b < m; ++b) {
      for (Candidate c = b + 1; c < m; ++c) {
        std::vector<Order> per_voter(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          Order o{a, b, c};
          std::sort(o.begin(), o.end(), [&](Candidate x, Candidate y) { return e.prefers(i, x, y); });
          per_voter[static_cast<std::size_t>(i)] = o;
        }
        orders.push_back(std::move(per_voter));
      }
    }
  }

  // Candidate tuple realized by voters (o0, o1, o2), or nothing.
  auto realize = [kind](const Order& o0, const Order& o1, const Order& o2) -> std::optional<Order> {
    auto distinct = [](const Order& x) { return x[0] != x[1] && x[0] != x[2] && x[1] != x[2]; };
    switch (kind) {
      case ConfigurationKind::best: {
        const Order t{o0[0], o1[0], o2[0]};
        if (distinct(t)) return t;
        return std::nullopt;
      }
      case ConfigurationKind::worst: {
        const Order t{o2[2], o1[2], o0[2]};
        if (distinct(t)) return t;
        return std::nullopt;
      }
      case ConfigurationKind::medium: {
        const Order t{o0[1], o1[1], o2[1]};
        if (distinct(t)) return t;
        return std::nullopt;
      }
      case ConfigurationKind::value: {
        const Order t = o0;  // a > b > c in v
        if (o1 == Order{t[1], t[2], t[0]} && o2 == Order{t[2], t[0], t[1]}) return t;
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  };

  // Quick rejection by the set of restrictions present on each triple.
  bool possible = false;
  for (const auto& per_voter : orders) {
    std::vector<Order> kinds_present;
    for (const Order& o : per_voter) {
      if (std::find(kinds_present.begin(), kinds_present.end(), o) == kinds_present.end()) kinds_present.push_back(o);
    }
    for (const Order& x : kinds_present) {
      for (const Order& y : kinds_present) {
        for (const Order& z : kinds_present) {
          if (realize(x, y, z)) possible = true;
        }
      }
    }
    if (possible) break;
  }
  if (!possible) return std::nullopt;

  for (int v0 = 0; v0 < n; ++v0) {
    for (int v1 = 0; v1 < n; ++v1) {
      if (v1 == v0) continue;
      for (int v2 = 0; v2 < n; ++v2) {
        if (v2 == v0 || v2 == v1) continue;
        std::optional<Order> best;
        for (const auto& per_voter : orders) {
          const auto t = realize(per_voter[static_cast<std::size_t>(v0)], per_voter[static_cast<std::size_t>(v1)],
                                 per_voter[static_cast<std::size_t>(v2)]);
          if (t && (!best || *t < *best)) best = t;
        }
        if (best) return ForbiddenConfigurationWitness{kind, {v0, v1, v2}, {(*best)[0], (*best)[1], (*best)[2]}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ForbiddenConfigurationWitness> find_configuration(const Election& e, ConfigurationKind kind) {
  e.require_complete();
  switch (kind) {
    case ConfigurationKind::alpha: return find_alpha(e);
    case ConfigurationKind::beta: return find_beta(e);
    case ConfigurationKind::gamma: return find_gamma(e);
    case ConfigurationKind::delta: return find_delta(e);
    default: return find_triple_kind(e, kind);
  }
}

}  // namespace electra
