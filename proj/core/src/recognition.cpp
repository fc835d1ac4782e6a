#include <algorithm>
#include <numeric>

#include "electra/domains.hpp"
#include "electra/metrics.hpp"
#include "electra/rng.hpp"

namespace electra {

bool is_compatible_axis(const Election& e, const Axis& axis) {
  e.require_complete();
  const int m = e.m();
  if (static_cast<int>(axis.order.size()) != m) return false;
  std::vector<int> where(static_cast<std::size_t>(m), -1);
  for (int p = 0; p < m; ++p) {
    const Candidate c = axis.order[static_cast<std::size_t>(p)];
    if (c < 0 || c >= m || where[static_cast<std::size_t>(c)] != -1) return false;
    where[static_cast<std::size_t>(c)] = p;
  }
  // Every top-k set of every vote must be an interval of the axis.
  for (const Vote& v : e.votes()) {
    int lo = where[static_cast<std::size_t>(v[0])];
    int hi = lo;
    for (std::size_t k = 1; k < v.size(); ++k) {
      const int p = where[static_cast<std::size_t>(v[k])];
      if (p == lo - 1) {
        lo = p;
      } else if (p == hi + 1) {
        hi = p;
      } else {
        return false;
      }
    }
  }
  return true;
}

namespace {

class AxisBuilder {
 public:
  AxisBuilder(const Election& e, TieBreak tie_break, std::uint64_t seed)
      : e_(e), m_(e.m()), tie_break_(tie_break), rng_(seed), remaining_(static_cast<std::size_t>(e.m()), 1) {}

  std::optional<Axis> run() {
    if (search(m_)) return Axis{axis_};
    return std::nullopt;
  }

 private:
  // Candidates ranked last among the remaining ones by some voter.
  std::vector<Candidate> bottoms() const {
    std::vector<Candidate> found;
    for (const Vote& v : e_.votes()) {
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (!remaining_[static_cast<std::size_t>(*it)]) continue;
        if (std::find(found.begin(), found.end(), *it) == found.end()) found.push_back(*it);
        break;
      }
      if (found.size() > 2) break;
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  // x joins one side as its innermost element. Every candidate already on
  // that side is outside x, everything else is inside, so x may never be the
  // worst of such a triple.
  bool consistent(Candidate x, const std::vector<Candidate>& side) const {
    if (side.empty()) return true;
    for (int i = 0; i < e_.n(); ++i) {
      bool beaten_outside = false;
      for (Candidate l : side) {
        if (e_.prefers(i, l, x)) {
          beaten_outside = true;
          break;
        }
      }
      if (!beaten_outside) continue;
      for (Candidate y = 0; y < m_; ++y) {
        if (y == x || !inside_of(y, side)) continue;
        if (e_.prefers(i, y, x)) return false;
      }
    }
    return true;
  }

  bool inside_of(Candidate y, const std::vector<Candidate>& side) const {
    return std::find(side.begin(), side.end(), y) == side.end();
  }

  bool place(Candidate x, bool on_left) {
    auto& side = on_left ? left_ : right_;
    if (!consistent(x, side)) return false;
    side.push_back(x);
    remaining_[static_cast<std::size_t>(x)] = 0;
    return true;
  }

  void unplace(Candidate x, bool on_left) {
    (on_left ? left_ : right_).pop_back();
    remaining_[static_cast<std::size_t>(x)] = 1;
  }

  bool search(int left_to_place) {
    if (left_to_place == 0) {
      axis_ = left_;
      axis_.insert(axis_.end(), right_.rbegin(), right_.rend());
      return is_compatible_axis(e_, Axis{axis_});
    }
    const std::vector<Candidate> last = bottoms();
    if (last.size() > 2) return false;

    // Each option is a list of (candidate, goes-left) placements.
    std::vector<std::vector<std::pair<Candidate, bool>>> options;
    if (last.size() == 2) {
      options.push_back({{last[0], true}, {last[1], false}});
      options.push_back({{last[1], true}, {last[0], false}});
    } else if (left_to_place == 1) {
      options.push_back({{last[0], true}});
    } else {
      options.push_back({{last[0], true}});
      options.push_back({{last[0], false}});
    }
    if (tie_break_ == TieBreak::random && options.size() == 2 && rng_.coin()) std::swap(options[0], options[1]);

    for (const auto& option : options) {
      std::size_t done = 0;
      bool ok = true;
      for (const auto& [c, on_left] : option) {
        if (!place(c, on_left)) {
          ok = false;
          break;
        }
        ++done;
      }
      if (ok && search(left_to_place - static_cast<int>(option.size()))) return true;
      while (done > 0) {
        --done;
        unplace(option[done].first, option[done].second);
      }
    }
    return false;
  }

  const Election& e_;
  int m_;
  TieBreak tie_break_;
  Rng rng_;
  std::vector<char> remaining_;
  std::vector<Candidate> left_;   // outermost first
  std::vector<Candidate> right_;  // outermost first
  std::vector<Candidate> axis_;
};

}  // namespace

std::optional<Axis> detect_single_peaked(const Election& e, TieBreak tie_break, std::uint64_t seed) {
  e.require_complete();
  return AxisBuilder(e, tie_break, seed).run();
}

bool is_single_crossing_order(const Election& e, const VoterOrder& order) {
  e.require_complete();
  if (static_cast<int>(order.voters.size()) != e.n()) return false;
  std::vector<char> seen(static_cast<std::size_t>(e.n()), 0);
  for (int i : order.voters) {
    if (i < 0 || i >= e.n() || seen[static_cast<std::size_t>(i)]) return false;
    seen[static_cast<std::size_t>(i)] = 1;
  }
  for (Candidate a = 0; a < e.m(); ++a) {
    for (Candidate b = a + 1; b < e.m(); ++b) {
      int flips = 0;
      for (std::size_t k = 1; k < order.voters.size(); ++k) {
        if (e.prefers(order.voters[k - 1], a, b) != e.prefers(order.voters[k], a, b)) ++flips;
      }
      if (flips > 1) return false;
    }
  }
  return true;
}

std::optional<VoterOrder> detect_single_crossing(const Election& e) {
  e.require_complete();
  // In a single-crossing order the disagreement set with an end vote grows
  // monotonically, and the vote farthest from any vote is an end vote.
  int far = 0;
  long long far_distance = -1;
  for (int i = 0; i < e.n(); ++i) {
    const long long d = kendall_tau(e.vote(0), e.vote(i));
    if (d > far_distance) {
      far_distance = d;
      far = i;
    }
  }
  std::vector<long long> key(static_cast<std::size_t>(e.n()));
  for (int i = 0; i < e.n(); ++i) key[static_cast<std::size_t>(i)] = kendall_tau(e.vote(far), e.vote(i));
  VoterOrder order;
  order.voters.resize(static_cast<std::size_t>(e.n()));
  std::iota(order.voters.begin(), order.voters.end(), 0);
  std::stable_sort(order.voters.begin(), order.voters.end(),
                   [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });
  if (is_single_crossing_order(e, order)) return order;
  return std::nullopt;
}

namespace {

// Block `part` is above or below the rest of `set` in vote i.
bool separates(const Election& e, int i, const std::vector<Candidate>& part, const std::vector<Candidate>& set) {
  std::vector<int> ranks;
  ranks.reserve(set.size());
  for (Candidate c : set) ranks.push_back(e.position(i, c));
  std::sort(ranks.begin(), ranks.end());
  const int top_cut = ranks[part.size() - 1];
  const int bottom_cut = ranks[set.size() - part.size()];
  bool all_top = true;
  bool all_bottom = true;
  for (Candidate c : part) {
    const int p = e.position(i, c);
    all_top = all_top && p <= top_cut;
    all_bottom = all_bottom && p >= bottom_cut;
  }
  return all_top || all_bottom;
}

std::optional<PartitionTree> split(const Election& e, std::vector<Candidate> set) {
  PartitionTree node;
  std::sort(set.begin(), set.end());
  node.candidates = set;
  if (set.size() == 1) return node;

  std::vector<Candidate> lead = set;
  std::sort(lead.begin(), lead.end(), [&](Candidate a, Candidate b) { return e.position(0, a) < e.position(0, b); });
  for (std::size_t k = 1; k < lead.size(); ++k) {
    const std::vector<Candidate> upper(lead.begin(), lead.begin() + static_cast<std::ptrdiff_t>(k));
    bool ok = true;
    for (int i = 1; i < e.n() && ok; ++i) ok = separates(e, i, upper, set);
    if (!ok) continue;
    const std::vector<Candidate> lower(lead.begin() + static_cast<std::ptrdiff_t>(k), lead.end());
    auto first = split(e, upper);
    if (!first) return std::nullopt;
    auto second = split(e, lower);
    if (!second) return std::nullopt;
    node.children.push_back(std::move(*first));
    node.children.push_back(std::move(*second));
    return node;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PartitionTree> detect_group_separable(const Election& e) {
  e.require_complete();
  std::vector<Candidate> all(static_cast<std::size_t>(e.m()));
  std::iota(all.begin(), all.end(), 0);
  return split(e, all);
}

bool is_valid_partition_tree(const Election& e, const PartitionTree& tree) {
  e.require_complete();
  std::vector<Candidate> all(static_cast<std::size_t>(e.m()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<Candidate> root = tree.candidates;
  std::sort(root.begin(), root.end());
  if (root != all) return false;

  auto check = [&](auto&& self, const PartitionTree& node) -> bool {
    if (node.candidates.empty()) return false;
    if (node.children.empty()) return node.candidates.size() == 1;
    if (node.children.size() != 2) return false;
    std::vector<Candidate> joined = node.children[0].candidates;
    joined.insert(joined.end(), node.children[1].candidates.begin(), node.children[1].candidates.end());
    std::sort(joined.begin(), joined.end());
    std::vector<Candidate> own = node.candidates;
    std::sort(own.begin(), own.end());
    if (joined != own || std::adjacent_find(joined.begin(), joined.end()) != joined.end()) return false;
    for (int i = 0; i < e.n(); ++i) {
      if (!separates(e, i, node.children[0].candidates, node.candidates)) return false;
    }
    return self(self, node.children[0]) && self(self, node.children[1]);
  };
  return check(check, tree);
}

bool is_value_restricted(const Election& e) {
  e.require_complete();
  const int m = e.m();
  for (Candidate a = 0; a < m; ++a) {
    for (Candidate b = a + 1; b < m; ++b) {
      for (Candidate c = b + 1; c < m; ++c) {
        // seen[slot][k]: candidate k of (a, b, c) appears at slot 0 (best), 1, 2 (worst).
        std::array<std::array<bool, 3>, 3> seen{};
        const std::array<Candidate, 3> triple{a, b, c};
        for (int i = 0; i < e.n(); ++i) {
          std::array<int, 3> order{0, 1, 2};
          std::sort(order.begin(), order.end(), [&](int x, int y) {
            return e.position(i, triple[static_cast<std::size_t>(x)]) < e.position(i, triple[static_cast<std::size_t>(y)]);
          });
          for (std::size_t slot = 0; slot < 3; ++slot) seen[slot][static_cast<std::size_t>(order[slot])] = true;
        }
        bool restricted = false;
        for (std::size_t k = 0; k < 3 && !restricted; ++k) {
          restricted = !seen[0][k] || !seen[1][k] || !seen[2][k];
        }
        if (!restricted) return false;
      }
    }
  }
  return true;
}

}  // namespace electra
