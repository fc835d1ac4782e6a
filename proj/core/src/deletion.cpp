#include <algorithm>
#include <limits>
#include <numeric>

#include "electra/domains.hpp"

namespace electra {

std::vector<ConfigurationKind> forbidden_configurations(Domain domain) {
  switch (domain) {
    case Domain::single_peaked: return {ConfigurationKind::alpha, ConfigurationKind::worst};
    case Domain::single_crossing: return {ConfigurationKind::gamma, ConfigurationKind::delta};
    case Domain::group_separable: return {ConfigurationKind::beta, ConfigurationKind::medium};
    case Domain::value_restricted: return {ConfigurationKind::value};
  }
  return {};
}

std::optional<Certificate> recognize(const Election& e, Domain domain) {
  switch (domain) {
    case Domain::single_peaked:
      if (auto axis = detect_single_peaked(e)) return Certificate{std::move(*axis)};
      return std::nullopt;
    case Domain::single_crossing:
      if (auto order = detect_single_crossing(e)) return Certificate{std::move(*order)};
      return std::nullopt;
    case Domain::group_separable:
      if (auto tree = detect_group_separable(e)) return Certificate{std::move(*tree)};
      return std::nullopt;
    case Domain::value_restricted:
      if (is_value_restricted(e)) return Certificate{std::monostate{}};
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Exact minimum hitting set by branch and bound. Branches on the unhit set
// with the fewest available elements; siblings already tried are forbidden.
class HittingSet {
 public:
  HittingSet(int universe, const std::vector<std::vector<int>>& sets) : sets_(sets), universe_(universe) {}

  // Smallest hitting set of size < bound, if any. The search stops at the
  // first solution of size `floor`, a known lower bound.
  std::optional<std::vector<int>> solve(int bound, int floor = 0) {
    best_size_ = bound;
    floor_ = floor;
    best_.reset();
    chosen_.assign(static_cast<std::size_t>(universe_), 0);
    forbidden_.assign(static_cast<std::size_t>(universe_), 0);
    current_.clear();
    branch();
    return best_;
  }

 private:
  bool hit(const std::vector<int>& s) const {
    return std::any_of(s.begin(), s.end(), [&](int x) { return chosen_[static_cast<std::size_t>(x)] != 0; });
  }

  int available(const std::vector<int>& s) const {
    return static_cast<int>(std::count_if(s.begin(), s.end(), [&](int x) { return forbidden_[static_cast<std::size_t>(x)] == 0; }));
  }

  // Unhit sets with pairwise disjoint available elements each need their own pick.
  int packing_bound(std::vector<const std::vector<int>*>& unhit) {
    std::sort(unhit.begin(), unhit.end(), [&](auto* a, auto* b) { return available(*a) < available(*b); });
    std::vector<char> used(static_cast<std::size_t>(universe_), 0);
    int bound = 0;
    for (const auto* s : unhit) {
      bool disjoint = true;
      for (int x : *s) {
        if (!forbidden_[static_cast<std::size_t>(x)] && used[static_cast<std::size_t>(x)]) disjoint = false;
      }
      if (!disjoint) continue;
      for (int x : *s) {
        if (!forbidden_[static_cast<std::size_t>(x)]) used[static_cast<std::size_t>(x)] = 1;
      }
      ++bound;
    }
    return bound;
  }

  void branch() {
    if (best_ && best_size_ <= floor_) return;
    std::vector<const std::vector<int>*> unhit;
    for (const auto& s : sets_) {
      if (hit(s)) continue;
      if (available(s) == 0) return;
      unhit.push_back(&s);
    }
    const int size = static_cast<int>(current_.size());
    if (unhit.empty()) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = current_;
        std::sort(best_->begin(), best_->end());
      }
      return;
    }
    if (size + packing_bound(unhit) >= best_size_) return;

    const std::vector<int>& target = **std::min_element(
        unhit.begin(), unhit.end(), [&](auto* a, auto* b) { return available(*a) < available(*b); });
    std::vector<int> tried;
    for (int x : target) {
      if (forbidden_[static_cast<std::size_t>(x)]) continue;
      chosen_[static_cast<std::size_t>(x)] = 1;
      current_.push_back(x);
      branch();
      current_.pop_back();
      chosen_[static_cast<std::size_t>(x)] = 0;
      forbidden_[static_cast<std::size_t>(x)] = 1;
      tried.push_back(x);
      if (static_cast<int>(current_.size()) + 1 >= best_size_) break;
    }
    for (int x : tried) forbidden_[static_cast<std::size_t>(x)] = 0;
  }

  const std::vector<std::vector<int>>& sets_;
  int universe_;
  int best_size_ = 0;
  int floor_ = 0;
  std::optional<std::vector<int>> best_;
  std::vector<char> chosen_;
  std::vector<char> forbidden_;
  std::vector<int> current_;
};

std::vector<int> complement(int universe, const std::vector<int>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(universe), 0);
  for (int x : removed) gone[static_cast<std::size_t>(x)] = 1;
  std::vector<int> kept;
  for (int x = 0; x < universe; ++x) {
    if (!gone[static_cast<std::size_t>(x)]) kept.push_back(x);
  }
  return kept;
}

Election sub_election(const Election& e, DeletionMode mode, const std::vector<int>& kept) {
  if (mode == DeletionMode::voters) return restrict(e, std::nullopt, kept);
  return restrict(e, kept, std::nullopt);
}

// Elements of the witness that deletion in `mode` can remove, as indices of
// the election it was found in.
std::vector<int> witness_elements(const ForbiddenConfigurationWitness& w, DeletionMode mode) {
  std::vector<int> xs = mode == DeletionMode::voters ? w.voters : w.candidates;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::optional<ForbiddenConfigurationWitness> any_witness(const Election& e, Domain domain) {
  for (ConfigurationKind kind : forbidden_configurations(domain)) {
    if (auto w = find_configuration(e, kind)) return w;
  }
  return std::nullopt;
}

void relabel_tree(PartitionTree& node, const std::vector<int>& kept) {
  for (Candidate& c : node.candidates) c = kept[static_cast<std::size_t>(c)];
  for (PartitionTree& child : node.children) relabel_tree(child, kept);
}

Certificate to_input_indices(Certificate cert, DeletionMode mode, const std::vector<int>& kept) {
  if (auto* axis = std::get_if<Axis>(&cert)) {
    if (mode == DeletionMode::candidates) {
      for (Candidate& c : axis->order) c = kept[static_cast<std::size_t>(c)];
    }
  } else if (auto* order = std::get_if<VoterOrder>(&cert)) {
    if (mode == DeletionMode::voters) {
      for (int& i : order->voters) i = kept[static_cast<std::size_t>(i)];
    }
  } else if (auto* tree = std::get_if<PartitionTree>(&cert)) {
    if (mode == DeletionMode::candidates) relabel_tree(*tree, kept);
  }
  return cert;
}

}  // namespace

DeletionResult deletion_distance(const Election& e, Domain domain, DeletionMode mode, std::optional<int> budget) {
  e.require_complete();
  DeletionResult result;
  result.domain = domain;
  result.mode = mode;
  const int universe = mode == DeletionMode::voters ? e.n() : e.m();
  const int min_alive = mode == DeletionMode::voters ? 2 : 3;

  std::vector<std::vector<int>> sets;
  std::vector<int> deletion;
  for (;;) {
    const std::vector<int> kept = complement(universe, deletion);
    const Election residual = sub_election(e, mode, kept);
    if (auto cert = recognize(residual, domain)) {
      result.k = static_cast<int>(deletion.size());
      result.deleted = deletion;
      result.certificate = to_input_indices(std::move(*cert), mode, kept);
      return result;
    }

    // Collect witnesses from the residual, dropping one element of each before looking again.
    std::vector<int> alive = kept;
    bool found = false;
    while (static_cast<int>(alive.size()) >= min_alive) {
      const Election current = sub_election(e, mode, alive);
      const auto w = any_witness(current, domain);
      if (!w) break;
      found = true;
      std::vector<int> set;
      for (int x : witness_elements(*w, mode)) set.push_back(alive[static_cast<std::size_t>(x)]);
      alive.erase(std::find(alive.begin(), alive.end(), set[sets.size() % set.size()]));
      if (std::find(sets.begin(), sets.end(), set) == sets.end()) sets.push_back(std::move(set));
    }
    if (!found) throw Error("recognizer rejects an election that has no forbidden configuration");

    HittingSet solver(universe, sets);
    const int bound = budget ? *budget + 1 : universe + 1;
    auto solution = solver.solve(bound, static_cast<int>(deletion.size()));
    if (!solution) {
      result.k = bound;
      result.exceeds_budget = true;
      return result;
    }
    deletion = std::move(*solution);
  }
}

}  // namespace electra
