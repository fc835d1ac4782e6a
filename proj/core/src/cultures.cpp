#include <algorithm>
#include <numeric>

#include "electra/cultures.hpp"
#include "electra/rng.hpp"

namespace electra {

std::string to_string(Culture culture) {
  switch (culture) {
    case Culture::impartial: return "impartial";
    case Culture::walsh_sp: return "walsh_sp";
    case Culture::conitzer_sp: return "conitzer_sp";
    case Culture::identity: return "identity";
    case Culture::antagonism: return "antagonism";
  }
  return "unknown";
}

std::optional<Culture> parse_culture(std::string_view name) {
  for (Culture c : {Culture::impartial, Culture::walsh_sp, Culture::conitzer_sp, Culture::identity, Culture::antagonism}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

Vote random_permutation(int m, Rng& rng) {
  Vote v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  rng.shuffle(std::span<Candidate>(v));
  return v;
}

Vote walsh_vote(int m, Rng& rng) {
  Vote v(static_cast<std::size_t>(m));
  int left = 0;
  int right = m - 1;
  for (int p = m - 1; p >= 0; --p) {
    v[static_cast<std::size_t>(p)] = left == right || rng.coin() ? left++ : right--;
  }
  return v;
}

Vote conitzer_vote(int m, Rng& rng) {
  Vote v;
  v.reserve(static_cast<std::size_t>(m));
  const int peak = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
  v.push_back(peak);
  int left = peak - 1;
  int right = peak + 1;
  while (static_cast<int>(v.size()) < m) {
    const bool go_left = right >= m || (left >= 0 && rng.coin());
    v.push_back(go_left ? left-- : right++);
  }
  return v;
}

}  // namespace

Election sample_culture(Culture culture, int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw InvalidElection("sampling needs m >= 1 and n >= 1");
  if (culture == Culture::antagonism && n % 2 != 0) throw InvalidElection("antagonism needs an even number of voters");
  Rng rng(seed);
  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(n));
  switch (culture) {
    case Culture::impartial:
      for (int i = 0; i < n; ++i) votes.push_back(random_permutation(m, rng));
      break;
    case Culture::walsh_sp:
      for (int i = 0; i < n; ++i) votes.push_back(walsh_vote(m, rng));
      break;
    case Culture::conitzer_sp:
      for (int i = 0; i < n; ++i) votes.push_back(conitzer_vote(m, rng));
      break;
    case Culture::identity:
      votes.assign(static_cast<std::size_t>(n), random_permutation(m, rng));
      break;
    case Culture::antagonism: {
      const Vote base = random_permutation(m, rng);
      votes.assign(static_cast<std::size_t>(n / 2), base);
      votes.insert(votes.end(), static_cast<std::size_t>(n / 2), Vote(base.rbegin(), base.rend()));
      break;
    }
  }
  return Election::unlabeled(m, std::move(votes));
}

}  // namespace electra
