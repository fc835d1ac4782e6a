#include "electra/election.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace electra {

Election::Election(std::vector<std::string> labels, std::vector<Vote> votes)
    : labels_(std::move(labels)), votes_(std::move(votes)) {
  const int m = this->m();
  if (m < 1) throw InvalidElection("election needs at least one candidate");
  if (votes_.empty()) throw InvalidElection("election needs at least one vote");

  positions_.assign(votes_.size() * static_cast<std::size_t>(m), -1);
  bool complete = true;
  for (std::size_t i = 0; i < votes_.size(); ++i) {
    const Vote& v = votes_[i];
    if (v.empty()) throw InvalidElection("vote " + std::to_string(i) + " is empty");
    for (std::size_t p = 0; p < v.size(); ++p) {
      const Candidate c = v[p];
      if (c < 0 || c >= m) {
        throw InvalidElection("vote " + std::to_string(i) + " names out-of-range candidate " + std::to_string(c));
      }
      int& slot = positions_[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)];
      if (slot != -1) {
        throw InvalidElection("vote " + std::to_string(i) + " ranks candidate " + std::to_string(c) + " twice");
      }
      slot = static_cast<int>(p);
    }
    if (static_cast<int>(v.size()) != m) complete = false;
  }
  kind_ = complete ? ElectionKind::complete : ElectionKind::incomplete;
}

Election Election::unlabeled(int m, std::vector<Vote> votes) {
  return Election(std::vector<std::string>(static_cast<std::size_t>(std::max(m, 0))), std::move(votes));
}

void Election::require_complete() const {
  if (!is_complete()) throw IncompleteElection();
}

Election restrict(const Election& e, const std::optional<std::vector<Candidate>>& keep_candidates,
                  const std::optional<std::vector<int>>& keep_voters) {
  const int m = e.m();
  std::vector<int> remap(static_cast<std::size_t>(m), -1);
  if (keep_candidates) {
    for (Candidate c : *keep_candidates) {
      if (c < 0 || c >= m) throw InvalidElection("restrict: candidate index out of range");
      remap[static_cast<std::size_t>(c)] = 0;
    }
  } else {
    std::fill(remap.begin(), remap.end(), 0);
  }
  std::vector<std::string> labels;
  for (Candidate c = 0; c < m; ++c) {
    if (remap[static_cast<std::size_t>(c)] == -1) continue;
    remap[static_cast<std::size_t>(c)] = static_cast<int>(labels.size());
    labels.push_back(e.label(c));
  }
  if (labels.empty()) throw InvalidElection("restrict: no candidates left");

  std::vector<int> voters;
  if (keep_voters) {
    std::vector<char> keep(static_cast<std::size_t>(e.n()), 0);
    for (int i : *keep_voters) {
      if (i < 0 || i >= e.n()) throw InvalidElection("restrict: voter index out of range");
      keep[static_cast<std::size_t>(i)] = 1;
    }
    for (int i = 0; i < e.n(); ++i) {
      if (keep[static_cast<std::size_t>(i)]) voters.push_back(i);
    }
  } else {
    for (int i = 0; i < e.n(); ++i) voters.push_back(i);
  }

  std::vector<Vote> votes;
  votes.reserve(voters.size());
  for (int i : voters) {
    Vote v;
    for (Candidate c : e.vote(i)) {
      const int r = remap[static_cast<std::size_t>(c)];
      if (r != -1) v.push_back(r);
    }
    if (!v.empty()) votes.push_back(std::move(v));
  }
  if (votes.empty()) throw InvalidElection("restrict: no votes left");
  return Election(std::move(labels), std::move(votes));
}

bool FrequencyMatrix::is_doubly_stochastic(double tol) const {
  for (double x : entries_) {
    if (!(x >= -tol && x <= 1.0 + tol)) return false;
  }
  for (int i = 0; i < m_; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (int j = 0; j < m_; ++j) {
      row += at(i, j);
      col += at(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

FrequencyMatrix frequency_matrix(const Election& e) {
  e.require_complete();
  const int m = e.m();
  std::vector<int> counts(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (const Vote& v : e.votes()) {
    for (int p = 0; p < m; ++p) ++counts[static_cast<std::size_t>(p * m + v[static_cast<std::size_t>(p)])];
  }
  FrequencyMatrix f(m);
  for (int p = 0; p < m; ++p) {
    for (Candidate c = 0; c < m; ++c) {
      f.at(p, c) = static_cast<double>(counts[static_cast<std::size_t>(p * m + c)]) / e.n();
    }
  }
  return f;
}

}  // namespace electra
