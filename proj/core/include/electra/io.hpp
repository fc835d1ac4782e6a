#pragma once

#include <string>
#include <string_view>

#include "electra/election.hpp"

namespace electra {

enum class ParseErrorKind {
  malformed_header,
  duplicate_candidate_index,
  out_of_range_index,
  duplicate_candidate_in_vote,
  count_mismatch,
  tied_ballot,
  malformed_vote,
};

/// Parse failure pinned to a 1-based line of the input document.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  /// Message without the "line N: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  ParseErrorKind kind_;
  int line_;
  std::string detail_;
};

struct ParseOptions {
  /// Accept `{a,b}` tie groups inside ballots and order them lower index first.
  bool break_ties = false;
};

/// Reads the PrefLib-style election format:
///
///     # optional comments
///     m
///     1,label            (m lines, 1-based indices)
///     n,sum,distinct     (voters, sum of multiplicities, vote lines)
///     mult: c1,c2,...    (1-based candidate indices)
///
/// Multiplicities are expanded into individual votes in file order.
Election parse_election(std::string_view text, const ParseOptions& options = {});

/// Writes e in the format above; consecutive equal votes share one line.
/// Empty labels are written as cand_<file index>.
std::string write_election(const Election& e);

Election read_election_file(const std::string& path, const ParseOptions& options = {});
void write_election_file(const std::string& path, const Election& e);

}  // namespace electra
