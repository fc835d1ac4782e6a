#include <numeric>

#include "doctest.h"
#include "electra/election.hpp"
#include "electra/io.hpp"
#include "electra/rng.hpp"
#include "oracles.hpp"

using namespace electra;

namespace {

ParseErrorKind parse_failure(const std::string& text) {
  try {
    parse_election(text);
  } catch (const ParseError& error) {
    return error.kind();
  }
  FAIL("document was accepted");
  return ParseErrorKind::malformed_header;
}

}  // namespace

TEST_CASE("two-vote document parses to a complete election") {
  const Election e = parse_election("2\n1,a\n2,b\n2,2,2\n1: 1,2\n1: 2,1\n");
  CHECK(e.m() == 2);
  CHECK(e.n() == 2);
  CHECK(e.is_complete());
  CHECK(e.vote(0) == Vote{0, 1});
  CHECK(e.vote(1) == Vote{1, 0});
  CHECK(e.label(1) == "b");
}

TEST_CASE("multiplicities expand in file order") {
  const Election e = parse_election("# comment\n2\n1,a\n2,b\n3,3,2\n2: 1,2\n1: 2,1\n");
  REQUIRE(e.n() == 3);
  CHECK(e.vote(0) == Vote{0, 1});
  CHECK(e.vote(1) == Vote{0, 1});
  CHECK(e.vote(2) == Vote{1, 0});
}

TEST_CASE("incomplete ballots make an incomplete election") {
  const Election e = parse_election("3\n1,a\n2,b\n3,c\n2,2,2\n1: 1,2,3\n1: 3\n");
  CHECK_FALSE(e.is_complete());
  CHECK(e.position(1, 0) == -1);
  CHECK_THROWS_AS(e.require_complete(), IncompleteElection);
}

TEST_CASE("parse errors are typed and carry the line") {
  CHECK(parse_failure("x\n") == ParseErrorKind::malformed_header);
  CHECK(parse_failure("2\n1,a\n1,b\n1,1,1\n1: 1,2\n") == ParseErrorKind::duplicate_candidate_index);
  CHECK(parse_failure("2\n1,a\n2,b\n1,1,1\n1: 1,3\n") == ParseErrorKind::out_of_range_index);
  CHECK(parse_failure("2\n1,a\n2,b\n1,1,1\n1: 1,1\n") == ParseErrorKind::duplicate_candidate_in_vote);
  CHECK(parse_failure("2\n1,a\n2,b\n3,3,1\n1: 1,2\n") == ParseErrorKind::count_mismatch);
  CHECK(parse_failure("3\n1,a\n2,b\n3,c\n1,1,1\n1: 1,{2,3}\n") == ParseErrorKind::tied_ballot);
  try {
    parse_election("2\n1,a\n2,b\n1,1,1\n1: 1,1\n");
  } catch (const ParseError& error) {
    CHECK(error.line() == 5);
    CHECK(std::string(error.what()).find("duplicate candidate in vote") != std::string::npos);
  }
}

TEST_CASE("tie groups are broken lower index first on request") {
  ParseOptions options;
  options.break_ties = true;
  const Election e = parse_election("3\n1,a\n2,b\n3,c\n1,1,1\n1: {3,2},1\n", options);
  CHECK(e.vote(0) == Vote{1, 2, 0});
}

TEST_CASE("write then parse is the identity") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Election raw = oracle::clustered_election(1 + static_cast<int>(rng.below(6)), 1 + static_cast<int>(rng.below(8)), rng);
    std::vector<std::string> labels;
    for (int c = 0; c < raw.m(); ++c) labels.push_back("c" + std::to_string(c));
    const Election e(labels, raw.votes());
    CHECK(parse_election(write_election(e)) == e);
  }
  const Election partial = parse_election("3\n1,a\n2,b\n3,c\n3,3,3\n1: 2\n1: 3,1\n1: 1,2,3\n");
  CHECK(parse_election(write_election(partial)) == partial);
}

TEST_CASE("equal consecutive votes share one line and empty labels get defaults") {
  const Election e({"", "b"}, {{0, 1}, {0, 1}, {0, 1}});
  const std::string text = write_election(e);
  CHECK(text.find("3: 1,2") != std::string::npos);
  CHECK(text.find("1,cand_1") != std::string::npos);
  CHECK(text.find("3,3,1") != std::string::npos);
}

TEST_CASE("election invariants are enforced") {
  CHECK_THROWS_AS(Election::unlabeled(0, {{}}), InvalidElection);
  CHECK_THROWS_AS(Election::unlabeled(2, {}), InvalidElection);
  CHECK_THROWS_AS(Election::unlabeled(2, {{0, 0}}), InvalidElection);
  CHECK_THROWS_AS(Election::unlabeled(2, {{0, 2}}), InvalidElection);
  CHECK_THROWS_AS(Election::unlabeled(2, {{}}), InvalidElection);
}

TEST_CASE("restrict keeps relative order and reindexes") {
  const Election e = Election::unlabeled(3, {{0, 1, 2}, {2, 1, 0}});
  CHECK(restrict(e, std::nullopt, std::nullopt) == e);
  const Election dropped = restrict(e, std::vector<Candidate>{0, 2}, std::nullopt);
  CHECK(dropped.vote(0) == Vote{0, 1});
  CHECK(dropped.vote(1) == Vote{1, 0});
  const Election first = restrict(e, std::nullopt, std::vector<int>{0});
  CHECK(first.n() == 1);
  CHECK(first.vote(0) == e.vote(0));
}

TEST_CASE("restrict drops emptied incomplete votes and rejects empty results") {
  const Election e = Election::unlabeled(3, {{0}, {1, 2}});
  const Election r = restrict(e, std::vector<Candidate>{1, 2}, std::nullopt);
  CHECK(r.n() == 1);
  CHECK_THROWS_AS(restrict(e, std::vector<Candidate>{}, std::nullopt), InvalidElection);
}

TEST_CASE("restrict twice equals one restrict with intersected sets") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Election e = oracle::random_election(6, 6, rng);
    const Election twice =
        restrict(restrict(e, std::vector<Candidate>{0, 1, 3, 5}, std::vector<int>{1, 2, 4, 5}), std::vector<Candidate>{1, 3},
                 std::vector<int>{0, 3});
    // Second call indices refer to the first result: candidates {1, 3} -> {1, 5}; voters {0, 3} -> {1, 5}.
    const Election once = restrict(e, std::vector<Candidate>{1, 5}, std::vector<int>{1, 5});
    CHECK(twice == once);
  }
}

TEST_CASE("frequency matrices") {
  const Election identity = Election::unlabeled(3, {{0, 1, 2}, {0, 1, 2}});
  const FrequencyMatrix fi = frequency_matrix(identity);
  for (int p = 0; p < 3; ++p) {
    for (int c = 0; c < 3; ++c) CHECK(fi.at(p, c) == (p == c ? 1.0 : 0.0));
  }
  const FrequencyMatrix half = frequency_matrix(Election::unlabeled(2, {{0, 1}, {1, 0}}));
  for (double x : half.entries()) CHECK(x == 0.5);
  const FrequencyMatrix f = frequency_matrix(Election::unlabeled(3, {{0, 1, 2}, {0, 1, 2}, {1, 0, 2}}));
  CHECK(f.at(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(f.at(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(f.at(2, 0) == 0.0);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) CHECK(frequency_matrix(oracle::random_election(9, 13, rng)).is_doubly_stochastic());
  CHECK_THROWS_AS(frequency_matrix(Election::unlabeled(2, {{0}})), IncompleteElection);
}
