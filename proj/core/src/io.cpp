#include "electra/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace electra {

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line), detail_(what) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool to_int(std::string_view s, long long& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

struct Line {
  int number;
  std::string_view text;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : options_(options) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      const std::string_view raw = trim(text.substr(start, end - start));
      if (!raw.empty()) lines_.push_back({number, raw});
      start = end + 1;
    }
  }

  Election run() {
    std::size_t at = 0;
    while (at < lines_.size() && lines_[at].text.front() == '#') ++at;
    if (at == lines_.size()) throw ParseError(ParseErrorKind::malformed_header, last_line(), "missing candidate count");

    long long m = 0;
    if (!to_int(lines_[at].text, m) || m < 1) {
      throw ParseError(ParseErrorKind::malformed_header, lines_[at].number, "expected a positive candidate count");
    }
    ++at;

    std::vector<std::string> labels(static_cast<std::size_t>(m));
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (long long k = 0; k < m; ++k, ++at) {
      if (at == lines_.size()) throw ParseError(ParseErrorKind::malformed_header, last_line(), "missing candidate lines");
      const Line& line = lines_[at];
      const std::size_t comma = line.text.find(',');
      long long index = 0;
      if (comma == std::string_view::npos || !to_int(line.text.substr(0, comma), index)) {
        throw ParseError(ParseErrorKind::malformed_header, line.number, "expected '<index>,<label>'");
      }
      if (index < 1 || index > m) {
        throw ParseError(ParseErrorKind::out_of_range_index, line.number, "candidate index out of range");
      }
      if (seen[static_cast<std::size_t>(index - 1)]) {
        throw ParseError(ParseErrorKind::duplicate_candidate_index, line.number, "duplicate candidate index");
      }
      seen[static_cast<std::size_t>(index - 1)] = 1;
      labels[static_cast<std::size_t>(index - 1)] = std::string(trim(line.text.substr(comma + 1)));
    }

    if (at == lines_.size()) throw ParseError(ParseErrorKind::malformed_header, last_line(), "missing voter count line");
    const Line& counts_line = lines_[at++];
    const auto fields = split(counts_line.text, ',');
    long long n = 0;
    long long total = 0;
    long long distinct = 0;
    if (fields.size() != 3 || !to_int(fields[0], n) || !to_int(fields[1], total) || !to_int(fields[2], distinct) ||
        n < 0 || total < 0 || distinct < 0) {
      throw ParseError(ParseErrorKind::malformed_header, counts_line.number,
                       "expected '<voters>,<sum of multiplicities>,<vote lines>'");
    }

    std::vector<Vote> votes;
    long long sum = 0;
    long long vote_lines = 0;
    for (; at < lines_.size(); ++at) {
      const Line& line = lines_[at];
      const std::size_t colon = line.text.find(':');
      long long multiplicity = 0;
      if (colon == std::string_view::npos || !to_int(line.text.substr(0, colon), multiplicity) || multiplicity < 1) {
        throw ParseError(ParseErrorKind::malformed_vote, line.number, "expected '<multiplicity>: <c1>,<c2>,...'");
      }
      Vote v = parse_ranking(line, line.text.substr(colon + 1), static_cast<int>(m));
      sum += multiplicity;
      ++vote_lines;
      for (long long k = 0; k < multiplicity; ++k) votes.push_back(v);
    }

    if (sum != total || n != total) {
      throw ParseError(ParseErrorKind::count_mismatch, counts_line.number,
                       "count mismatch: header says " + std::to_string(n) + " voters / " + std::to_string(total) +
                           " multiplicity sum, body has " + std::to_string(sum));
    }
    if (vote_lines != distinct) {
      throw ParseError(ParseErrorKind::count_mismatch, counts_line.number,
                       "count mismatch: header says " + std::to_string(distinct) + " vote lines, body has " +
                           std::to_string(vote_lines));
    }
    if (votes.empty()) throw ParseError(ParseErrorKind::count_mismatch, counts_line.number, "election has no votes");
    return Election(std::move(labels), std::move(votes));
  }

 private:
  Vote parse_ranking(const Line& line, std::string_view body, int m) {
    Vote v;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    auto index_of = [&](std::string_view token) {
      long long c = 0;
      if (!to_int(token, c)) throw ParseError(ParseErrorKind::malformed_vote, line.number, "malformed candidate index");
      return c;
    };
    auto add = [&](long long c) {
      if (c < 1 || c > m) throw ParseError(ParseErrorKind::out_of_range_index, line.number, "candidate index out of range");
      if (used[static_cast<std::size_t>(c - 1)]) {
        throw ParseError(ParseErrorKind::duplicate_candidate_in_vote, line.number, "duplicate candidate in vote");
      }
      used[static_cast<std::size_t>(c - 1)] = 1;
      v.push_back(static_cast<Candidate>(c - 1));
    };

    body = trim(body);
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == '{') {
        if (!options_.break_ties) throw ParseError(ParseErrorKind::tied_ballot, line.number, "tied ballot");
        const std::size_t close = body.find('}', i);
        if (close == std::string_view::npos) throw ParseError(ParseErrorKind::malformed_vote, line.number, "unclosed tie group");
        std::vector<long long> group;
        for (std::string_view token : split(body.substr(i + 1, close - i - 1), ',')) group.push_back(index_of(token));
        std::sort(group.begin(), group.end());
        for (long long c : group) add(c);
        i = close + 1;
      } else {
        std::size_t end = body.find(',', i);
        if (end == std::string_view::npos) end = body.size();
        add(index_of(body.substr(i, end - i)));
        i = end;
      }
      while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
      if (i < body.size()) {
        if (body[i] != ',') throw ParseError(ParseErrorKind::malformed_vote, line.number, "expected ',' between candidates");
        ++i;
        while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
        if (i == body.size()) throw ParseError(ParseErrorKind::malformed_vote, line.number, "trailing ','");
      }
    }
    if (v.empty()) throw ParseError(ParseErrorKind::malformed_vote, line.number, "empty vote");
    return v;
  }

  int last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  ParseOptions options_;
  std::vector<Line> lines_;
};

}  // namespace

Election parse_election(std::string_view text, const ParseOptions& options) { return Parser(text, options).run(); }

std::string write_election(const Election& e) {
  std::ostringstream out;
  out << e.m() << '\n';
  for (Candidate c = 0; c < e.m(); ++c) {
    const std::string& label = e.label(c);
    out << (c + 1) << ',' << (label.empty() ? "cand_" + std::to_string(c + 1) : label) << '\n';
  }
  std::vector<std::pair<int, const Vote*>> runs;
  for (const Vote& v : e.votes()) {
    if (!runs.empty() && *runs.back().second == v) {
      ++runs.back().first;
    } else {
      runs.emplace_back(1, &v);
    }
  }
  out << e.n() << ',' << e.n() << ',' << runs.size() << '\n';
  for (const auto& [count, vote] : runs) {
    out << count << ':' << ' ';
    for (std::size_t p = 0; p < vote->size(); ++p) {
      if (p != 0) out << ',';
      out << ((*vote)[p] + 1);
    }
    out << '\n';
  }
  return out.str();
}

Election read_election_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_election(buffer.str(), options);
}

void write_election_file(const std::string& path, const Election& e) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << write_election(e);
  if (!out) throw Error("failed writing " + path);
}

}  // namespace electra
