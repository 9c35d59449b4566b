#include "abcvote/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "abcvote/error.hpp"

namespace abcvote {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

std::uint64_t number(std::string_view word, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

// Calls fn(line_number, content) for every non-blank, non-comment line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line;
    const auto content = trim(raw);
    if (!content.empty() && content.front() != '#') fn(line, content);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace

ProfileDocument parse_profile(std::string_view text) {
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::vector<Ballot> ballots;
  std::size_t last_line = 0;

  for_each_line(text, [&](std::size_t line, std::string_view content) {
    last_line = line;
    const auto colon = content.find(':');
    if (colon != std::string_view::npos) {
      if (!m) throw ParseError(line, "ballot before the 'm' header");
      const auto mult = number(trim(content.substr(0, colon)), line, "a multiplicity");
      if (mult == 0) throw ParseError(line, "multiplicity must be positive");
      std::vector<Candidate> approvals;
      for (auto word : split_words(content.substr(colon + 1))) {
        const auto c = number(word, line, "a candidate index");
        if (c >= *m) {
          throw ParseError(line, "candidate index " + std::to_string(c) + " out of range (m=" + std::to_string(*m) + ")");
        }
        approvals.push_back(static_cast<Candidate>(c));
      }
      const CandidateSet set(approvals);
      if (set.size() != approvals.size()) throw ParseError(line, "duplicate candidate index in ballot");
      ballots.push_back({set, mult});
      return;
    }
    const auto words = split_words(content);
    if (words.size() == 2 && words[0] == "m") {
      if (m) throw ParseError(line, "repeated 'm' header");
      m = number(words[1], line, "a candidate count");
      if (*m == 0) throw ParseError(line, "m must be positive");
      return;
    }
    if (words.size() == 2 && words[0] == "k") {
      if (k) throw ParseError(line, "repeated 'k' header");
      k = number(words[1], line, "a committee size");
      return;
    }
    throw ParseError(line, "unrecognized line '" + std::string(content) + "'");
  });

  if (!m) throw ParseError(last_line, "missing 'm' header");
  if (ballots.empty()) throw ParseError(last_line, "profile has no ballots");
  try {
    return ProfileDocument{BallotProfile(*m, std::move(ballots)), k};
  } catch (const MalformedProfile& e) {
    throw ParseError(last_line, e.what());
  }
}

std::string serialize_profile(const BallotProfile& profile, std::optional<std::size_t> k) {
  std::ostringstream out;
  out << "m " << profile.num_candidates() << '\n';
  if (k) out << "k " << *k << '\n';
  for (const Ballot& b : profile.ballots()) {
    out << b.multiplicity << ':';
    for (Candidate c : b.approvals) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

BipartiteGraph parse_graph(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> sides;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, std::string_view content) {
    last_line = line;
    const auto words = split_words(content);
    if (words.size() == 4 && words[0] == "L" && words[2] == "R") {
      if (sides) throw ParseError(line, "repeated graph header");
      sides = {number(words[1], line, "a left size"), number(words[3], line, "a right size")};
      if (sides->first == 0 || sides->second == 0) throw ParseError(line, "graph sides must be positive");
      return;
    }
    if (words.size() == 3 && words[0] == "edge") {
      if (!sides) throw ParseError(line, "edge before the 'L .. R ..' header");
      const auto l = number(words[1], line, "a left vertex");
      const auto r = number(words[2], line, "a right vertex");
      if (l >= sides->first || r >= sides->second) throw ParseError(line, "edge endpoint out of range");
      if (!seen.emplace(l, r).second) throw ParseError(line, "duplicate edge");
      edges.emplace_back(l, r);
      return;
    }
    throw ParseError(line, "unrecognized line '" + std::string(content) + "'");
  });
  if (!sides) throw ParseError(last_line, "missing 'L .. R ..' header");
  return BipartiteGraph(sides->first, sides->second, std::move(edges));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace abcvote
