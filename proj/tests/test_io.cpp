#include <doctest.h>

#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"
#include "abcvote/io.hpp"

using namespace abcvote;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_profile(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("profile documents round-trip") {
  const std::string text = "m 4\nk 2\n3: 0 2\n1:\n2: 3\n";
  const auto doc = parse_profile(text);
  CHECK(doc.k == 2);
  CHECK(doc.profile.num_voters() == 6);
  CHECK(doc.profile.ballots()[1].approvals.empty());
  CHECK(serialize_profile(doc.profile, doc.k) == text);
  CHECK(parse_profile(serialize_profile(doc.profile)).k == std::nullopt);
}

TEST_CASE("comments, blank lines and ballot order") {
  const auto doc = parse_profile("# header\n\nm 3\n  # indented\n1: 2 1\n1: 0\n");
  CHECK(doc.profile.ballots()[0].approvals == CandidateSet{1, 2});
  CHECK(doc.profile.ballots()[1].approvals == CandidateSet{0});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("1: 0\nm 2\n") == 1);
  CHECK(error_line("m 2\n1: 2\n") == 2);
  CHECK(error_line("m 2\n1: 0 0\n") == 2);
  CHECK(error_line("m 2\n0: 1\n") == 2);
  CHECK(error_line("m 2\nm 3\n1: 0\n") == 2);
  CHECK(error_line("m 2\nk 1\nk 1\n1: 0\n") == 3);
  CHECK(error_line("m 2\n\n1 0\n") == 3);
  CHECK(error_line("m x\n") == 1);
  CHECK_THROWS_AS(parse_profile(""), ParseError);
  CHECK_THROWS_AS(parse_profile("m 3\n"), ParseError);
}

TEST_CASE("graph documents") {
  const auto g = parse_graph("# K2,2 minus an edge\nL 2 R 2\nedge 0 0\nedge 0 1\nedge 1 1\n");
  CHECK(g.left_size() == 2);
  CHECK(g.has_edge(1, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(g.left_neighbors(1) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(parse_graph("L 2 R 2\nedge 0 0\nedge 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("L 2 R 2\nedge 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("edge 0 0\n"), ParseError);
}

TEST_CASE("read_file reports missing files") { CHECK_THROWS_AS(read_file("/nonexistent/profile.txt"), InvalidArgument); }
