#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "abcvote/corpus.hpp"
#include "abcvote/profile.hpp"

namespace abcvote {

/// Profile document:
///
///   # comment
///   m <candidates>
///   k <committee size>        (optional)
///   <multiplicity>: <index> <index> ...
///
/// Ballots keep their file order, so witness voter groups refer to ballot
/// lines by position. A ballot line with no indices is an empty ballot.
struct ProfileDocument {
  BallotProfile profile;
  std::optional<std::size_t> k;
};

/// Throws ParseError carrying the 1-based line number.
ProfileDocument parse_profile(std::string_view text);
std::string serialize_profile(const BallotProfile& profile, std::optional<std::size_t> k = std::nullopt);

/// Graph document: a header `L <int> R <int>`, then `edge <l> <r>` lines.
BipartiteGraph parse_graph(std::string_view text);

/// Reads a whole file; throws InvalidArgument if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace abcvote
