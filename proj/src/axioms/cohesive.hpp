#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "abcvote/profile.hpp"
#include "abcvote/solver.hpp"

namespace abcvote::detail {

struct CohesiveMatch {
  CandidateSet candidates;
  std::vector<std::size_t> groups;
  std::uint64_t size = 0;
};

/// Lexicographically first `level`-subset of the allowed candidates that is
/// approved in full by ballot groups from `active` whose multiplicities sum to
/// the quota (k * size >= level * n). `groups` lists every active group
/// approving the whole subset.
std::optional<CohesiveMatch> find_cohesive_set(const BallotProfile& profile, const std::vector<std::size_t>& active,
                                               const std::vector<bool>& allowed, std::size_t level, std::size_t k,
                                               const SearchOptions& options);

}  // namespace abcvote::detail
