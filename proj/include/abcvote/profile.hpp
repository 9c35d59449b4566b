#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abcvote/candidate_set.hpp"

namespace abcvote {

/// One distinct approval set together with the number of voters casting it.
struct Ballot {
  CandidateSet approvals;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

/// Multiset of approval ballots over candidates 0..m-1.
///
/// A profile with multiplicities is semantically the same as its expansion into
/// unit ballots; every operation in the library gives identical answers on both.
/// Empty approval sets are legal.
class BallotProfile {
 public:
  /// Throws MalformedProfile if m == 0, there are no ballots, some multiplicity
  /// is 0, some index is >= m, or the voter count overflows.
  BallotProfile(std::size_t num_candidates, std::vector<Ballot> ballots);

  std::size_t num_candidates() const noexcept { return num_candidates_; }
  std::uint64_t num_voters() const noexcept { return num_voters_; }
  std::span<const Ballot> ballots() const noexcept { return ballots_; }
  std::size_t num_groups() const noexcept { return ballots_.size(); }

  /// Every ballot repeated `multiplicity` times with multiplicity 1.
  BallotProfile expanded() const;

  friend bool operator==(const BallotProfile&, const BallotProfile&) = default;

 private:
  std::size_t num_candidates_;
  std::vector<Ballot> ballots_;
  std::uint64_t num_voters_ = 0;
};

/// Merges identical approval sets and sorts ballots by their sorted index
/// sequence. n and m are preserved.
BallotProfile normalize_profile(const BallotProfile& profile);

/// k * group_size >= level * n, evaluated in 128-bit integers. This is the
/// integer form of "group_size >= level * n / k" used by every axiom.
inline bool meets_quota(std::uint64_t group_size, std::uint64_t level, std::uint64_t n, std::uint64_t k) {
  return static_cast<unsigned __int128>(k) * group_size >= static_cast<unsigned __int128>(level) * n;
}

/// Throws InvalidArgument unless 1 <= k <= m.
void require_committee_size(const BallotProfile& profile, std::size_t k);

}  // namespace abcvote
