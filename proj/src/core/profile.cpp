#include "abcvote/profile.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "abcvote/error.hpp"

namespace abcvote {

BallotProfile::BallotProfile(std::size_t num_candidates, std::vector<Ballot> ballots)
    : num_candidates_(num_candidates), ballots_(std::move(ballots)) {
  if (num_candidates_ == 0) throw MalformedProfile("profile needs at least one candidate");
  if (ballots_.empty()) throw MalformedProfile("profile needs at least one voter");
  for (const Ballot& b : ballots_) {
    if (b.multiplicity == 0) throw MalformedProfile("ballot multiplicity must be positive");
    if (b.approvals.span_end() > num_candidates_) {
      throw MalformedProfile("candidate index " + std::to_string(b.approvals.span_end() - 1) +
                             " out of range for m=" + std::to_string(num_candidates_));
    }
    if (num_voters_ > std::numeric_limits<std::uint64_t>::max() - b.multiplicity) {
      throw MalformedProfile("voter count overflows 64 bits");
    }
    num_voters_ += b.multiplicity;
  }
}

BallotProfile BallotProfile::expanded() const {
  std::vector<Ballot> unit;
  unit.reserve(num_voters_);
  for (const Ballot& b : ballots_) {
    for (std::uint64_t r = 0; r < b.multiplicity; ++r) unit.push_back({b.approvals, 1});
  }
  return BallotProfile(num_candidates_, std::move(unit));
}

BallotProfile normalize_profile(const BallotProfile& profile) {
  std::map<CandidateSet, std::uint64_t> merged;
  for (const Ballot& b : profile.ballots()) merged[b.approvals] += b.multiplicity;
  std::vector<Ballot> out;
  out.reserve(merged.size());
  for (auto& [approvals, mult] : merged) out.push_back({approvals, mult});
  return BallotProfile(profile.num_candidates(), std::move(out));
}

void require_committee_size(const BallotProfile& profile, std::size_t k) {
  if (k == 0 || k > profile.num_candidates()) {
    throw InvalidArgument("committee size k=" + std::to_string(k) + " must be in [1, m=" +
                          std::to_string(profile.num_candidates()) + "]");
  }
}

}  // namespace abcvote
