#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "abcvote/candidate_set.hpp"

namespace abcvote {

/// A winning set. Members are distinct and kept sorted, so the default ordering
/// is the lexicographic order of sorted index sequences.
class Committee {
 public:
  Committee() = default;
  /// Throws InvalidArgument on duplicate members.
  explicit Committee(std::vector<Candidate> members);
  Committee(std::initializer_list<Candidate> members) : Committee(std::vector<Candidate>(members)) {}
  explicit Committee(CandidateSet members) : members_(std::move(members)) {}

  std::size_t k() const noexcept { return members_.size(); }
  std::span<const Candidate> members() const noexcept { return members_.members(); }
  const CandidateSet& as_set() const noexcept { return members_; }
  bool contains(Candidate c) const { return members_.contains(c); }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Throws InvalidArgument unless every member is < m.
  void validate(std::size_t num_candidates) const;

  std::string to_string() const { return join_indices(members_); }

  friend bool operator==(const Committee&, const Committee&) = default;
  friend auto operator<=>(const Committee& a, const Committee& b) { return a.members_ <=> b.members_; }

 private:
  CandidateSet members_;
};

/// Committee-level tie-breaking for score-based rules.
enum class TieBreak {
  lexicographic,
  /// Restrict co-optimal committees to those providing JR, then lexicographic;
  /// falls back to all co-optima when none provides JR.
  prefer_jr,
};

}  // namespace abcvote
