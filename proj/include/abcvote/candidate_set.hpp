#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace abcvote {

using Candidate = std::uint32_t;

/// Set of candidate indices, stored as a strictly increasing sequence.
///
/// The sorted representation doubles as the canonical order used for profile
/// normalization and for lexicographic committee tie-breaking.
class CandidateSet {
 public:
  CandidateSet() = default;
  CandidateSet(std::initializer_list<Candidate> members) : CandidateSet(std::vector<Candidate>(members)) {}
  /// Sorts and drops duplicates.
  explicit CandidateSet(std::vector<Candidate> members);

  /// {first, first+1, ..., first+count-1}
  static CandidateSet range(Candidate first, std::size_t count);

  std::span<const Candidate> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Candidate c) const { return std::binary_search(members_.begin(), members_.end(), c); }
  /// Largest member + 1, or 0 for the empty set.
  std::size_t span_end() const noexcept { return members_.empty() ? 0 : members_.back() + 1; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
  friend auto operator<=>(const CandidateSet& a, const CandidateSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Candidate> members_;
};

std::size_t intersection_size(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_intersection(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_union(const CandidateSet& a, const CandidateSet& b);
bool is_subset(const CandidateSet& inner, const CandidateSet& outer);

/// |a \ b| + |b \ a|. Symmetric; zero iff the sets are equal.
std::size_t hamming_distance(const CandidateSet& a, const CandidateSet& b);

/// "0,3,7" (empty string for the empty set).
std::string join_indices(const CandidateSet& s, char sep = ',');

}  // namespace abcvote
