#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcvote/committee.hpp"
#include "abcvote/profile.hpp"
#include "abcvote/solver.hpp"

namespace abcvote {

enum class AxiomKind { jr, ell_jr, ejr, sjr, unanimity };

/// Evidence that a committee violates an axiom: a group of voters (as indices
/// into profile.ballots(), every copy of each listed ballot included) who all
/// approve `candidates`, is large enough (k * group_size >= level * n), and is
/// under-represented in the sense of the violated axiom.
struct Witness {
  std::size_t level = 1;
  CandidateSet candidates;
  std::vector<std::size_t> voter_groups;
  std::uint64_t group_size = 0;
};

struct AxiomReport {
  AxiomKind axiom = AxiomKind::jr;
  /// Level checked by ell-JR; 1 for JR, SJR and unanimity; k for EJR.
  std::size_t level = 1;
  bool passed = true;
  std::optional<Witness> witness;
};

/// "jr", "ell-jr:2", "ejr", "sjr", "unanimity".
std::string axiom_label(const AxiomReport& report);

/// Justified representation, in O(sum of ballot sizes): for each candidate c,
/// s(c) counts voters approving c with no approved member in W; W fails iff
/// k * s(c) >= n for some c. The witness uses the lowest such c and all of
/// its unrepresented approvers.
AxiomReport check_jr(const BallotProfile& profile, std::size_t k, const Committee& committee);

/// ell-justified representation. Only voters with fewer than `level` approved
/// members can take part in a violation; the check enumerates level-subsets
/// of candidates with enough support among them, in lexicographic order, and
/// reports the first subset whose common approvers reach the quota. Replacing
/// any violating group by all restricted voters approving the same subset
/// keeps it violating, so candidate-side enumeration is complete.
/// Exponential in `level` in the worst case.
AxiomReport check_ell_jr(const BallotProfile& profile, std::size_t k, const Committee& committee, std::size_t level,
                         const SearchOptions& options = {});

/// ell-JR for every level 1..k; reports the first violated level. Checking EJR
/// is coNP-complete, so this is exponential in the worst case.
AxiomReport check_ejr(const BallotProfile& profile, std::size_t k, const Committee& committee,
                      const SearchOptions& options = {});

/// Strong justified representation in polynomial time.
///
/// For a candidate c outside W let N_c be every voter approving c. W fails iff
/// some such c has k * |N_c| >= n while the common approval set of N_c misses
/// W. This is exact: a violating group N* with common candidate c is a subset
/// of N_c, so N_c is at least as large, and intersections only shrink as a
/// group grows, so the common set of N_c is inside that of N* and misses W too.
/// Candidates inside W never qualify because their approvers share c itself.
AxiomReport check_sjr(const BallotProfile& profile, std::size_t k, const Committee& committee);

/// Passes iff the voters share no candidate or W contains a shared one.
AxiomReport check_unanimity(const BallotProfile& profile, std::size_t k, const Committee& committee);

/// Greedy approval voting: repeatedly take the candidate with the most
/// approvals among still-unrepresented voters (lowest index on ties), then
/// fill with the lowest-index unchosen candidates. Always provides JR.
Committee find_jr_committee(const BallotProfile& profile, std::size_t k);

/// The level-wise greedy: while |W| <= k - level, add the lexicographically
/// first level-set jointly approved by a quota of remaining voters (it may
/// overlap W),
/// then drop voters holding at least `level` members of W; finally fill with
/// lowest-index candidates. Always provides ell-JR at `level`.
Committee find_ell_jr_committee(const BallotProfile& profile, std::size_t k, std::size_t level,
                                const SearchOptions& options = {});

/// Lexicographically first size-k committee providing SJR, or nullopt when no
/// committee does. Enumerates committees; the budget counts committees.
std::optional<Committee> exists_sjr_committee(const BallotProfile& profile, std::size_t k,
                                              const SearchOptions& options = {},
                                              std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace abcvote
