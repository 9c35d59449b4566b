#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

#include "abcvote/committee.hpp"
#include "abcvote/error.hpp"
#include "abcvote/profile.hpp"
#include "abcvote/rational.hpp"
#include "abcvote/scoring.hpp"

namespace abcvote {

/// Raised when a search hits its budget. Carries the best committee seen so
/// far, when one was completed.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::optional<Committee> best, std::uint64_t nodes_explored)
      : Error("search budget exhausted after " + std::to_string(nodes_explored) + " nodes"),
        best_(std::move(best)),
        nodes_(nodes_explored) {}

  const std::optional<Committee>& best_so_far() const noexcept { return best_; }
  std::uint64_t nodes_explored() const noexcept { return nodes_; }

 private:
  std::optional<Committee> best_;
  std::uint64_t nodes_;
};

/// How exhaustive searches run. Results never depend on these settings.
struct SearchOptions {
  enum class Mode { serial, parallel };

  Mode mode = Mode::parallel;
  /// Worker count for parallel mode; 0 means the OpenMP default.
  int threads = 0;
  /// Branch-and-bound pruning. Off means plain exhaustive enumeration.
  bool pruning = true;
};

struct OptimizationRequest {
  std::size_t k = 1;
  ScoringObjective objective = objective::Av{};
  TieBreak tiebreak = TieBreak::lexicographic;
  /// Node limit; unset means unlimited.
  std::optional<std::uint64_t> budget;
  SearchOptions search;
};

struct OptimizationResult {
  Committee committee;
  Score score;
  /// Number of co-optimal committees; only known when all co-optima were
  /// collected (prefer-JR tie-breaking).
  std::optional<std::uint64_t> co_optimal_count;
  std::uint64_t nodes_explored = 0;
};

/// Exact optimum of `request.objective` over all size-k committees, maximized
/// or minimized per direction_of(). Ties go to the lexicographically smallest
/// committee, after the JR filter in prefer-JR mode.
///
/// Throws InvalidArgument for k outside [1, m] or a zero budget, and
/// BudgetExhausted when the node budget runs out.
OptimizationResult optimize_committee(const BallotProfile& profile, const OptimizationRequest& request);

/// C(m, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

/// All size-k subsets of {0..m-1} in lexicographic order of their sorted index
/// sequences.
class CommitteeRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Committee;
    using difference_type = std::ptrdiff_t;
    using pointer = const Committee*;
    using reference = const Committee&;

    iterator() = default;
    iterator(std::size_t m, std::size_t k);

    Committee operator*() const { return Committee(std::vector<Candidate>(current_)); }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    /// Only end-ness is compared.
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    std::size_t m_ = 0;
    std::vector<Candidate> current_;
    bool done_ = true;
  };

  CommitteeRange(std::size_t m, std::size_t k) : m_(m), k_(k) {}
  iterator begin() const { return iterator(m_, k_); }
  iterator end() const { return iterator(); }

 private:
  std::size_t m_;
  std::size_t k_;
};

/// Throws InvalidArgument unless 0 < k <= m.
CommitteeRange enumerate_committees(std::size_t m, std::size_t k);

/// Outcome of a filtered enumeration.
struct FilteredSearchResult {
  std::optional<Committee> committee;
  Rational key;
  std::uint64_t examined = 0;
};

/// Ranks every size-k committee with `rank` (nullopt = rejected) and returns the
/// highest-ranked accepted one, lexicographically smallest among equals. With
/// `stop_at_first`, returns the lexicographically first accepted committee.
/// `rank` must be safe to call concurrently. The budget counts committees.
FilteredSearchResult best_committee_by(std::size_t m, std::size_t k,
                                       const std::function<std::optional<Rational>(const Committee&)>& rank,
                                       const SearchOptions& options, std::optional<std::uint64_t> budget,
                                       bool stop_at_first = false);

}  // namespace abcvote
