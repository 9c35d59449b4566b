#include "cohesive.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <limits>

#include "../omp_support.hpp"

namespace abcvote::detail {

namespace {

struct Supporters {
  std::vector<std::size_t> groups;
  std::uint64_t size = 0;
};

class SubsetSearch {
 public:
  SubsetSearch(const BallotProfile& profile, const std::vector<Candidate>& eligible,
               const std::vector<Supporters>& support, std::size_t level, std::size_t k)
      : profile_(profile), eligible_(eligible), support_(support), level_(level), k_(k) {}

  /// Lexicographically first qualifying subset whose smallest member is
  /// eligible_[first].
  std::optional<CohesiveMatch> from(std::size_t first) {
    chosen_.assign(1, first);
    return extend(support_[first]);
  }

 private:
  std::optional<CohesiveMatch> extend(const Supporters& current) {
    if (chosen_.size() == level_) {
      CohesiveMatch match;
      std::vector<Candidate> members;
      for (auto idx : chosen_) members.push_back(eligible_[idx]);
      match.candidates = CandidateSet(std::move(members));
      match.groups = current.groups;
      match.size = current.size;
      return match;
    }
    const std::size_t missing = level_ - chosen_.size();
    for (std::size_t next = chosen_.back() + 1; next + missing <= eligible_.size(); ++next) {
      Supporters narrowed;
      const auto& other = support_[next].groups;
      std::set_intersection(current.groups.begin(), current.groups.end(), other.begin(), other.end(),
                            std::back_inserter(narrowed.groups));
      for (auto g : narrowed.groups) narrowed.size += profile_.ballots()[g].multiplicity;
      if (!meets_quota(narrowed.size, level_, profile_.num_voters(), k_)) continue;
      chosen_.push_back(next);
      auto found = extend(narrowed);
      chosen_.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const BallotProfile& profile_;
  const std::vector<Candidate>& eligible_;
  const std::vector<Supporters>& support_;
  std::size_t level_;
  std::size_t k_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<CohesiveMatch> find_cohesive_set(const BallotProfile& profile, const std::vector<std::size_t>& active,
                                               const std::vector<bool>& allowed, std::size_t level, std::size_t k,
                                               const SearchOptions& options) {
  const std::size_t m = profile.num_candidates();
  const std::uint64_t n = profile.num_voters();
  std::vector<Supporters> by_candidate(m);
  for (auto g : active) {
    const Ballot& b = profile.ballots()[g];
    for (Candidate c : b.approvals) {
      if (!allowed[c]) continue;
      by_candidate[c].groups.push_back(g);
      by_candidate[c].size += b.multiplicity;
    }
  }

  // A candidate without quota support on its own cannot be in any qualifying subset.
  std::vector<Candidate> eligible;
  std::vector<Supporters> support;
  for (std::size_t c = 0; c < m; ++c) {
    if (!allowed[c] || !meets_quota(by_candidate[c].size, level, n, k)) continue;
    eligible.push_back(static_cast<Candidate>(c));
    std::sort(by_candidate[c].groups.begin(), by_candidate[c].groups.end());
    support.push_back(std::move(by_candidate[c]));
  }
  if (eligible.size() < level) return std::nullopt;

  const std::size_t branches = eligible.size() - level + 1;
  if (options.mode == SearchOptions::Mode::serial || branches < 2) {
    SubsetSearch search(profile, eligible, support, level, k);
    for (std::size_t first = 0; first < branches; ++first) {
      if (auto found = search.from(first)) return found;
    }
    return std::nullopt;
  }

  // Each branch fixes the smallest member; the lowest successful branch wins,
  // so the answer matches the serial scan.
  std::vector<std::optional<CohesiveMatch>> found(branches);
  std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
  const int threads = resolve_threads(options.threads);
  const auto count = static_cast<std::int64_t>(branches);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto first = static_cast<std::size_t>(i);
    if (first > best_branch.load(std::memory_order_relaxed)) continue;
    SubsetSearch search(profile, eligible, support, level, k);
    found[first] = search.from(first);
    if (found[first]) {
      std::size_t prev = best_branch.load();
      while (first < prev && !best_branch.compare_exchange_weak(prev, first)) {
      }
    }
  }
  const auto winner = best_branch.load();
  if (winner == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return std::move(found[winner]);
}

}  // namespace abcvote::detail
