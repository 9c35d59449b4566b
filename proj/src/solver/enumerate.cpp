#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>

#include "../omp_support.hpp"
#include "abcvote/solver.hpp"
#include "prefix_tasks.hpp"

namespace abcvote {

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (m - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

CommitteeRange::iterator::iterator(std::size_t m, std::size_t k) : m_(m), current_(k), done_(k > m) {
  std::iota(current_.begin(), current_.end(), Candidate{0});
}

CommitteeRange::iterator& CommitteeRange::iterator::operator++() {
  const std::size_t k = current_.size();
  // Rightmost position that can still move up.
  std::size_t i = k;
  while (i > 0 && current_[i - 1] == m_ - k + (i - 1)) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  ++current_[i - 1];
  for (std::size_t j = i; j < k; ++j) current_[j] = current_[j - 1] + 1;
  return *this;
}

CommitteeRange enumerate_committees(std::size_t m, std::size_t k) {
  if (k == 0 || k > m) {
    throw InvalidArgument("cannot enumerate size-" + std::to_string(k) + " committees over " + std::to_string(m) +
                          " candidates");
  }
  return CommitteeRange(m, k);
}

namespace {

struct TaskOutcome {
  std::optional<Committee> committee;
  Rational key;
};

}  // namespace

FilteredSearchResult best_committee_by(std::size_t m, std::size_t k,
                                       const std::function<std::optional<Rational>(const Committee&)>& rank,
                                       const SearchOptions& options, std::optional<std::uint64_t> budget,
                                       bool stop_at_first) {
  if (k == 0 || k > m) throw InvalidArgument("committee size out of range");
  if (budget && *budget == 0) throw InvalidArgument("search budget must be at least 1");

  const bool parallel = options.mode == SearchOptions::Mode::parallel;
  const auto tasks = detail::split_prefixes(m, k, parallel);
  std::vector<TaskOutcome> outcomes(tasks.size());
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr failure;
  std::mutex failure_mu;

  const auto run_task = [&](std::size_t t) {
    if (stop_at_first && t > first_hit.load()) return;
    try {
      std::vector<Candidate> current = tasks[t];
      TaskOutcome& out = outcomes[t];
      auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (exhausted.load(std::memory_order_relaxed)) return false;
        if (current.size() == k) {
          const auto seen = examined.fetch_add(1, std::memory_order_relaxed) + 1;
          if (budget && seen > *budget) {
            exhausted.store(true);
            return false;
          }
          Committee w{std::vector<Candidate>(current)};
          auto key = rank(w);
          if (!key) return true;
          if (!out.committee || *key > out.key) {
            out.committee = std::move(w);
            out.key = std::move(*key);
          }
          return !stop_at_first;
        }
        const std::size_t slots = k - current.size();
        for (std::size_t c = start; c + slots <= m; ++c) {
          current.push_back(static_cast<Candidate>(c));
          const bool go_on = self(self, c + 1);
          current.pop_back();
          if (!go_on) return false;
        }
        return true;
      };
      rec(rec, current.empty() ? 0 : current.back() + 1);
      if (stop_at_first && out.committee) {
        std::size_t prev = first_hit.load();
        while (t < prev && !first_hit.compare_exchange_weak(prev, t)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      exhausted.store(true);
    }
  };

  if (parallel) {
    const int threads = detail::resolve_threads(options.threads);
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) run_task(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  }
  if (failure) std::rethrow_exception(failure);

  FilteredSearchResult result;
  for (auto& o : outcomes) {
    if (!o.committee) continue;
    if (!result.committee || o.key > result.key) {
      result.committee = std::move(o.committee);
      result.key = std::move(o.key);
      if (stop_at_first) break;
    }
  }
  result.examined = examined.load();
  if (exhausted.load()) throw BudgetExhausted(result.committee, result.examined);
  return result;
}

}  // namespace abcvote
