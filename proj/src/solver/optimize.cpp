#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>

#include "../omp_support.hpp"
#include "abcvote/axioms.hpp"
#include "abcvote/solver.hpp"
#include "prefix_tasks.hpp"

namespace abcvote {

namespace {

using detail::completions_exceed;

// ---------------------------------------------------------------------------
// Objective models. A model owns the per-search mutable state (how many
// members of the partial committee each ballot group approves) and answers
// value/bound queries against it. Tables are shared and immutable.

/// Additive objectives: score(W) = sum_g gain[g][0] + ... + gain[g][p_g - 1]
/// with p_g = |W ∩ A_g| and gain[g][.] non-increasing. Thiele rules use
/// mult * w_{p+1}, SAV uses mult / |A_g|; both are scaled by a common
/// denominator so the search runs on integers.
template <class V>
struct AdditiveTables {
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<std::vector<V>> gain;
  std::vector<std::vector<std::uint32_t>> groups_of;
};

template <class V>
class AdditiveModel {
 public:
  using Value = V;
  static constexpr Direction direction = Direction::maximize;

  explicit AdditiveModel(const AdditiveTables<V>& tables)
      : t_(&tables), count_(tables.gain.size(), 0), scratch_(tables.m), value_(0) {}

  void apply(Candidate c) {
    for (auto g : t_->groups_of[c]) value_ += t_->gain[g][count_[g]++];
  }
  void undo(Candidate c) {
    for (auto g : t_->groups_of[c]) value_ -= t_->gain[g][--count_[g]];
  }

  V marginal(Candidate c) const {
    V gain(0);
    for (auto g : t_->groups_of[c]) gain += t_->gain[g][count_[g]];
    return gain;
  }

  const V& leaf_value() const { return value_; }

  /// Current value plus the `slots` largest marginal gains among candidates
  /// in [start, m). Admissible because gains only shrink as W grows.
  V bound(std::size_t start, std::size_t slots) {
    std::size_t n = 0;
    for (std::size_t c = start; c < t_->m; ++c) scratch_[n++] = marginal(static_cast<Candidate>(c));
    const auto first = scratch_.begin();
    if (slots < n) std::nth_element(first, first + static_cast<std::ptrdiff_t>(slots), first + static_cast<std::ptrdiff_t>(n), std::greater<V>());
    V total = value_;
    for (std::size_t i = 0; i < std::min(slots, n); ++i) total += scratch_[i];
    return total;
  }

 private:
  const AdditiveTables<V>* t_;
  std::vector<std::uint32_t> count_;
  std::vector<V> scratch_;
  V value_;
};

/// MAV: value(W) = max_g (|W| + |A_g| - 2 |W ∩ A_g|), minimized at |W| = k.
struct MavTables {
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<std::vector<Candidate>> members;
  std::vector<std::vector<std::uint32_t>> groups_of;
};

class MavModel {
 public:
  using Value = std::int64_t;
  static constexpr Direction direction = Direction::minimize;

  explicit MavModel(const MavTables& tables) : t_(&tables), count_(tables.members.size(), 0) {}

  void apply(Candidate c) {
    for (auto g : t_->groups_of[c]) ++count_[g];
  }
  void undo(Candidate c) {
    for (auto g : t_->groups_of[c]) --count_[g];
  }

  Value leaf_value() const {
    Value worst = 0;
    const auto k = static_cast<Value>(t_->k);
    for (std::size_t g = 0; g < count_.size(); ++g) {
      worst = std::max(worst, k + static_cast<Value>(t_->members[g].size()) - 2 * static_cast<Value>(count_[g]));
    }
    return worst;
  }

  /// Each ballot can gain at most min(slots, |A_g ∩ [start, m)|) more hits.
  Value bound(std::size_t start, std::size_t slots) const {
    Value worst = 0;
    const auto k = static_cast<Value>(t_->k);
    for (std::size_t g = 0; g < count_.size(); ++g) {
      const auto& mem = t_->members[g];
      const auto eligible = static_cast<std::size_t>(
          mem.end() - std::lower_bound(mem.begin(), mem.end(), static_cast<Candidate>(start)));
      const auto reach = static_cast<Value>(count_[g] + std::min(slots, eligible));
      worst = std::max(worst, k + static_cast<Value>(mem.size()) - 2 * reach);
    }
    return worst;
  }

 private:
  const MavTables* t_;
  std::vector<std::uint32_t> count_;
};

// ---------------------------------------------------------------------------
// Branch and bound over committees in lexicographic DFS order.

template <class V>
struct Incumbent {
  V value{};
  std::vector<Candidate> key;
  std::uint64_t version = 0;
};

template <class V>
class SharedState {
 public:
  SharedState(V value, std::vector<Candidate> key, Direction dir) : dir_(dir) {
    best_.value = std::move(value);
    best_.key = std::move(key);
  }

  /// Copies the incumbent into `snap` if it changed since `snap` was taken.
  void refresh(Incumbent<V>& snap) {
    if (version_.load(std::memory_order_acquire) == snap.version) return;
    std::lock_guard lock(mu_);
    snap = best_;
  }

  void offer(const V& value, const std::vector<Candidate>& key) {
    std::lock_guard lock(mu_);
    if (better(value, key, best_.value, best_.key)) {
      best_.value = value;
      best_.key = key;
      best_.version = version_.fetch_add(1, std::memory_order_acq_rel) + 1;
    }
  }

  bool better(const V& a, const std::vector<Candidate>& ka, const V& b, const std::vector<Candidate>& kb) const {
    if (a != b) return dir_ == Direction::maximize ? a > b : a < b;
    return ka < kb;
  }
  bool worse(const V& a, const V& b) const { return dir_ == Direction::maximize ? a < b : a > b; }

  Incumbent<V> snapshot() {
    std::lock_guard lock(mu_);
    return best_;
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

 private:
  Direction dir_;
  std::mutex mu_;
  Incumbent<V> best_;
  std::atomic<std::uint64_t> version_{0};
};

struct SearchConfig {
  std::size_t m = 0;
  std::size_t k = 0;
  bool pruning = true;
  bool collect_all = false;
  std::optional<std::uint64_t> budget;
};

template <class Model>
class Worker {
 public:
  using V = typename Model::Value;

  Worker(Model model, SharedState<V>& shared, const SearchConfig& cfg)
      : model_(std::move(model)), shared_(shared), cfg_(cfg) {
    snap_.version = ~std::uint64_t{0};
  }

  void run(const std::vector<Candidate>& prefix) {
    for (Candidate c : prefix) {
      model_.apply(c);
      prefix_.push_back(c);
    }
    dfs(prefix.empty() ? 0 : prefix.back() + 1);
    flush();
  }

  const std::optional<V>& local_best() const { return local_best_; }
  std::vector<std::vector<Candidate>>& local_ties() { return ties_; }

 private:
  static constexpr std::uint64_t kFlushEvery = 4096;

  void flush() {
    if (unflushed_ == 0) return;
    const auto total = shared_.nodes.fetch_add(unflushed_, std::memory_order_relaxed) + unflushed_;
    unflushed_ = 0;
    if (cfg_.budget && total > *cfg_.budget) shared_.stop.store(true, std::memory_order_relaxed);
  }

  bool count_node() {
    ++unflushed_;
    if (cfg_.budget || unflushed_ >= kFlushEvery) flush();
    return !shared_.stop.load(std::memory_order_relaxed);
  }

  void dfs(std::size_t start) {
    if (!count_node()) return;
    const std::size_t depth = prefix_.size();
    if (depth == cfg_.k) {
      leaf();
      return;
    }
    const std::size_t slots = cfg_.k - depth;
    if (cfg_.pruning) {
      shared_.refresh(snap_);
      const V b = model_.bound(start, slots);
      if (shared_.worse(b, snap_.value)) return;
      if (!cfg_.collect_all && b == snap_.value && completions_exceed(prefix_, snap_.key)) return;
    }
    for (std::size_t c = start; c + slots <= cfg_.m; ++c) {
      const auto cand = static_cast<Candidate>(c);
      model_.apply(cand);
      prefix_.push_back(cand);
      dfs(c + 1);
      prefix_.pop_back();
      model_.undo(cand);
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  void leaf() {
    const V value = model_.leaf_value();
    if (cfg_.collect_all) {
      if (!local_best_ || shared_.worse(*local_best_, value)) {
        local_best_ = value;
        ties_.clear();
      }
      if (value == *local_best_) ties_.push_back(prefix_);
    }
    shared_.refresh(snap_);
    if (shared_.better(value, prefix_, snap_.value, snap_.key)) shared_.offer(value, prefix_);
  }

  Model model_;
  SharedState<V>& shared_;
  const SearchConfig& cfg_;
  Incumbent<V> snap_;
  std::vector<Candidate> prefix_;
  std::uint64_t unflushed_ = 0;
  std::optional<V> local_best_;
  std::vector<std::vector<Candidate>> ties_;
};

template <class V>
struct RawResult {
  V value{};
  std::vector<Candidate> key;
  std::vector<std::vector<Candidate>> co_optima;  // filled in collect mode
  std::uint64_t nodes = 0;
};

template <class Model, class Tables>
RawResult<typename Model::Value> run_search(const Tables& tables, const SearchConfig& cfg, const SearchOptions& options,
                                            typename Model::Value seed_value, std::vector<Candidate> seed_key) {
  using V = typename Model::Value;
  SharedState<V> shared(seed_value, seed_key, Model::direction);

  const bool parallel = options.mode == SearchOptions::Mode::parallel;
  const auto tasks = detail::split_prefixes(cfg.m, cfg.k, parallel);
  std::vector<std::optional<V>> task_best(tasks.size());
  std::vector<std::vector<std::vector<Candidate>>> task_ties(tasks.size());
  std::exception_ptr failure;
  std::mutex failure_mu;

  const auto run_task = [&](std::size_t i) {
    try {
      Worker<Model> worker(Model(tables), shared, cfg);
      worker.run(tasks[i]);
      task_best[i] = worker.local_best();
      task_ties[i] = std::move(worker.local_ties());
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      shared.stop.store(true);
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

  RawResult<V> out;
  out.nodes = shared.nodes.load();
  auto best = shared.snapshot();
  if (shared.stop.load()) {
    throw BudgetExhausted(Committee(std::vector<Candidate>(best.key)), out.nodes);
  }
  out.value = best.value;
  out.key = std::move(best.key);
  if (cfg.collect_all) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (task_best[i] && *task_best[i] == out.value) {
        for (auto& t : task_ties[i]) out.co_optima.push_back(std::move(t));
      }
    }
    std::sort(out.co_optima.begin(), out.co_optima.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table construction.

std::vector<std::vector<std::uint32_t>> incidence(const BallotProfile& profile) {
  std::vector<std::vector<std::uint32_t>> groups_of(profile.num_candidates());
  const auto ballots = profile.ballots();
  for (std::size_t g = 0; g < ballots.size(); ++g) {
    for (Candidate c : ballots[g].approvals) groups_of[c].push_back(static_cast<std::uint32_t>(g));
  }
  return groups_of;
}

/// Exact per-ballot increments inc[g][p] (p = 0..|A_g|-1) before scaling.
std::vector<std::vector<Rational>> increments(const BallotProfile& profile, const ScoringObjective& objective) {
  std::vector<std::vector<Rational>> inc;
  for (const Ballot& b : profile.ballots()) {
    const std::size_t size = b.approvals.size();
    std::vector<Rational> row(size);
    for (std::size_t p = 0; p < size; ++p) {
      if (std::holds_alternative<objective::Av>(objective)) {
        row[p] = 1;
      } else if (std::holds_alternative<objective::Sav>(objective)) {
        row[p] = Rational(1, static_cast<unsigned long>(size));
      } else {
        row[p] = std::get<objective::WeightedPav>(objective).weights.weight(p + 1);
      }
      row[p] *= to_big(b.multiplicity);
    }
    inc.push_back(std::move(row));
  }
  return inc;
}

struct ScaledGains {
  BigInt scale = 1;
  std::vector<std::vector<BigInt>> gain;
  BigInt magnitude = 0;  // bounds every value or bound the search can form
};

ScaledGains scale_to_integers(const std::vector<std::vector<Rational>>& inc) {
  ScaledGains out;
  for (const auto& row : inc) {
    for (const auto& q : row) out.scale = lcm(out.scale, BigInt(q.get_den()));
  }
  for (const auto& row : inc) {
    std::vector<BigInt> scaled;
    for (const auto& q : row) {
      BigInt v = q.get_num() * (out.scale / q.get_den());
      out.magnitude += v;
      scaled.push_back(std::move(v));
    }
    if (!scaled.empty()) out.magnitude += scaled.front() * to_big(scaled.size());
    out.gain.push_back(std::move(scaled));
  }
  return out;
}

template <class V>
V convert(const BigInt& v);
template <>
std::int64_t convert<std::int64_t>(const BigInt& v) {
  return v.get_si();
}
template <>
BigInt convert<BigInt>(const BigInt& v) {
  return v;
}

template <class V>
AdditiveTables<V> additive_tables(const BallotProfile& profile, std::size_t k, const ScaledGains& scaled) {
  AdditiveTables<V> t;
  t.m = profile.num_candidates();
  t.k = k;
  t.groups_of = incidence(profile);
  for (const auto& row : scaled.gain) {
    std::vector<V> converted;
    for (const auto& v : row) converted.push_back(convert<V>(v));
    t.gain.push_back(std::move(converted));
  }
  return t;
}

/// Greedy marginal-gain committee; a cheap initial incumbent.
template <class V>
std::pair<V, std::vector<Candidate>> greedy_seed(const AdditiveTables<V>& tables) {
  AdditiveModel<V> model(tables);
  std::vector<bool> chosen(tables.m, false);
  std::vector<Candidate> picked;
  for (std::size_t round = 0; round < tables.k; ++round) {
    std::optional<Candidate> best;
    V best_gain(0);
    for (std::size_t c = 0; c < tables.m; ++c) {
      if (chosen[c]) continue;
      V g = model.marginal(static_cast<Candidate>(c));
      if (!best || g > best_gain) {
        best = static_cast<Candidate>(c);
        best_gain = std::move(g);
      }
    }
    chosen[*best] = true;
    model.apply(*best);
    picked.push_back(*best);
  }
  std::sort(picked.begin(), picked.end());
  return {model.leaf_value(), picked};
}

Rational to_rational(std::int64_t v) { return Rational(BigInt(static_cast<long>(v))); }
Rational to_rational(const BigInt& v) { return Rational(v); }

template <class V>
OptimizationResult finish(const BallotProfile& profile, const OptimizationRequest& request, RawResult<V> raw,
                          const BigInt& scale) {
  OptimizationResult result;
  result.nodes_explored = raw.nodes;
  Rational value = to_rational(raw.value) / scale;
  value.canonicalize();
  result.score = Score(value);
  if (request.tiebreak == TieBreak::prefer_jr) {
    result.co_optimal_count = raw.co_optima.size();
    const std::vector<Candidate>* chosen = &raw.co_optima.front();
    for (const auto& key : raw.co_optima) {
      if (check_jr(profile, request.k, Committee(std::vector<Candidate>(key))).passed) {
        chosen = &key;
        break;
      }
    }
    result.committee = Committee(std::vector<Candidate>(*chosen));
  } else {
    result.committee = Committee(std::move(raw.key));
  }
  return result;
}

}  // namespace

OptimizationResult optimize_committee(const BallotProfile& profile, const OptimizationRequest& request) {
  require_committee_size(profile, request.k);
  if (request.budget && *request.budget == 0) throw InvalidArgument("search budget must be at least 1");
  if (const auto* w = std::get_if<objective::WeightedPav>(&request.objective)) {
    w->weights.require_length(profile.num_candidates());
  }

  SearchConfig cfg;
  cfg.m = profile.num_candidates();
  cfg.k = request.k;
  cfg.pruning = request.search.pruning;
  cfg.collect_all = request.tiebreak == TieBreak::prefer_jr;
  cfg.budget = request.budget;

  if (std::holds_alternative<objective::Mav>(request.objective)) {
    MavTables tables;
    tables.m = cfg.m;
    tables.k = cfg.k;
    tables.groups_of = incidence(profile);
    for (const Ballot& b : profile.ballots()) {
      tables.members.emplace_back(b.approvals.begin(), b.approvals.end());
    }
    std::vector<Candidate> seed(cfg.k);
    std::iota(seed.begin(), seed.end(), Candidate{0});
    MavModel seed_model(tables);
    for (Candidate c : seed) seed_model.apply(c);
    auto raw = run_search<MavModel>(tables, cfg, request.search, seed_model.leaf_value(), seed);
    return finish(profile, request, std::move(raw), BigInt(1));
  }

  const ScaledGains scaled = scale_to_integers(increments(profile, request.objective));
  if (scaled.magnitude < (BigInt(1) << 62)) {
    const auto tables = additive_tables<std::int64_t>(profile, cfg.k, scaled);
    auto [value, key] = greedy_seed(tables);
    auto raw = run_search<AdditiveModel<std::int64_t>>(tables, cfg, request.search, value, key);
    return finish(profile, request, std::move(raw), scaled.scale);
  }
  const auto tables = additive_tables<BigInt>(profile, cfg.k, scaled);
  auto [value, key] = greedy_seed(tables);
  auto raw = run_search<AdditiveModel<BigInt>>(tables, cfg, request.search, value, key);
  return finish(profile, request, std::move(raw), scaled.scale);
}

}  // namespace abcvote
