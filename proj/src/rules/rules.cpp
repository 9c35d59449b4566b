#include "abcvote/rules.hpp"

#include <algorithm>
#include <limits>

#include "abcvote/axioms.hpp"
#include "abcvote/error.hpp"

namespace abcvote {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::size_t min_representation(const BallotProfile& profile, const Committee& w) {
  std::size_t least = std::numeric_limits<std::size_t>::max();
  for (const Ballot& b : profile.ballots()) least = std::min(least, intersection_size(b.approvals, w.as_set()));
  return least;
}

}  // namespace

RuleKind parse_rule(std::string_view text) {
  if (text == "av") return rule::Av{};
  if (text == "sav") return rule::Sav{};
  if (text == "mav") return rule::Mav{};
  if (text == "pav") return rule::Pav{};
  if (text == "cc") return rule::ChamberlinCourant{};
  if (text == "gav") return rule::Gav{};
  if (text == "rav") return rule::Rav{};
  if (text == "geometric-rav") return rule::GeometricRav{};
  if (text == "ujrav") return rule::Ujrav{};
  if (text == "ejrav") return rule::Ejrav{};
  if (text.starts_with("wpav:")) return rule::WeightedPav{weights::parse(text.substr(5))};
  if (text.starts_with("wrav:")) return rule::WeightedRav{weights::parse(text.substr(5))};
  throw InvalidArgument("unknown rule '" + std::string(text) + "'");
}

std::string rule_name(const RuleKind& kind) {
  return std::visit(overloaded{
                        [](const rule::Av&) -> std::string { return "av"; },
                        [](const rule::Sav&) -> std::string { return "sav"; },
                        [](const rule::Mav&) -> std::string { return "mav"; },
                        [](const rule::WeightedPav& r) -> std::string { return "wpav:" + r.weights.to_string(); },
                        [](const rule::WeightedRav& r) -> std::string { return "wrav:" + r.weights.to_string(); },
                        [](const rule::Pav&) -> std::string { return "pav"; },
                        [](const rule::ChamberlinCourant&) -> std::string { return "cc"; },
                        [](const rule::Gav&) -> std::string { return "gav"; },
                        [](const rule::Rav&) -> std::string { return "rav"; },
                        [](const rule::GeometricRav&) -> std::string { return "geometric-rav"; },
                        [](const rule::Ujrav&) -> std::string { return "ujrav"; },
                        [](const rule::Ejrav&) -> std::string { return "ejrav"; },
                    },
                    kind);
}

std::optional<ScoringObjective> score_objective(const RuleKind& kind, const BallotProfile& profile) {
  const std::size_t m = profile.num_candidates();
  return std::visit(overloaded{
                        [](const rule::Av&) -> std::optional<ScoringObjective> { return objective::Av{}; },
                        [](const rule::Sav&) -> std::optional<ScoringObjective> { return objective::Sav{}; },
                        [](const rule::Mav&) -> std::optional<ScoringObjective> { return objective::Mav{}; },
                        [](const rule::WeightedPav& r) -> std::optional<ScoringObjective> {
                          return objective::WeightedPav{r.weights};
                        },
                        [&](const rule::Pav&) -> std::optional<ScoringObjective> {
                          return objective::WeightedPav{weights::harmonic(m)};
                        },
                        [&](const rule::ChamberlinCourant&) -> std::optional<ScoringObjective> {
                          return objective::WeightedPav{weights::unit_prefix(m)};
                        },
                        [](const auto&) -> std::optional<ScoringObjective> { return std::nullopt; },
                    },
                    kind);
}

std::optional<WeightVector> sequential_weights(const RuleKind& kind, const BallotProfile& profile) {
  const std::size_t m = profile.num_candidates();
  return std::visit(overloaded{
                        [](const rule::WeightedRav& r) -> std::optional<WeightVector> { return r.weights; },
                        [&](const rule::Gav&) -> std::optional<WeightVector> { return weights::unit_prefix(m); },
                        [&](const rule::Rav&) -> std::optional<WeightVector> { return weights::harmonic(m); },
                        [&](const rule::GeometricRav&) -> std::optional<WeightVector> {
                          return weights::geometric(m, profile.num_voters());
                        },
                        [](const auto&) -> std::optional<WeightVector> { return std::nullopt; },
                    },
                    kind);
}

ScoringObjective reporting_objective(const RuleKind& kind, const BallotProfile& profile) {
  if (auto objective = score_objective(kind, profile)) return *objective;
  if (auto w = sequential_weights(kind, profile)) return objective::WeightedPav{*w};
  return objective::Av{};
}

Committee compute_score_rule(const BallotProfile& profile, std::size_t k, const ScoringObjective& objective,
                             TieBreak tiebreak, const RuleOptions& options) {
  OptimizationRequest request;
  request.k = k;
  request.objective = objective;
  request.tiebreak = tiebreak;
  request.budget = options.budget;
  request.search = options.search;
  return optimize_committee(profile, request).committee;
}

Committee compute_sequential_rule(const BallotProfile& profile, std::size_t k, const WeightVector& weights) {
  return trace_sequential_rule(profile, k, weights, false).committee;
}

SequentialTrace trace_sequential_rule(const BallotProfile& profile, std::size_t k, const WeightVector& weights,
                                      bool record_rounds) {
  require_committee_size(profile, k);
  const std::size_t m = profile.num_candidates();
  weights.require_length(m);
  const auto ballots = profile.ballots();

  // step[p] = w_{p+2} - w_{p+1}: change in a voter's contribution once p -> p+1.
  std::vector<Rational> step(m, Rational(0));
  for (std::size_t p = 0; p + 1 < m; ++p) step[p] = weights.weight(p + 2) - weights.weight(p + 1);

  std::vector<Rational> weight(m, Rational(0));
  for (const Ballot& b : ballots) {
    for (Candidate c : b.approvals) weight[c] += to_big(b.multiplicity);
  }
  std::vector<std::vector<std::uint32_t>> groups_of(m);
  for (std::size_t g = 0; g < ballots.size(); ++g) {
    for (Candidate c : ballots[g].approvals) groups_of[c].push_back(static_cast<std::uint32_t>(g));
  }
  std::vector<std::size_t> represented(ballots.size(), 0);
  std::vector<bool> elected(m, false);

  SequentialTrace trace;
  for (std::size_t round = 0; round < k; ++round) {
    std::optional<Candidate> best;
    for (std::size_t c = 0; c < m; ++c) {
      if (elected[c]) continue;
      if (!best || weight[c] > weight[*best]) best = static_cast<Candidate>(c);
    }
    const Candidate chosen = *best;
    if (record_rounds) {
      SequentialRound r;
      r.chosen = chosen;
      r.weights.resize(m);
      for (std::size_t c = 0; c < m; ++c) {
        if (!elected[c]) r.weights[c] = weight[c];
      }
      trace.rounds.push_back(std::move(r));
    }
    elected[chosen] = true;
    trace.order.push_back(chosen);
    for (auto g : groups_of[chosen]) {
      const std::size_t p = represented[g]++;
      if (p + 1 >= m) continue;
      const Rational delta = step[p] * to_big(ballots[g].multiplicity);
      if (delta == 0) continue;
      for (Candidate other : ballots[g].approvals) {
        if (!elected[other]) weight[other] += delta;
      }
    }
  }
  trace.committee = Committee(std::vector<Candidate>(trace.order));
  return trace;
}

Committee compute_ujrav(const BallotProfile& profile, std::size_t k, TieBreak, const RuleOptions& options) {
  require_committee_size(profile, k);
  auto result = best_committee_by(
      profile.num_candidates(), k,
      [&](const Committee& w) -> std::optional<Rational> {
        if (!check_jr(profile, k, w).passed) return std::nullopt;
        return score_committee(profile, w, objective::Av{}).value();
      },
      options.search, options.budget);
  // Greedy approval voting shows a JR committee always exists.
  return *result.committee;
}

Committee compute_ejrav(const BallotProfile& profile, std::size_t k, TieBreak, const RuleOptions& options) {
  require_committee_size(profile, k);
  auto result = best_committee_by(
      profile.num_candidates(), k,
      [&](const Committee& w) -> std::optional<Rational> {
        if (!check_jr(profile, k, w).passed) return std::nullopt;
        return Rational(to_big(min_representation(profile, w)));
      },
      options.search, options.budget);
  return *result.committee;
}

Committee compute_rule(const BallotProfile& profile, std::size_t k, const RuleSpec& spec, const RuleOptions& options) {
  if (auto objective = score_objective(spec.kind, profile)) {
    return compute_score_rule(profile, k, *objective, spec.tiebreak, options);
  }
  if (auto w = sequential_weights(spec.kind, profile)) return compute_sequential_rule(profile, k, *w);
  if (std::holds_alternative<rule::Ujrav>(spec.kind)) return compute_ujrav(profile, k, spec.tiebreak, options);
  return compute_ejrav(profile, k, spec.tiebreak, options);
}

}  // namespace abcvote
