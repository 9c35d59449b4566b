#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abcvote/committee.hpp"
#include "abcvote/profile.hpp"
#include "abcvote/scoring.hpp"
#include "abcvote/solver.hpp"
#include "abcvote/weights.hpp"

namespace abcvote {

namespace rule {
struct Av {};
struct Sav {};
struct Mav {};
struct WeightedPav {
  WeightVector weights;
};
struct WeightedRav {
  WeightVector weights;
};
/// (1, 1/2, 1/3, ...)-PAV.
struct Pav {};
/// Chamberlin-Courant on approval ballots, i.e. (1, 0, ..., 0)-PAV.
struct ChamberlinCourant {};
/// Greedy approval voting, i.e. (1, 0, ..., 0)-RAV.
struct Gav {};
/// (1, 1/2, 1/3, ...)-RAV.
struct Rav {};
/// (1, 1/n, 1/n^2, ...)-RAV; its weights depend on the profile's n.
struct GeometricRav {};
/// Highest AV score among committees providing JR.
struct Ujrav {};
/// Among committees providing JR, maximize the least number of approved
/// members any voter has.
struct Ejrav {};
}  // namespace rule

using RuleKind = std::variant<rule::Av, rule::Sav, rule::Mav, rule::WeightedPav, rule::WeightedRav, rule::Pav,
                              rule::ChamberlinCourant, rule::Gav, rule::Rav, rule::GeometricRav, rule::Ujrav,
                              rule::Ejrav>;

struct RuleSpec {
  RuleKind kind;
  TieBreak tiebreak = TieBreak::lexicographic;
};

/// Accepts av, sav, mav, pav, cc, gav, rav, geometric-rav, ujrav, ejrav,
/// wpav:<w1,w2,...> and wrav:<w1,w2,...>. Throws InvalidArgument otherwise.
RuleKind parse_rule(std::string_view text);
std::string rule_name(const RuleKind& kind);

/// The score objective a score-based rule optimizes on this profile, with
/// named weight families expanded to length m; nullopt for other rules.
std::optional<ScoringObjective> score_objective(const RuleKind& kind, const BallotProfile& profile);
/// The weight vector a sequential rule uses on this profile; nullopt otherwise.
std::optional<WeightVector> sequential_weights(const RuleKind& kind, const BallotProfile& profile);
/// Objective used when reporting a score for the rule's output: the optimized
/// objective for score rules, the matching Thiele objective for sequential
/// rules and AV for the JR-filtered rules.
ScoringObjective reporting_objective(const RuleKind& kind, const BallotProfile& profile);

struct RuleOptions {
  SearchOptions search;
  std::optional<std::uint64_t> budget;
};

/// AV, SAV, MAV or w-PAV through the exact solver.
Committee compute_score_rule(const BallotProfile& profile, std::size_t k, const ScoringObjective& objective,
                             TieBreak tiebreak, const RuleOptions& options = {});

/// One sequential (reweighting) round.
struct SequentialRound {
  /// Approval weight of every candidate at the start of the round; nullopt for
  /// candidates already elected.
  std::vector<std::optional<Rational>> weights;
  Candidate chosen = 0;
};

struct SequentialTrace {
  /// Candidates in election order.
  std::vector<Candidate> order;
  /// Per-round weights; empty unless requested.
  std::vector<SequentialRound> rounds;
  Committee committee;
};

/// w-RAV: k rounds, each electing the unelected candidate with the largest
/// approval weight sum_{i: c in A_i} mult_i * w_{|W ∩ A_i| + 1}, lowest index
/// on ties. With (1, 0, ..., 0) this is greedy approval voting, whose final
/// zero-weight rounds fill with the lowest-index candidates.
Committee compute_sequential_rule(const BallotProfile& profile, std::size_t k, const WeightVector& weights);
SequentialTrace trace_sequential_rule(const BallotProfile& profile, std::size_t k, const WeightVector& weights,
                                      bool record_rounds);

/// Filtered enumeration over all committees; the tie-break is accepted for
/// symmetry with score rules but every candidate committee already provides
/// JR, so ties are resolved lexicographically.
Committee compute_ujrav(const BallotProfile& profile, std::size_t k, TieBreak tiebreak, const RuleOptions& options = {});
Committee compute_ejrav(const BallotProfile& profile, std::size_t k, TieBreak tiebreak, const RuleOptions& options = {});

Committee compute_rule(const BallotProfile& profile, std::size_t k, const RuleSpec& spec, const RuleOptions& options = {});

}  // namespace abcvote
