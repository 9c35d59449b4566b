#pragma once

// Brute-force reference implementations. Everything here works on the
// unit-ballot expansion and follows the definitions literally (voter-subset
// enumeration, full committee enumeration, per-round recomputation), so it
// shares no code path with the fast implementations it is used to check.
// Limits: n <= 20 voters for the axiom checks, m <= 20 for enumeration.

#include <cstddef>
#include <cstdint>

#include "abcvote/axioms.hpp"
#include "abcvote/committee.hpp"
#include "abcvote/corpus.hpp"
#include "abcvote/profile.hpp"
#include "abcvote/rational.hpp"
#include "abcvote/scoring.hpp"
#include "abcvote/weights.hpp"

namespace abcvote::oracle {

bool provides_jr(const BallotProfile& profile, std::size_t k, const Committee& w);
bool provides_ell_jr(const BallotProfile& profile, std::size_t k, const Committee& w, std::size_t level);
bool provides_ejr(const BallotProfile& profile, std::size_t k, const Committee& w);
bool provides_sjr(const BallotProfile& profile, std::size_t k, const Committee& w);
bool unanimous(const BallotProfile& profile, const Committee& w);

/// Whether a failing report's witness reproduces the violation of its axiom
/// when checked against the raw definition. Passing reports are valid iff they
/// carry no witness.
bool witness_valid(const BallotProfile& profile, std::size_t k, const Committee& w, const AxiomReport& report);

Rational score(const BallotProfile& profile, const Committee& w, const ScoringObjective& objective);

struct Optimum {
  Committee committee;
  Rational score;
  std::size_t co_optimal = 0;
};

/// Scores every size-k committee; ties go to the lexicographically smallest,
/// restricted first to JR committees under prefer_jr when any exist.
Optimum optimize(const BallotProfile& profile, std::size_t k, const ScoringObjective& objective, TieBreak tiebreak);

/// Sequential rule with every candidate's weight recomputed from scratch each round.
Committee sequential(const BallotProfile& profile, std::size_t k, const WeightVector& weights);

Committee ujrav(const BallotProfile& profile, std::size_t k);
Committee ejrav(const BallotProfile& profile, std::size_t k);

bool has_biclique(const BipartiteGraph& graph, std::size_t ell);

}  // namespace abcvote::oracle
