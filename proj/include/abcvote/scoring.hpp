#pragma once

#include <string>
#include <variant>

#include "abcvote/committee.hpp"
#include "abcvote/profile.hpp"
#include "abcvote/rational.hpp"
#include "abcvote/weights.hpp"

namespace abcvote {

namespace objective {
/// Sum over voters of |W ∩ A_i|.
struct Av {
  friend bool operator==(const Av&, const Av&) = default;
};
/// Sum over voters of |W ∩ A_i| / |A_i|; empty ballots contribute 0.
struct Sav {
  friend bool operator==(const Sav&, const Sav&) = default;
};
/// Sum over voters of r_w(|W ∩ A_i|).
struct WeightedPav {
  WeightVector weights;
  friend bool operator==(const WeightedPav&, const WeightedPav&) = default;
};
/// max over ballots of d(W, A_i). Multiplicities do not matter.
struct Mav {
  friend bool operator==(const Mav&, const Mav&) = default;
};
}  // namespace objective

using ScoringObjective = std::variant<objective::Av, objective::Sav, objective::WeightedPav, objective::Mav>;

enum class Direction { maximize, minimize };

/// MAV is minimized; everything else is maximized.
Direction direction_of(const ScoringObjective& objective);
std::string objective_name(const ScoringObjective& objective);

/// Exact score of `committee` under `objective`. Throws InvalidArgument if a
/// member is >= m or a weight vector has the wrong length.
Score score_committee(const BallotProfile& profile, const Committee& committee, const ScoringObjective& objective);

}  // namespace abcvote
