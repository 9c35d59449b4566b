#include "abcvote/scoring.hpp"

#include <algorithm>

#include "abcvote/error.hpp"

namespace abcvote {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

Direction direction_of(const ScoringObjective& objective) {
  return std::holds_alternative<objective::Mav>(objective) ? Direction::minimize : Direction::maximize;
}

std::string objective_name(const ScoringObjective& objective) {
  return std::visit(overloaded{
                        [](const objective::Av&) -> std::string { return "av"; },
                        [](const objective::Sav&) -> std::string { return "sav"; },
                        [](const objective::WeightedPav& o) -> std::string { return "wpav:" + o.weights.to_string(); },
                        [](const objective::Mav&) -> std::string { return "mav"; },
                    },
                    objective);
}

Score score_committee(const BallotProfile& profile, const Committee& committee, const ScoringObjective& objective) {
  committee.validate(profile.num_candidates());
  const auto ballots = profile.ballots();
  Rational total = 0;
  std::visit(overloaded{
                 [&](const objective::Av&) {
                   for (const Ballot& b : ballots) {
                     total += Rational(to_big(b.multiplicity) *
                                       to_big(intersection_size(b.approvals, committee.as_set())));
                   }
                 },
                 [&](const objective::Sav&) {
                   for (const Ballot& b : ballots) {
                     if (b.approvals.empty()) continue;
                     const auto hit = intersection_size(b.approvals, committee.as_set());
                     total += Rational(to_big(b.multiplicity) * to_big(hit),
                                       to_big(b.approvals.size()));
                   }
                 },
                 [&](const objective::WeightedPav& o) {
                   o.weights.require_length(profile.num_candidates());
                   std::vector<Rational> prefix(committee.k() + 1, Rational(0));
                   for (std::size_t p = 1; p <= committee.k(); ++p) prefix[p] = prefix[p - 1] + o.weights.weight(p);
                   for (const Ballot& b : ballots) {
                     const auto hit = intersection_size(b.approvals, committee.as_set());
                     total += Rational(to_big(b.multiplicity)) * prefix[hit];
                   }
                 },
                 [&](const objective::Mav&) {
                   std::size_t worst = 0;
                   for (const Ballot& b : ballots) worst = std::max(worst, hamming_distance(b.approvals, committee.as_set()));
                   total = Rational(to_big(worst));
                 },
             },
             objective);
  total.canonicalize();
  return Score(std::move(total));
}

}  // namespace abcvote
