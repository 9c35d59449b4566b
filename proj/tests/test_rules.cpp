#include <doctest.h>

#include "abcvote/error.hpp"
#include "abcvote/rules.hpp"
#include "support.hpp"

using namespace abcvote;
using abcvote::test::mixed_profile;

namespace {

Committee run(const char* rule, std::size_t k, TieBreak tie = TieBreak::lexicographic) {
  return compute_rule(mixed_profile(), k, RuleSpec{parse_rule(rule), tie});
}

}  // namespace

TEST_CASE("rule names round-trip") {
  for (const char* name : {"av", "sav", "mav", "pav", "cc", "gav", "rav", "geometric-rav", "ujrav", "ejrav",
                           "wpav:1,1/2,0", "wrav:1,1/3,1/3"}) {
    CHECK(rule_name(parse_rule(name)) == name);
  }
  CHECK_THROWS_AS(parse_rule("borda"), InvalidArgument);
  CHECK_THROWS_AS(parse_rule("wpav:1,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_rule("wpav:"), InvalidArgument);
}

TEST_CASE("objectives and weights per rule") {
  const auto p = mixed_profile();
  CHECK(score_objective(parse_rule("pav"), p) == ScoringObjective{objective::WeightedPav{weights::harmonic(5)}});
  CHECK_FALSE(score_objective(parse_rule("rav"), p).has_value());
  CHECK(sequential_weights(parse_rule("geometric-rav"), p) == weights::geometric(5, 9));
  CHECK(sequential_weights(parse_rule("gav"), p) == weights::unit_prefix(5));
  CHECK_FALSE(sequential_weights(parse_rule("av"), p).has_value());
  CHECK(reporting_objective(parse_rule("rav"), p) == ScoringObjective{objective::WeightedPav{weights::harmonic(5)}});
  CHECK(reporting_objective(parse_rule("ejrav"), p) == ScoringObjective{objective::Av{}});
}

// Expected committees come from the brute-force oracle on the mixed profile.
TEST_CASE("rule outputs on the mixed profile") {
  CHECK(run("av", 2) == Committee{0, 2});
  CHECK(run("av", 4) == Committee{0, 1, 2, 3});
  CHECK(run("sav", 4) == Committee{0, 1, 2, 4});
  CHECK(run("pav", 3) == Committee{0, 1, 2});
  CHECK(run("pav", 4) == Committee{0, 1, 2, 4});
  CHECK(run("cc", 3) == Committee{0, 2, 4});
  CHECK(run("mav", 3) == Committee{0, 2, 4});
  CHECK(run("rav", 3) == Committee{0, 1, 2});
  CHECK(run("gav", 3) == Committee{0, 2, 4});
  CHECK(run("ujrav", 4) == Committee{0, 1, 2, 3});
  CHECK(run("ejrav", 2) == Committee{0, 1});
  CHECK(run("ejrav", 3) == Committee{0, 2, 4});
  CHECK(run("wpav:1,1,1,1,1", 4) == run("av", 4));
}

TEST_CASE("sequential trace records weights by round") {
  const auto p = mixed_profile();
  const auto t = trace_sequential_rule(p, 3, weights::harmonic(5), true);
  CHECK(t.order == std::vector<Candidate>{0, 2, 1});
  REQUIRE(t.rounds.size() == 3);
  CHECK(t.rounds[0].weights[0] == Rational(4));
  CHECK(t.rounds[0].weights[2] == Rational(4));
  CHECK(t.rounds[1].weights[0] == std::nullopt);
  // After electing 0: the 3 voters of {0,1} count half for 1.
  CHECK(t.rounds[1].weights[1] == make_rational(3, 2));
  CHECK(t.rounds[1].weights[4] == make_rational(3, 2));
  CHECK(t.rounds[2].chosen == 1);
  CHECK(t.committee == Committee{0, 1, 2});
  CHECK(trace_sequential_rule(p, 3, weights::harmonic(5), false).rounds.empty());
}

TEST_CASE("GAV fills with lowest-index candidates once weights vanish") {
  const auto p = test::profile_of("m 5\n2: 3\n1: 3 4\n");
  CHECK(compute_sequential_rule(p, 3, weights::unit_prefix(5)) == Committee{0, 1, 3});
}

TEST_CASE("multiplicities match their expansion") {
  const auto p = mixed_profile();
  for (const char* rule : {"rav", "gav", "geometric-rav", "pav", "mav", "ejrav"}) {
    const RuleSpec spec{parse_rule(rule)};
    for (std::size_t k = 1; k <= 4; ++k) CHECK(compute_rule(p, k, spec) == compute_rule(p.expanded(), k, spec));
  }
}

TEST_CASE("rules validate k and weight length") {
  const auto p = mixed_profile();
  CHECK_THROWS_AS(compute_rule(p, 0, RuleSpec{rule::Av{}}), InvalidArgument);
  CHECK_THROWS_AS(compute_rule(p, 6, RuleSpec{rule::Rav{}}), InvalidArgument);
  CHECK_THROWS_AS(compute_rule(p, 2, RuleSpec{parse_rule("wrav:1,1/2")}), InvalidArgument);
}
