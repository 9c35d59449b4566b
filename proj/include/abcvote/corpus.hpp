#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "abcvote/axioms.hpp"
#include "abcvote/committee.hpp"
#include "abcvote/profile.hpp"
#include "abcvote/rational.hpp"
#include "abcvote/rules.hpp"
#include "abcvote/scoring.hpp"
#include "abcvote/weights.hpp"

namespace abcvote {

class BipartiteGraph {
 public:
  /// Throws InvalidArgument on out-of-range endpoints or duplicate edges.
  BipartiteGraph(std::size_t left_size, std::size_t right_size, std::vector<std::pair<std::size_t, std::size_t>> edges);
  static BipartiteGraph complete(std::size_t left_size, std::size_t right_size);

  std::size_t left_size() const { return left_; }
  std::size_t right_size() const { return right_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool has_edge(std::size_t l, std::size_t r) const;
  /// Left vertices adjacent to right vertex r, ascending.
  std::vector<std::size_t> left_neighbors(std::size_t r) const;

 private:
  std::size_t left_;
  std::size_t right_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // sorted
};

struct ReducedInstance {
  BallotProfile profile;
  std::size_t k;
  Committee committee;
};

/// Balanced-biclique reduction: candidates are laid out as L (the left
/// vertices), then C1 and C1' (ell - 1 each), then the matched singletons C2.
/// Right vertex v_i becomes one voter approving N(v_i) ∪ C1; ell(s - 1) voters
/// approve L ∪ C1'; each C2 candidate has one voter of its own. k = 2ell - 2
/// and the committee is C1 ∪ C1'. It fails EJR iff the graph has an ell x ell
/// biclique. Requires s = right_size >= 3 and ell >= 3.
ReducedInstance reduce_biclique(const BipartiteGraph& graph, std::size_t ell);

namespace culture {
/// Each candidate approved independently with probability p.
struct UniformSubsets {
  Rational p;
};
/// Every ballot is a uniformly random s-subset.
struct FixedSize {
  std::size_t s;
};
/// Voters join one of `groups` random base ballots; each candidate's membership
/// is kept from the base with probability `cohesion`, otherwise redrawn fairly.
struct Urn {
  std::size_t groups;
  Rational cohesion;
};
}  // namespace culture

using Culture = std::variant<culture::UniformSubsets, culture::FixedSize, culture::Urn>;

/// Accepts uniform:<p>, fixed:<s> and urn:<groups>,<cohesion>.
Culture parse_culture(std::string_view text);
std::string culture_name(const Culture& c);

/// n unit ballots over m candidates, deterministic in seed on every platform
/// (raw mt19937_64 output with our own range reduction).
BallotProfile random_profile(std::uint64_t seed, std::size_t n, std::size_t m, const Culture& culture);

/// A random small instance for property tests: n in [1, max_n], m in
/// [1, max_m], k in [1, min(m, max_k)], culture drawn from all three families.
struct RandomInstance {
  BallotProfile profile;
  std::size_t k;
};
RandomInstance random_instance(std::uint64_t seed, std::size_t max_n, std::size_t max_m, std::size_t max_k);

/// A uniformly random size-k committee over m candidates.
Committee random_committee(std::uint64_t seed, std::size_t m, std::size_t k);

// Fixture expectations. Each entry names what it checks and is replayed
// against the live modules.
namespace expect {
struct RuleCommittee {
  RuleSpec rule;
  Committee expected;
};
struct RuleExcludes {
  RuleSpec rule;
  std::vector<Candidate> excluded;
};
struct RulePasses {
  RuleSpec rule;
  AxiomKind axiom;
  std::size_t level = 1;
  bool passes = true;
};
struct ScoreEquals {
  ScoringObjective objective;
  Committee committee;
  Rational value;
};
/// score(first) - score(second) equals `difference` exactly.
struct ScoreDifference {
  ScoringObjective objective;
  Committee first;
  Committee second;
  Rational difference;
};
struct AxiomVerdict {
  AxiomKind axiom;
  std::size_t level = 1;
  Committee committee;
  bool passes = true;
  std::optional<std::uint64_t> witness_size;
  std::optional<CandidateSet> witness_candidates;
  std::optional<std::size_t> witness_level;
};
struct RoundWeight {
  std::size_t round;  // 1-based
  Candidate candidate;
  Rational weight;
};
struct SequentialTrace {
  WeightVector weights;
  /// Expected first picks in order (may be the whole committee).
  std::vector<Candidate> order_prefix;
  std::vector<RoundWeight> round_weights;
};
struct SjrExists {
  bool exists;
};
struct EllJrConstruction {
  std::size_t level;
  Committee expected;
};
}  // namespace expect

using ExpectationCheck =
    std::variant<expect::RuleCommittee, expect::RuleExcludes, expect::RulePasses, expect::ScoreEquals,
                 expect::ScoreDifference, expect::AxiomVerdict, expect::SequentialTrace, expect::SjrExists,
                 expect::EllJrConstruction>;

struct Expectation {
  std::string description;
  ExpectationCheck check;
};

struct Fixture {
  std::string name;
  std::string summary;
  /// Resolved parameters, defaults included.
  std::map<std::string, Rational> params;
  BallotProfile profile;
  std::size_t k;
  /// Construction-letter names of the candidates, by index.
  std::vector<std::string> labels;
  /// Weight vector the construction is built around, when it has one.
  std::optional<WeightVector> weights;
  std::vector<Expectation> expectations;
};

using FixtureParams = std::map<std::string, Rational>;

struct FixtureInfo {
  std::string name;
  std::string summary;
  /// Parameter names with their defaults.
  std::vector<std::pair<std::string, Rational>> defaults;
};

const std::vector<FixtureInfo>& fixture_catalog();

/// Throws InvalidArgument for unknown names or parameters and
/// ConstraintViolation, naming the inequality, when parameters are out of range.
Fixture build_fixture(std::string_view name, const FixtureParams& params = {});

struct ExpectationOutcome {
  std::string description;
  bool passed;
  std::string detail;
};

std::vector<ExpectationOutcome> replay(const Fixture& fixture, const RuleOptions& options = {});

}  // namespace abcvote
