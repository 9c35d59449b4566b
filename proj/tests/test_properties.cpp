// Invariants over random small instances, checked against the brute-force
// oracle where one exists. Instances come from random_instance, which mixes
// the uniform, fixed-size and urn cultures.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "abcvote/axioms.hpp"
#include "abcvote/corpus.hpp"
#include "abcvote/oracle.hpp"
#include "abcvote/rules.hpp"

using namespace abcvote;

namespace {

constexpr std::uint64_t trials = 150;
const SearchOptions serial{SearchOptions::Mode::serial, 1, true};

std::vector<Candidate> random_permutation(std::mt19937_64& gen, std::size_t m) {
  std::vector<Candidate> perm(m);
  std::iota(perm.begin(), perm.end(), Candidate{0});
  std::shuffle(perm.begin(), perm.end(), gen);
  return perm;
}

CandidateSet relabel(const CandidateSet& s, const std::vector<Candidate>& perm) {
  std::vector<Candidate> out;
  for (Candidate c : s) out.push_back(perm[c]);
  return CandidateSet(std::move(out));
}

BallotProfile relabel(const BallotProfile& p, const std::vector<Candidate>& perm) {
  std::vector<Ballot> ballots;
  for (const auto& b : p.ballots()) ballots.push_back({relabel(b.approvals, perm), b.multiplicity});
  return BallotProfile(p.num_candidates(), std::move(ballots));
}

// Random multiplicities in [1, 3] on a normalized profile.
BallotProfile with_multiplicities(const BallotProfile& p, std::mt19937_64& gen) {
  const auto normal = normalize_profile(p);
  std::vector<Ballot> ballots;
  for (const auto& b : normal.ballots()) ballots.push_back({b.approvals, 1 + gen() % 3});
  return BallotProfile(p.num_candidates(), std::move(ballots));
}

std::vector<AxiomReport> all_reports(const BallotProfile& p, std::size_t k, const Committee& w) {
  std::vector<AxiomReport> out{check_jr(p, k, w), check_ejr(p, k, w), check_sjr(p, k, w), check_unanimity(p, k, w)};
  for (std::size_t level = 1; level <= k; ++level) out.push_back(check_ell_jr(p, k, w, level));
  return out;
}

}  // namespace

TEST_CASE("axiom checks agree with the naive definitions") {
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed, 9, 7, 4);
    const auto& p = inst.profile;
    for (const Committee& w : {random_committee(seed, p.num_candidates(), inst.k), find_jr_committee(p, inst.k)}) {
      CAPTURE(seed);
      CHECK(check_jr(p, inst.k, w).passed == oracle::provides_jr(p, inst.k, w));
      CHECK(check_ejr(p, inst.k, w).passed == oracle::provides_ejr(p, inst.k, w));
      CHECK(check_sjr(p, inst.k, w).passed == oracle::provides_sjr(p, inst.k, w));
      CHECK(check_unanimity(p, inst.k, w).passed == oracle::unanimous(p, w));
      for (std::size_t level = 1; level <= inst.k; ++level) {
        CHECK(check_ell_jr(p, inst.k, w, level).passed == oracle::provides_ell_jr(p, inst.k, w, level));
      }
      for (const auto& r : all_reports(p, inst.k, w)) CHECK(oracle::witness_valid(p, inst.k, w, r));
    }
  }
}

TEST_CASE("axiom implications") {
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed + 1000, 10, 8, 4);
    const auto& p = inst.profile;
    const auto w = random_committee(seed, p.num_candidates(), inst.k);
    const bool ejr = check_ejr(p, inst.k, w).passed;
    const bool jr = check_jr(p, inst.k, w).passed;
    CAPTURE(seed);
    CHECK(check_ell_jr(p, inst.k, w, 1).passed == jr);
    if (ejr) CHECK(jr);
    if (check_sjr(p, inst.k, w).passed) CHECK(jr);
    bool every_level = true;
    for (std::size_t level = 1; level <= inst.k; ++level) every_level &= check_ell_jr(p, inst.k, w, level).passed;
    CHECK(every_level == ejr);
  }
}

TEST_CASE("verdicts survive relabeling, reordering and multiplicities") {
  std::mt19937_64 gen(7);
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed + 2000, 8, 7, 4);
    const auto perm = random_permutation(gen, inst.profile.num_candidates());
    const auto w = random_committee(seed, inst.profile.num_candidates(), inst.k);
    const auto q = relabel(inst.profile, perm);
    const Committee v(relabel(w.as_set(), perm));
    const auto a = all_reports(inst.profile, inst.k, w);
    const auto b = all_reports(q, inst.k, v);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].passed == b[i].passed);

    std::vector<Ballot> shuffled(inst.profile.ballots().begin(), inst.profile.ballots().end());
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    const BallotProfile s(inst.profile.num_candidates(), shuffled);
    const auto c = all_reports(s, inst.k, w);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].passed == c[i].passed);

    const auto mp = with_multiplicities(inst.profile, gen);
    const auto d = all_reports(mp, inst.k, w);
    const auto e = all_reports(mp.expanded(), inst.k, w);
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i].passed == e[i].passed);
  }
}

TEST_CASE("optimizers match exhaustive scoring") {
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed + 3000, 9, 7, 4);
    const auto& p = inst.profile;
    const std::size_t m = p.num_candidates();
    for (const ScoringObjective& obj :
         std::vector<ScoringObjective>{objective::Av{}, objective::Sav{}, objective::Mav{},
                                       objective::WeightedPav{weights::harmonic(m)},
                                       objective::WeightedPav{weights::unit_prefix(m)}}) {
      for (TieBreak tie : {TieBreak::lexicographic, TieBreak::prefer_jr}) {
        const auto want = oracle::optimize(p, inst.k, obj, tie);
        CAPTURE(seed);
        CHECK(compute_score_rule(p, inst.k, obj, tie) == want.committee);
        CHECK(score_committee(p, want.committee, obj).value() == want.score);
      }
    }
  }
}

TEST_CASE("sequential and JR-filtered rules match their references") {
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed + 4000, 9, 7, 4);
    const auto& p = inst.profile;
    const std::size_t m = p.num_candidates();
    CAPTURE(seed);
    for (const auto& w : {weights::harmonic(m), weights::unit_prefix(m), weights::geometric(m, p.num_voters()),
                          weights::constant_tail(m, make_rational(1, 3))}) {
      CHECK(compute_sequential_rule(p, inst.k, w) == oracle::sequential(p, inst.k, w));
    }
    CHECK(compute_ujrav(p, inst.k, TieBreak::lexicographic) == oracle::ujrav(p, inst.k));
    CHECK(compute_ejrav(p, inst.k, TieBreak::lexicographic) == oracle::ejrav(p, inst.k));
    const RuleOptions one_thread{serial, std::nullopt};
    CHECK(compute_ejrav(p, inst.k, TieBreak::lexicographic, one_thread) == oracle::ejrav(p, inst.k));
  }
}

TEST_CASE("rules provide the axioms they are known to") {
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed + 5000, 10, 8, 4);
    const auto& p = inst.profile;
    const std::size_t m = p.num_candidates();
    const std::size_t k = inst.k;
    CAPTURE(seed);
    CHECK(check_ejr(p, k, compute_score_rule(p, k, objective::WeightedPav{weights::harmonic(m)},
                                             TieBreak::lexicographic))
              .passed);
    const auto gav = compute_sequential_rule(p, k, weights::unit_prefix(m));
    CHECK(gav == find_jr_committee(p, k));
    CHECK(check_jr(p, k, gav).passed);
    CHECK(check_jr(p, k, compute_ujrav(p, k, TieBreak::lexicographic)).passed);
    if (k <= 2) CHECK(check_jr(p, k, compute_score_rule(p, k, objective::Av{}, TieBreak::prefer_jr)).passed);
    for (std::size_t level = 1; level <= k; ++level) {
      CHECK(check_ell_jr(p, k, find_ell_jr_committee(p, k, level), level).passed);
    }
  }
}

TEST_CASE("rule identities") {
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const auto inst = random_instance(seed + 6000, 10, 8, 4);
    const auto& p = inst.profile;
    const std::size_t m = p.num_candidates();
    for (TieBreak tie : {TieBreak::lexicographic, TieBreak::prefer_jr}) {
      CHECK(compute_rule(p, inst.k, RuleSpec{rule::Av{}, tie}) ==
            compute_rule(p, inst.k, RuleSpec{rule::WeightedPav{weights::all_ones(m)}, tie}));
      CHECK(compute_rule(p, inst.k, RuleSpec{rule::ChamberlinCourant{}, tie}) ==
            compute_rule(p, inst.k, RuleSpec{rule::WeightedPav{weights::unit_prefix(m)}, tie}));
    }
    CHECK(compute_rule(p, inst.k, RuleSpec{rule::Gav{}}) ==
          compute_rule(p, inst.k, RuleSpec{rule::WeightedRav{weights::unit_prefix(m)}}));
    CHECK(compute_rule(p, inst.k, RuleSpec{rule::Rav{}}) ==
          compute_rule(p, inst.k, RuleSpec{rule::WeightedRav{weights::harmonic(m)}}));
  }
}

TEST_CASE("biclique reduction tracks biclique existence on random graphs") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t left = 3 + gen() % 2;
    const std::size_t right = 3 + gen() % 2;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t r = 0; r < right; ++r) {
        if (gen() % 4 != 0) edges.emplace_back(l, r);
      }
    }
    const BipartiteGraph g(left, right, edges);
    const auto inst = reduce_biclique(g, 3);
    CHECK(!check_ejr(inst.profile, inst.k, inst.committee).passed == oracle::has_biclique(g, 3));
  }
}

TEST_CASE("SJR existence matches enumeration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = random_instance(seed + 7000, 8, 6, 3);
    const auto& p = inst.profile;
    std::optional<Committee> first;
    for (const Committee& w : enumerate_committees(p.num_candidates(), inst.k)) {
      if (oracle::provides_sjr(p, inst.k, w)) {
        first = w;
        break;
      }
    }
    CHECK(exists_sjr_committee(p, inst.k) == first);
    CHECK(exists_sjr_committee(p, inst.k, serial) == first);
  }
}

// Larger k than the other suites: the greedy must keep going when a group's
// common set is already partly elected.
TEST_CASE("level-wise greedy at larger committee sizes") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto inst = random_instance(seed + 8000, 10, 8, 6);
    for (std::size_t level = 1; level <= std::min<std::size_t>(inst.k, 3); ++level) {
      const auto w = find_ell_jr_committee(inst.profile, inst.k, level);
      CAPTURE(seed);
      CHECK(oracle::provides_ell_jr(inst.profile, inst.k, w, level));
      ++checked;
    }
  }
  CHECK(checked > 400);
}
