// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion with
// its wall time and limit; exits non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abcvote/axioms.hpp"
#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"
#include "abcvote/oracle.hpp"
#include "abcvote/rules.hpp"

using namespace abcvote;

namespace {

// Collects the first few failures; a criterion passes when none were recorded.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const {
    if (failures_ <= 3) return notes_;
    return notes_ + "; +" + std::to_string(failures_ - 3) + " more";
  }
  void info(const std::string& text) { info_ += (info_.empty() ? "" : ", ") + text; }
  const std::string& info_text() const { return info_; }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
  std::string info_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Ledger&)> body;
};

Committee range(Candidate first, std::size_t count) { return Committee(CandidateSet::range(first, count)); }

bool jr_fails_on(const BallotProfile& p, std::size_t k, const Committee& w, std::optional<CandidateSet> cands,
                 std::optional<std::uint64_t> size) {
  const auto r = check_jr(p, k, w);
  if (r.passed) return false;
  if (cands && r.witness->candidates != *cands) return false;
  if (size && r.witness->group_size != *size) return false;
  return true;
}

// Random profile with n in [1, max_n], m in [min_m, max_m].
BallotProfile random_sized(std::uint64_t seed, std::size_t max_n, std::size_t min_m, std::size_t max_m) {
  std::mt19937_64 gen(seed);
  const std::size_t n = 1 + gen() % max_n;
  const std::size_t m = min_m + gen() % (max_m - min_m + 1);
  const Culture cultures[] = {culture::UniformSubsets{make_rational(static_cast<std::int64_t>(1 + gen() % 3), 4)},
                              culture::FixedSize{1 + gen() % m}, culture::Urn{1 + gen() % 3, make_rational(3, 4)}};
  return random_profile(gen(), n, m, cultures[gen() % 3]);
}

void av_ignores_singleton(Ledger& l) {
  const auto f = build_fixture("av-ignores-singleton", {{"k", 3}});
  const auto av = compute_rule(f.profile, 3, RuleSpec{rule::Av{}});
  l.expect(av == Committee{1, 2, 3}, "AV chose {" + av.to_string() + "}");
  l.expect(jr_fails_on(f.profile, 3, av, CandidateSet{0}, std::nullopt), "JR witness is not c0");
  std::size_t count = 0;
  for (std::uint64_t seed = 0; count < 1000; ++seed) {
    const auto p = random_sized(seed, 10, 2, 8);
    const auto w = compute_rule(p, 2, RuleSpec{rule::Av{}, TieBreak::prefer_jr});
    l.expect(check_jr(p, 2, w).passed, "AV prefer-JR fails JR at seed " + std::to_string(seed));
    ++count;
  }
  l.info(std::to_string(count) + " random profiles");
}

void sav_mav_fail_jr(Ledger& l) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto ks = std::to_string(k);
    const auto sav = build_fixture("sav-favors-small-ballots", {{"k", k}});
    const auto ws = compute_rule(sav.profile, k, RuleSpec{rule::Sav{}});
    l.expect(ws == range(static_cast<Candidate>(k + 1), k), "SAV k=" + ks + " chose {" + ws.to_string() + "}");
    l.expect(!check_jr(sav.profile, k, ws).passed, "SAV output passes JR at k=" + ks);

    const auto mav = build_fixture("mav-favors-large-ballots", {{"k", k}});
    const auto wm = compute_rule(mav.profile, k, RuleSpec{rule::Mav{}});
    l.expect(wm == range(0, k), "MAV k=" + ks + " chose {" + wm.to_string() + "}");
    l.expect(score_committee(mav.profile, wm, objective::Mav{}).value() == k + 1, "MAV score is not k+1 at k=" + ks);
    l.expect(!check_jr(mav.profile, k, wm).passed, "MAV output passes JR at k=" + ks);
  }
}

void mav_equal_sizes(Ledger& l) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 1 + gen() % 4;
    const std::size_t m = k + gen() % (8 - k + 1);
    const std::size_t n = 1 + gen() % 10;
    const auto p = random_profile(gen(), n, m, culture::FixedSize{k});
    const auto w = compute_rule(p, k, RuleSpec{rule::Mav{}, TieBreak::prefer_jr});
    l.expect(check_jr(p, k, w).passed, "trial " + std::to_string(t) + " fails JR");
  }
}

void rav_case(Ledger& l, const Fixture& f, Candidate left_out) {
  const auto trace = trace_sequential_rule(f.profile, f.k, weights::harmonic(f.profile.num_candidates()), true);
  Rational best = 0;
  for (const auto& w : trace.rounds[0].weights) best = std::max(best, w.value_or(Rational(0)));
  const std::string tag = f.name + ": ";
  l.expect(best == 162, tag + "round-1 maximum weight " + to_fraction_string(best));
  const auto& c7 = trace.rounds[2].weights[6];
  l.expect(c7 && *c7 == 147, tag + "c7 round-3 weight is not 147");
  l.expect(!trace.committee.contains(left_out), tag + "committee contains candidate " + std::to_string(left_out));
  l.expect(trace.committee.contains(10) == (f.k > 10), tag + "unexpected membership of c11");
  l.expect(jr_fails_on(f.profile, f.k, trace.committee, CandidateSet{left_out}, 120), tag + "JR witness differs");
  l.expect(trace.committee == compute_rule(f.profile, f.k, RuleSpec{rule::Rav{}}), tag + "trace and rule disagree");
}

void rav_fails_jr(Ledger& l) {
  const auto f = build_fixture("rav-fails-jr");
  l.expect(f.k == 10 && f.profile.num_voters() == 1199, "fixture size");
  rav_case(l, f, 10);
  const auto g = build_fixture("rav-fails-jr-extended", {{"k", 11}});
  // With k = 11, c11 ties the appended singleton and wins on index; the singleton is left out.
  rav_case(l, g, 11);
}

void weighted_rav_fails_jr(Ledger& l) {
  const auto f = build_fixture("weighted-rav-fails-jr", {{"s", 8}, {"w2", make_rational(1, 8)}});
  const std::size_t c2 = 19 * 17;
  const Candidate x = static_cast<Candidate>(c2 + 19);
  l.expect(f.k == 342, "k=" + std::to_string(f.k));
  l.expect(f.profile.num_voters() == 349866, "n=" + std::to_string(f.profile.num_voters()));
  l.info(std::to_string(f.profile.num_groups()) + " ballot groups");
  const auto trace = trace_sequential_rule(f.profile, f.k, *f.weights, false);
  bool c2_first = true;
  for (std::size_t r = 0; r < 19; ++r) c2_first &= trace.order[r] >= c2 && trace.order[r] < c2 + 19;
  bool c1_after = true;
  for (std::size_t r = 19; r < trace.order.size(); ++r) c1_after &= trace.order[r] < c2;
  l.expect(c2_first, "first 19 rounds are not all of C2");
  l.expect(c1_after, "rounds 20+ are not all of C1");
  l.expect(!trace.committee.contains(x), "x was elected");
  l.expect(jr_fails_on(f.profile, f.k, trace.committee, CandidateSet{x}, 1023), "JR witness is not x with 1023 voters");
}

void weighted_pav_perturbed(Ledger& l) {
  const auto over = build_fixture("wpav-overweight", {{"j", 2}, {"eps", make_rational(1, 4)}, {"k", 4}});
  const auto obj = objective::WeightedPav{*over.weights};
  const auto w = compute_score_rule(over.profile, 4, obj, TieBreak::lexicographic);
  l.expect(w == range(1, 4), "overweight w-PAV chose {" + w.to_string() + "}");
  l.expect(!check_jr(over.profile, 4, w).passed, "overweight output passes JR");
  // Swapping c in for a block member loses j(k-1)eps - 1 = 1/2.
  const Rational gain = score_committee(over.profile, w, obj).value() -
                        score_committee(over.profile, Committee{0, 2, 3, 4}, obj).value();
  l.expect(gain == make_rational(1, 2), "overweight score gap " + to_fraction_string(gain));

  const auto under = build_fixture("wpav-underweight", {{"j", 2}, {"eps", make_rational(1, 8)}, {"k", 11}});
  const auto uobj = objective::WeightedPav{*under.weights};
  const auto u = compute_score_rule(under.profile, 11, uobj, TieBreak::lexicographic);
  l.expect(!check_ell_jr(under.profile, 11, u, 2).passed, "underweight output provides 2-JR");
  // The output beats the committee holding both C0 candidates by (k-j) - j(k-j+1)w_j = 9 - 20*(3/8) = 3/2.
  const Rational ugain = score_committee(under.profile, u, uobj).value() -
                         score_committee(under.profile, range(0, 11), uobj).value();
  l.expect(ugain == make_rational(3, 2), "underweight score gap " + to_fraction_string(ugain));
}

void pav_provides_ejr(Ledger& l) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = random_instance(seed, 10, 8, 4);
    const auto& p = inst.profile;
    const auto pav = compute_rule(p, inst.k, RuleSpec{rule::Pav{}});
    const auto r = check_ejr(p, inst.k, pav);
    l.expect(r.passed, "PAV fails EJR at seed " + std::to_string(seed));
    l.expect(r.passed == oracle::provides_ejr(p, inst.k, pav), "EJR disagrees on PAV at seed " + std::to_string(seed));
    const auto other = random_committee(seed, p.num_candidates(), inst.k);
    l.expect(check_ejr(p, inst.k, other).passed == oracle::provides_ejr(p, inst.k, other),
             "EJR disagrees at seed " + std::to_string(seed));
  }
}

void greedy_constructions(Ledger& l) {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto inst = random_instance(seed, 10, 8, 4);
    const auto w = compute_rule(inst.profile, inst.k, RuleSpec{rule::Gav{}});
    l.expect(check_jr(inst.profile, inst.k, w).passed, "GAV fails JR at seed " + std::to_string(seed));
  }
  for (std::size_t level = 1; level <= 3; ++level) {
    std::mt19937_64 gen(level);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t m = level + gen() % (8 - level + 1);
      const std::size_t k = level + gen() % (std::min<std::size_t>(m, 6) - level + 1);
      const auto p = random_sized(gen(), 10, m, m);
      const auto w = find_ell_jr_committee(p, k, level);
      l.expect(check_ell_jr(p, k, w, level).passed,
               std::to_string(level) + "-GAV fails at trial " + std::to_string(t));
    }
  }
}

void biclique_reduction(Ledger& l) {
  const auto complete = BipartiteGraph::complete(3, 3);
  const auto inst = reduce_biclique(complete, 3);
  l.expect(inst.profile.num_voters() == 12 && inst.k == 4, "K3,3 instance has wrong n or k");
  const auto r = check_ejr(inst.profile, inst.k, inst.committee);
  l.expect(!r.passed && r.witness->level == 3, "K3,3 committee does not fail EJR at level 3");

  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) all.emplace_back(a, b);
  }
  for (std::size_t drop = 0; drop < 9; ++drop) {
    auto edges = all;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
    const auto d = reduce_biclique(BipartiteGraph(3, 3, edges), 3);
    l.expect(check_ejr(d.profile, d.k, d.committee).passed, "edge-deleted graph " + std::to_string(drop) + " fails EJR");
  }
  std::size_t with_biclique = 0;
  for (unsigned mask = 0; mask < 512; ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e = 0; e < 9; ++e) {
      if (mask >> e & 1) edges.push_back(all[e]);
    }
    const BipartiteGraph g(3, 3, edges);
    const auto d = reduce_biclique(g, 3);
    const bool fails = !check_ejr(d.profile, d.k, d.committee).passed;
    const bool has = oracle::has_biclique(g, 3);
    with_biclique += has ? 1 : 0;
    l.expect(fails == has, "graph mask " + std::to_string(mask));
  }
  l.info("512 graphs, " + std::to_string(with_biclique) + " with a 3x3 biclique");
}

void sjr_examples(Ledger& l) {
  const auto ex5 = build_fixture("no-sjr-committee");
  l.expect(!exists_sjr_committee(ex5.profile, 2).has_value(), "an SJR committee was found");
  std::size_t failing = 0;
  for (const Committee& w : enumerate_committees(4, 2)) failing += check_sjr(ex5.profile, 2, w).passed ? 0 : 1;
  l.expect(failing == 6, std::to_string(failing) + " of 6 committees fail SJR");
  l.expect(check_ejr(ex5.profile, 2, Committee{0, 3}).passed, "{a,d} fails EJR");
  const auto ex6 = build_fixture("pair-with-singletons");
  l.expect(check_sjr(ex6.profile, ex6.k, Committee{0, 2, 3}).passed, "{a,c,d} fails SJR");
}

void oracle_suites(Ledger& l) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = random_instance(seed + 50000, 9, 7, 4);
    const auto& p = inst.profile;
    const auto ss = std::to_string(seed);
    for (const Committee& w : {random_committee(seed, p.num_candidates(), inst.k), find_jr_committee(p, inst.k)}) {
      l.expect(check_jr(p, inst.k, w).passed == oracle::provides_jr(p, inst.k, w), "JR at seed " + ss);
      l.expect(check_sjr(p, inst.k, w).passed == oracle::provides_sjr(p, inst.k, w), "SJR at seed " + ss);
      for (std::size_t level = 1; level <= inst.k; ++level) {
        l.expect(check_ell_jr(p, inst.k, w, level).passed == oracle::provides_ell_jr(p, inst.k, w, level),
                 "ell-JR at seed " + ss);
      }
    }
  }
}

void rule_identities(Ledger& l) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = random_instance(seed + 90000, 10, 8, 4);
    const std::size_t m = inst.profile.num_candidates();
    for (TieBreak tie : {TieBreak::lexicographic, TieBreak::prefer_jr}) {
      l.expect(compute_rule(inst.profile, inst.k, RuleSpec{rule::Av{}, tie}) ==
                   compute_rule(inst.profile, inst.k, RuleSpec{rule::WeightedPav{weights::all_ones(m)}, tie}),
               "AV vs all-ones w-PAV at seed " + std::to_string(seed));
    }
    l.expect(compute_rule(inst.profile, inst.k, RuleSpec{rule::Gav{}}) ==
                 compute_rule(inst.profile, inst.k, RuleSpec{rule::WeightedRav{weights::unit_prefix(m)}}),
             "GAV vs (1,0,...)-RAV at seed " + std::to_string(seed));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "AV leaves a lone voter out; AV with JR-favoring ties provides JR at k=2", 10, av_ignores_singleton},
      {2, "SAV and MAV outputs fail JR for k=2..5", 5, sav_mav_fail_jr},
      {3, "MAV with JR-favoring ties provides JR on equal-size ballots", 120, mav_equal_sizes},
      {4, "RAV fails JR on the 1199-voter profile and its k=11 extension", 1, rav_fails_jr},
      {5, "w-RAV with w2=1/8 fails JR at k=342", 60, weighted_rav_fails_jr},
      {6, "w-PAV with perturbed harmonic weights fails JR and 2-JR", 30, weighted_pav_perturbed},
      {7, "PAV provides EJR and the EJR check matches the oracle", 300, pav_provides_ejr},
      {8, "GAV provides JR and level-wise GAV provides ell-JR", 120, greedy_constructions},
      {9, "biclique reduction fails EJR exactly when a 3x3 biclique exists", 60, biclique_reduction},
      {10, "no SJR committee on the four-voter profile; SJR and EJR verdicts", 1, sjr_examples},
      {11, "JR, ell-JR and SJR checks match the naive definitions", 300, oracle_suites},
      {12, "AV equals all-ones w-PAV and GAV equals (1,0,...)-RAV", 60, rule_identities},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Ledger ledger;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(ledger);
    } catch (const std::exception& e) {
      ledger.expect(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    const bool in_time = took.count() < c.limit_seconds;
    const bool pass = ledger.ok() && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", took.count(), c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << (c.id < 10 ? " " : "") << c.id << "] " << c.name << "  ("
              << timing;
    if (!ledger.info_text().empty()) std::cout << "; " << ledger.info_text();
    std::cout << ")";
    if (!in_time) std::cout << "  over time limit";
    if (!ledger.ok()) std::cout << "  -- " << ledger.notes();
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
