#include <algorithm>
#include <functional>
#include <set>

#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"

namespace abcvote {

namespace {

Rational frac(long num, long den = 1) { return make_rational(num, den); }

const std::vector<FixtureInfo>& catalog() {
  static const std::vector<FixtureInfo> entries = {
      {"av-ignores-singleton", "AV passes over a lone voter's candidate for k >= 3", {{"k", frac(3)}}},
      {"sav-favors-small-ballots", "SAV picks Y and leaves the voter approving X unrepresented", {{"k", frac(2)}}},
      {"mav-favors-large-ballots", "MAV picks X and never the candidate z of k voters", {{"k", frac(2)}}},
      {"mav-equal-size-ballots",
       "random profile where every ballot has exactly k candidates; MAV with JR-favoring ties provides JR",
       {{"seed", frac(0)}, {"n", frac(8)}, {"m", frac(6)}, {"k", frac(3)}}},
      {"rav-fails-jr", "1199 voters over 11 candidates on which RAV fails JR at k = 10", {}},
      {"rav-fails-jr-extended", "the RAV profile padded with 120-voter singletons for k > 10", {{"k", frac(11)}}},
      {"weighted-rav-fails-jr", "w-RAV with w2 > 0 fails JR at k0 = (2s+2)(2s+3)",
       {{"s", frac(8)}, {"w2", frac(1, 8)}}},
      {"wpav-overweight", "w-PAV with w_j = 1/j + eps fails JR", {{"j", frac(2)}, {"eps", frac(1, 4)}, {"k", frac(4)}}},
      {"wpav-underweight", "w-PAV with w_j = 1/j - eps fails j-JR",
       {{"j", frac(2)}, {"eps", frac(1, 8)}, {"k", frac(11)}}},
      {"disjoint-pairs", "k voters with disjoint pairs: JR forces one member per pair", {{"k", frac(3)}}},
      {"jr-without-unanimity", "a committee can provide JR and still drop the unanimous candidate", {{"k", frac(2)}}},
      {"no-sjr-committee", "four voters, k = 2: no committee provides SJR", {}},
      {"pair-with-singletons", "two {a,b} voters plus singletons c and d, k = 3: {a,c,d} provides SJR", {}},
      {"large-cohesive-group", "98 voters approve a and b, c and d have one voter each, k = 3", {}},
      {"mav-fails-ejr", "MAV takes one member from each block even though five voters share one", {}},
  };
  return entries;
}

class Params {
 public:
  Params(const FixtureInfo& info, const FixtureParams& given) : resolved_(info.defaults.begin(), info.defaults.end()) {
    for (const auto& [key, value] : given) {
      if (!resolved_.contains(key)) {
        throw InvalidArgument("fixture " + info.name + " has no parameter '" + key + "'");
      }
      resolved_[key] = value;
      given_.insert(key);
    }
  }

  bool given(const std::string& key) const { return given_.contains(key); }
  void set_default(const std::string& key, Rational value) {
    if (!given(key)) resolved_[key] = std::move(value);
  }

  const Rational& rational(const std::string& key) const { return resolved_.at(key); }

  std::size_t integer(const std::string& key) const {
    const Rational& v = resolved_.at(key);
    if (v.get_den() != 1 || v < 0 || !v.get_num().fits_ulong_p()) {
      throw ConstraintViolation(key + " must be a non-negative integer (got " + to_fraction_string(v) + ")");
    }
    return v.get_num().get_ui();
  }

  const std::map<std::string, Rational>& all() const { return resolved_; }

 private:
  std::map<std::string, Rational> resolved_;
  std::set<std::string> given_;
};

void require(bool ok, const std::string& inequality, const std::string& values) {
  if (!ok) throw ConstraintViolation("constraint " + inequality + " violated (" + values + ")");
}

std::string show(const Rational& v) { return to_fraction_string(v); }

BigInt ceil_of(const Rational& v) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q;
}

Ballot ballot(std::vector<Candidate> approvals, std::uint64_t multiplicity = 1) {
  return Ballot{CandidateSet(std::move(approvals)), multiplicity};
}

std::vector<Candidate> iota(Candidate first, std::size_t count) {
  std::vector<Candidate> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<Candidate>(first + i);
  return out;
}

Committee range_committee(Candidate first, std::size_t count) { return Committee(iota(first, count)); }

RuleSpec spec(RuleKind kind, TieBreak tiebreak = TieBreak::lexicographic) { return RuleSpec{std::move(kind), tiebreak}; }

/// Harmonic weights with w_j replaced by `wj`; neighbours are clamped so the
/// vector stays non-increasing.
WeightVector perturbed_harmonic(std::size_t m, std::size_t j, const Rational& wj) {
  std::vector<Rational> w(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const Rational h(1, static_cast<unsigned long>(i));
    if (i == j) {
      w[i - 1] = wj;
    } else if (i < j) {
      w[i - 1] = std::max(h, wj);
    } else {
      w[i - 1] = std::min(h, wj);
    }
  }
  return WeightVector(std::move(w));
}

std::vector<std::string> numbered(const std::string& stem, std::size_t first, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

std::vector<std::string> letters(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& more) {
  to.insert(to.end(), more.begin(), more.end());
}

expect::AxiomVerdict verdict(AxiomKind axiom, std::size_t level, Committee committee, bool passes) {
  expect::AxiomVerdict v;
  v.axiom = axiom;
  v.level = level;
  v.committee = std::move(committee);
  v.passes = passes;
  return v;
}

expect::AxiomVerdict failure(AxiomKind axiom, std::size_t level, Committee committee, std::uint64_t size,
                             std::optional<CandidateSet> candidates, std::optional<std::size_t> witness_level = {}) {
  auto v = verdict(axiom, level, std::move(committee), false);
  v.witness_size = size;
  v.witness_candidates = std::move(candidates);
  v.witness_level = witness_level;
  return v;
}

// Each builder fills profile, k, labels, weights and expectations.
using Builder = std::function<void(Fixture&, Params&)>;

void av_ignores_singleton(Fixture& f, Params& p) {
  const std::size_t k = p.integer("k");
  require(k >= 3, "k >= 3", "k=" + std::to_string(k));
  // c0 -> 0, c1..ck -> 1..k. One voter approves c0, the other k-1 approve c1..ck.
  f.profile = BallotProfile(k + 1, {ballot({0}), ballot(iota(1, k), k - 1)});
  f.k = k;
  f.labels = numbered("c", 0, k + 1);
  const Committee top = range_committee(1, k);
  f.expectations = {
      {"AV elects c1..ck", expect::RuleCommittee{spec(rule::Av{}), top}},
      {"AV score of c1..ck is k(k-1)",
       expect::ScoreEquals{objective::Av{}, top, Rational(to_big(k * (k - 1)))}},
      {"c1..ck fails JR on c0's lone voter", failure(AxiomKind::jr, 1, top, 1, CandidateSet{0})},
      {"UJRAV elects c0..c(k-1)", expect::RuleCommittee{spec(rule::Ujrav{}), range_committee(0, k)}},
      {"GAV provides JR", expect::RulePasses{spec(rule::Gav{}), AxiomKind::jr, 1, true}},
  };
}

void sav_favors_small_ballots(Fixture& f, Params& p) {
  const std::size_t k = p.integer("k");
  require(k >= 2, "k >= 2", "k=" + std::to_string(k));
  // x1..x(k+1) -> 0..k, y1..yk -> k+1..2k. A1 = X, A2 = {y1,y2}, Ai = {yi}.
  const auto y = static_cast<Candidate>(k + 1);
  std::vector<Ballot> ballots = {ballot(iota(0, k + 1)), ballot({y, static_cast<Candidate>(y + 1)})};
  for (std::size_t i = 3; i <= k; ++i) ballots.push_back(ballot({static_cast<Candidate>(y + i - 1)}));
  f.profile = BallotProfile(2 * k + 1, std::move(ballots));
  f.k = k;
  f.labels = numbered("x", 1, k + 1);
  append(f.labels, numbered("y", 1, k));
  const Committee big_y = range_committee(y, k);
  f.expectations = {
      {"SAV elects Y", expect::RuleCommittee{spec(rule::Sav{}), big_y}},
      {"SAV score of Y is k-1", expect::ScoreEquals{objective::Sav{}, big_y, Rational(to_big(k - 1))}},
      {"Y fails JR on the voter approving X", failure(AxiomKind::jr, 1, big_y, 1, CandidateSet{0})},
  };
}

void mav_favors_large_ballots(Fixture& f, Params& p) {
  const std::size_t k = p.integer("k");
  require(k >= 2, "k >= 2", "k=" + std::to_string(k));
  // x1..xk -> 0..k-1, y1..yk -> k..2k-1, z -> 2k. Ai = {xi, yi}, then k voters on {z}.
  std::vector<Ballot> ballots;
  for (std::size_t i = 0; i < k; ++i) ballots.push_back(ballot({static_cast<Candidate>(i), static_cast<Candidate>(k + i)}));
  const auto z = static_cast<Candidate>(2 * k);
  ballots.push_back(ballot({z}, k));
  f.profile = BallotProfile(2 * k + 1, std::move(ballots));
  f.k = k;
  f.labels = numbered("x", 1, k);
  append(f.labels, numbered("y", 1, k));
  f.labels.push_back("z");
  const Committee big_x = range_committee(0, k);
  f.expectations = {
      {"MAV elects X", expect::RuleCommittee{spec(rule::Mav{}), big_x}},
      {"MAV score of X is k+1", expect::ScoreEquals{objective::Mav{}, big_x, Rational(to_big(k + 1))}},
      {"X fails JR on the z voters", failure(AxiomKind::jr, 1, big_x, k, CandidateSet{z})},
  };
}

void mav_equal_size_ballots(Fixture& f, Params& p) {
  const std::size_t n = p.integer("n");
  const std::size_t m = p.integer("m");
  const std::size_t k = p.integer("k");
  require(n >= 1, "n >= 1", "n=" + std::to_string(n));
  require(k >= 1 && k <= m, "1 <= k <= m", "k=" + std::to_string(k) + ", m=" + std::to_string(m));
  f.profile = random_profile(p.integer("seed"), n, m, culture::FixedSize{k});
  f.k = k;
  f.labels = numbered("c", 0, m);
  f.expectations = {
      {"MAV with JR-favoring ties provides JR",
       expect::RulePasses{spec(rule::Mav{}, TieBreak::prefer_jr), AxiomKind::jr, 1, true}},
  };
}

// The 1199-voter profile, with 120-voter singletons appended for k > 10.
void rav_profile(Fixture& f, std::size_t k) {
  std::vector<Ballot> ballots = {
      ballot({0, 1}, 81), ballot({0, 2}, 81), ballot({1}, 80), ballot({2}, 80),  //
      ballot({3, 4}, 81), ballot({3, 5}, 81), ballot({4}, 80), ballot({5}, 80),  //
      ballot({6, 7}, 49), ballot({6, 8}, 49), ballot({6, 9}, 49),                //
      ballot({7}, 96),    ballot({8}, 96),    ballot({9}, 96),                   //
      ballot({10}, 120),
  };
  for (std::size_t extra = 0; extra + 10 < k; ++extra) ballots.push_back(ballot({static_cast<Candidate>(11 + extra)}, 120));
  const std::size_t m = 11 + (k - 10);
  f.profile = BallotProfile(m, std::move(ballots));
  f.k = k;
  f.labels = numbered("c", 1, m);
  f.weights = weights::harmonic(m);
}

void rav_fails_jr(Fixture& f, Params&) {
  rav_profile(f, 10);
  const Committee chosen = range_committee(0, 10);
  expect::SequentialTrace trace{*f.weights, {0, 3, 6}, {}};
  trace.round_weights = {
      {1, 0, frac(162)},      {1, 3, frac(162)},      {1, 6, frac(147)}, {1, 10, frac(120)},
      {3, 6, frac(147)},      {3, 1, frac(241, 2)},   {4, 7, frac(241, 2)},
  };
  f.expectations = {
      {"RAV picks c1, c4, c7 first with the stated weights", std::move(trace)},
      {"RAV elects c1..c10", expect::RuleCommittee{spec(rule::Rav{}), chosen}},
      {"RAV leaves out c11", expect::RuleExcludes{spec(rule::Rav{}), {10}}},
      {"c1..c10 fails JR on the 120 voters of c11", failure(AxiomKind::jr, 1, chosen, 120, CandidateSet{10})},
  };
}

void rav_fails_jr_extended(Fixture& f, Params& p) {
  const std::size_t k = p.integer("k");
  require(k > 10, "k > 10", "k=" + std::to_string(k));
  rav_profile(f, k);
  const auto left_out = static_cast<Candidate>(k);
  const Committee chosen = range_committee(0, k);
  f.expectations = {
      {"RAV still picks c1, c4, c7 first", expect::SequentialTrace{*f.weights, {0, 3, 6}, {}}},
      {"RAV elects the first k candidates", expect::RuleCommittee{spec(rule::Rav{}), chosen}},
      {"RAV leaves out the last 120-voter singleton", expect::RuleExcludes{spec(rule::Rav{}), {left_out}}},
      {"the committee fails JR with a 120-voter group",
       failure(AxiomKind::jr, 1, chosen, 120, CandidateSet{left_out})},
  };
}

void weighted_rav_fails_jr(Fixture& f, Params& p) {
  const std::size_t s = p.integer("s");
  require(s >= 8, "s >= 8", "s=" + std::to_string(s));
  p.set_default("w2", Rational(1, static_cast<unsigned long>(s)));
  const Rational w2 = p.rational("w2");
  require(w2 * static_cast<unsigned long>(s) >= 1, "w2 >= 1/s", "w2=" + show(w2) + ", s=" + std::to_string(s));
  require(w2 <= 1, "w2 <= w1 = 1", "w2=" + show(w2));

  // c[i,j] -> (i-1)(2s+1) + (j-1) for i <= 2s+3, j <= 2s+1; then c[1..2s+3]; then x, y.
  const std::size_t rows = 2 * s + 3;
  const std::size_t cols = 2 * s + 1;
  const auto c2 = static_cast<Candidate>(rows * cols);
  const auto x = static_cast<Candidate>(c2 + rows);
  const auto y = static_cast<Candidate>(x + 1);
  const std::size_t m = y + 1;
  const std::uint64_t s2 = s * s;
  const std::uint64_t s3 = s2 * s;

  std::vector<Ballot> ballots;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto cij = static_cast<Candidate>(i * cols + j);
      ballots.push_back(ballot({cij}, 2 * s3 - s));
      ballots.push_back(ballot({cij, static_cast<Candidate>(c2 + i)}, s2));
    }
  }
  ballots.push_back(ballot({x}, 2 * s3 - 1));
  ballots.push_back(ballot({y}, s2 - 7 * s - 5));
  f.profile = BallotProfile(m, std::move(ballots));
  f.k = rows * cols + rows;
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) f.labels.push_back("c[" + std::to_string(i) + "," + std::to_string(j) + "]");
  }
  append(f.labels, numbered("c", 1, rows));
  f.labels.push_back("x");
  f.labels.push_back("y");
  f.weights = weights::constant_tail(m, w2);

  std::vector<Candidate> order = iota(c2, rows);
  for (Candidate c = 0; c < c2; ++c) order.push_back(c);
  const Committee chosen = range_committee(0, f.k);
  expect::SequentialTrace trace{*f.weights, std::move(order), {}};
  const std::uint64_t c2_weight = 2 * s3 + s2;
  const std::uint64_t c1_weight = 2 * s3 + s2 - s;
  trace.round_weights = {
      {1, c2, Rational(to_big(c2_weight))},
      {1, 0, Rational(to_big(c1_weight))},
      {1, x, Rational(to_big(2 * s3 - 1))},
      {1, y, Rational(to_big(s2 - 7 * s - 5))},
      {rows + 1, 0, Rational(to_big(2 * s3 - s)) + w2 * static_cast<unsigned long>(s2)},
  };
  f.expectations = {
      {"w-RAV elects C2, then C1", std::move(trace)},
      {"w-RAV leaves out x", expect::RuleExcludes{spec(rule::WeightedRav{*f.weights}), {x}}},
      {"the committee fails JR on the 2s^3-1 voters of x",
       failure(AxiomKind::jr, 1, chosen, 2 * s3 - 1, CandidateSet{x})},
  };
}

void wpav_overweight(Fixture& f, Params& p) {
  const std::size_t j = p.integer("j");
  const Rational eps = p.rational("eps");
  require(j >= 2, "j > 1", "j=" + std::to_string(j));
  require(eps > 0, "eps > 0", "eps=" + show(eps));
  const Rational wj = Rational(1, static_cast<unsigned long>(j)) + eps;
  require(wj <= 1, "1/j + eps <= w1 = 1", "j=" + std::to_string(j) + ", eps=" + show(eps));
  // Smallest k with j | k and k > ceil(1/(eps j)) + 1 unless given.
  const BigInt floor_k = ceil_of(Rational(1) / (eps * static_cast<unsigned long>(j))) + 2;
  if (!p.given("k")) {
    BigInt k0 = floor_k;
    const BigInt jj = to_big(j);
    if (k0 % jj != 0) k0 += jj - k0 % jj;
    p.set_default("k", Rational(k0));
  }
  const std::size_t k = p.integer("k");
  require(k % j == 0, "j divides k", "j=" + std::to_string(j) + ", k=" + std::to_string(k));
  require(to_big(k) >= floor_k, "k > ceil(1/(eps j)) + 1", "k=" + std::to_string(k) + ", eps=" + show(eps));

  // c -> 0, then C1..Ct in blocks of j. N0: k voters on {c}; Ni: j(k-1) voters on Ci.
  const std::size_t t = k / j;
  const std::size_t m = k + 1;
  std::vector<Ballot> ballots = {ballot({0}, k)};
  for (std::size_t i = 0; i < t; ++i) ballots.push_back(ballot(iota(static_cast<Candidate>(1 + i * j), j), j * (k - 1)));
  f.profile = BallotProfile(m, std::move(ballots));
  f.k = k;
  f.labels = {"c"};
  for (std::size_t i = 1; i <= t; ++i) append(f.labels, numbered("C" + std::to_string(i) + ".", 1, j));
  f.weights = perturbed_harmonic(m, j, wj);

  const Committee without_c = range_committee(1, k);
  std::vector<Candidate> swapped = {0};
  for (Candidate c = 2; c <= k; ++c) swapped.push_back(c);
  const Rational gap = eps * static_cast<unsigned long>(j * (k - 1)) - 1;
  f.expectations = {
      {"w-PAV elects everything but c", expect::RuleCommittee{spec(rule::WeightedPav{*f.weights}), without_c}},
      {"swapping c in lowers the score by j(k-1)eps - 1 > 0",
       expect::ScoreDifference{objective::WeightedPav{*f.weights}, without_c, Committee(std::move(swapped)), gap}},
      {"the w-PAV committee fails JR on c's k voters", failure(AxiomKind::jr, 1, without_c, k, CandidateSet{0})},
  };
}

void wpav_underweight(Fixture& f, Params& p) {
  const std::size_t j = p.integer("j");
  const Rational eps = p.rational("eps");
  require(j >= 2, "j > 1", "j=" + std::to_string(j));
  require(eps > 0, "eps > 0", "eps=" + show(eps));
  const Rational wj = Rational(1, static_cast<unsigned long>(j)) - eps;
  require(wj >= 0, "eps <= 1/j", "j=" + std::to_string(j) + ", eps=" + show(eps));
  const BigInt floor_k = ceil_of(Rational(1) / eps) + to_big(j) + 1;
  if (!p.given("k")) p.set_default("k", Rational(floor_k));
  const std::size_t k = p.integer("k");
  require(to_big(k) >= floor_k, "k > j + ceil(1/eps)", "k=" + std::to_string(k) + ", j=" + std::to_string(j));

  // C0 -> 0..j-1, C1 = c1..c(k-j+1) -> j..k. N0: j(k-j+1) voters on C0; Ni: k-j voters on {ci}.
  const std::size_t m = k + 1;
  std::vector<Ballot> ballots = {ballot(iota(0, j), j * (k - j + 1))};
  for (std::size_t i = 0; i < k - j + 1; ++i) ballots.push_back(ballot({static_cast<Candidate>(j + i)}, k - j));
  f.profile = BallotProfile(m, std::move(ballots));
  f.k = k;
  f.labels = numbered("C0.", 1, j);
  append(f.labels, numbered("c", 1, k - j + 1));
  f.weights = perturbed_harmonic(m, j, wj);

  std::vector<Candidate> keep_c1;
  for (Candidate c = 0; c <= k; ++c) {
    if (c != j - 1) keep_c1.push_back(c);
  }
  const Committee chosen(std::move(keep_c1));
  const Committee keep_c0 = range_committee(0, k);
  const Rational gap = Rational(to_big(k - j)) - wj * static_cast<unsigned long>(j * (k - j + 1));
  f.expectations = {
      {"w-PAV elects C1 and all but one of C0",
       expect::RuleCommittee{spec(rule::WeightedPav{*f.weights}), chosen}},
      {"dropping a C0 member beats dropping a C1 member by (k-j) - j(k-j+1)w_j > 0",
       expect::ScoreDifference{objective::WeightedPav{*f.weights}, chosen, keep_c0, gap}},
      {"the w-PAV committee fails j-JR on the C0 voters",
       failure(AxiomKind::ell_jr, j, chosen, j * (k - j + 1), CandidateSet(iota(0, j)))},
  };
}

void disjoint_pairs(Fixture& f, Params& p) {
  const std::size_t k = p.integer("k");
  require(k >= 2, "k > 1", "k=" + std::to_string(k));
  // a_i -> 2(i-1), b_i -> 2(i-1)+1.
  std::vector<Ballot> ballots;
  for (std::size_t i = 0; i < k; ++i) {
    ballots.push_back(ballot({static_cast<Candidate>(2 * i), static_cast<Candidate>(2 * i + 1)}));
  }
  f.profile = BallotProfile(2 * k, std::move(ballots));
  f.k = k;
  for (std::size_t i = 1; i <= k; ++i) {
    f.labels.push_back("a" + std::to_string(i));
    f.labels.push_back("b" + std::to_string(i));
  }
  std::vector<Candidate> all_a;
  for (std::size_t i = 0; i < k; ++i) all_a.push_back(static_cast<Candidate>(2 * i));
  std::vector<Candidate> front = iota(0, k);
  // The first k candidates cover pairs 0..(k-1)/2; the next pair's voter is the witness.
  const auto first_missed = static_cast<Candidate>(2 * ((k - 1) / 2 + 1));
  f.expectations = {
      {"GAV provides JR", expect::RulePasses{spec(rule::Gav{}), AxiomKind::jr, 1, true}},
      {"one member per pair provides JR", verdict(AxiomKind::jr, 1, Committee(std::move(all_a)), true)},
      {"the first k candidates leave some pair unrepresented",
       failure(AxiomKind::jr, 1, Committee(std::move(front)), 1, CandidateSet{first_missed})},
      {"unanimity holds vacuously", verdict(AxiomKind::unanimity, 1, range_committee(0, k), true)},
  };
}

void jr_without_unanimity(Fixture& f, Params& p) {
  const std::size_t k = p.integer("k");
  require(k >= 1, "k > 0", "k=" + std::to_string(k));
  // a -> 0, b_i -> i. Ai = {a, b_i}, A(k+1) = {a}.
  std::vector<Ballot> ballots;
  for (std::size_t i = 1; i <= k; ++i) ballots.push_back(ballot({0, static_cast<Candidate>(i)}));
  ballots.push_back(ballot({0}));
  f.profile = BallotProfile(k + 1, std::move(ballots));
  f.k = k;
  f.labels = {"a"};
  append(f.labels, numbered("b", 1, k));
  const Committee all_b = range_committee(1, k);
  f.expectations = {
      {"b1..bk drops the unanimous candidate a",
       failure(AxiomKind::unanimity, 1, all_b, k + 1, CandidateSet{0})},
      {"b1..bk still provides JR", verdict(AxiomKind::jr, 1, all_b, true)},
      {"GAV elects a, b1..b(k-1)", expect::RuleCommittee{spec(rule::Gav{}), range_committee(0, k)}},
      {"GAV is unanimous here", expect::RulePasses{spec(rule::Gav{}), AxiomKind::unanimity, 1, true}},
  };
}

void no_sjr_committee(Fixture& f, Params&) {
  // a, b, c, d -> 0..3.
  f.profile = BallotProfile(4, {ballot({0, 1}), ballot({0, 2}), ballot({3, 1}), ballot({3, 2})});
  f.k = 2;
  f.labels = letters(4);
  const Committee ad{0, 3};
  f.expectations = {
      {"no committee provides SJR", expect::SjrExists{false}},
      {"{a,d} provides EJR", verdict(AxiomKind::ejr, 2, ad, true)},
      {"{a,d} fails SJR on the two voters of b", failure(AxiomKind::sjr, 1, ad, 2, CandidateSet{1})},
      {"EJRAV elects {a,d}", expect::RuleCommittee{spec(rule::Ejrav{}), ad}},
      {"UJRAV elects {a,b}", expect::RuleCommittee{spec(rule::Ujrav{}), Committee{0, 1}}},
  };
}

void pair_with_singletons(Fixture& f, Params&) {
  f.profile = BallotProfile(4, {ballot({0, 1}, 2), ballot({2}), ballot({3})});
  f.k = 3;
  f.labels = letters(4);
  const Committee acd{0, 2, 3};
  f.expectations = {
      {"{a,c,d} provides SJR", verdict(AxiomKind::sjr, 1, acd, true)},
      // The two {a,b} voters fall short of 2n/k = 8/3, so the formal definition is met.
      {"{a,c,d} provides EJR as formally defined", verdict(AxiomKind::ejr, 3, acd, true)},
      {"an SJR committee exists", expect::SjrExists{true}},
  };
}

void large_cohesive_group(Fixture& f, Params&) {
  f.profile = BallotProfile(4, {ballot({0, 1}, 98), ballot({2}), ballot({3})});
  f.k = 3;
  f.labels = letters(4);
  const Committee acd{0, 2, 3};
  const Committee abc{0, 1, 2};
  f.expectations = {
      {"GAV elects {a,c,d}", expect::RuleCommittee{spec(rule::Gav{}), acd}},
      {"PAV elects {a,b,c}", expect::RuleCommittee{spec(rule::Pav{}), abc}},
      {"PAV score of {a,b,c} is 148", expect::ScoreEquals{objective::WeightedPav{weights::harmonic(4)}, abc, frac(148)}},
      {"{a,c,d} fails 2-JR on the 98 voters", failure(AxiomKind::ell_jr, 2, acd, 98, CandidateSet{0, 1})},
      {"{a,b,c} provides 2-JR", verdict(AxiomKind::ell_jr, 2, abc, true)},
      {"{a,c,d} fails EJR at level 2", failure(AxiomKind::ejr, 3, acd, 98, CandidateSet{0, 1}, 2)},
      {"2-GAV elects {a,b,c}", expect::EllJrConstruction{2, abc}},
  };
}

void mav_fails_ejr(Fixture& f, Params&) {
  // Block Ci occupies 4(i-1)..4i-1.
  f.profile = BallotProfile(16, {ballot(iota(0, 4)), ballot(iota(4, 4)), ballot(iota(8, 4)), ballot(iota(12, 4), 5)});
  f.k = 4;
  for (std::size_t i = 1; i <= 4; ++i) append(f.labels, numbered("C" + std::to_string(i) + ".", 1, 4));
  const Committee spread{0, 4, 8, 12};
  f.expectations = {
      {"MAV takes one member per block", expect::RuleCommittee{spec(rule::Mav{}), spread}},
      {"MAV score is 6", expect::ScoreEquals{objective::Mav{}, spread, frac(6)}},
      {"the MAV committee provides JR", verdict(AxiomKind::jr, 1, spread, true)},
      {"the MAV committee fails EJR on the five C4 voters",
       failure(AxiomKind::ejr, 4, spread, 5, std::nullopt, 2)},
  };
}

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"av-ignores-singleton", av_ignores_singleton},
      {"sav-favors-small-ballots", sav_favors_small_ballots},
      {"mav-favors-large-ballots", mav_favors_large_ballots},
      {"mav-equal-size-ballots", mav_equal_size_ballots},
      {"rav-fails-jr", rav_fails_jr},
      {"rav-fails-jr-extended", rav_fails_jr_extended},
      {"weighted-rav-fails-jr", weighted_rav_fails_jr},
      {"wpav-overweight", wpav_overweight},
      {"wpav-underweight", wpav_underweight},
      {"disjoint-pairs", disjoint_pairs},
      {"jr-without-unanimity", jr_without_unanimity},
      {"no-sjr-committee", no_sjr_committee},
      {"pair-with-singletons", pair_with_singletons},
      {"large-cohesive-group", large_cohesive_group},
      {"mav-fails-ejr", mav_fails_ejr},
  };
  return table;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() { return catalog(); }

Fixture build_fixture(std::string_view name, const FixtureParams& params) {
  const auto& entries = catalog();
  const auto info = std::find_if(entries.begin(), entries.end(), [&](const FixtureInfo& e) { return e.name == name; });
  if (info == entries.end()) throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
  Params p(*info, params);
  Fixture f{info->name, info->summary, {}, BallotProfile(1, {ballot({})}), 0, {}, std::nullopt, {}};
  builders().find(name)->second(f, p);
  f.params = p.all();
  return f;
}

}  // namespace abcvote
