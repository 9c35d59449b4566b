#include "abcvote/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "abcvote/error.hpp"

namespace abcvote::oracle {

namespace {

using Mask = std::uint64_t;

Mask mask_of(const CandidateSet& s) {
  Mask out = 0;
  for (Candidate c : s) out |= Mask{1} << c;
  return out;
}

Mask mask_of(const Committee& w) { return mask_of(w.as_set()); }

std::vector<Mask> voters(const BallotProfile& profile) {
  if (profile.num_candidates() > 64) throw InvalidArgument("oracle supports at most 64 candidates");
  if (profile.num_voters() > 20) throw InvalidArgument("oracle supports at most 20 voters");
  std::vector<Mask> out;
  for (const Ballot& b : profile.ballots()) {
    for (std::uint64_t i = 0; i < b.multiplicity; ++i) out.push_back(mask_of(b.approvals));
  }
  return out;
}

// Calls fn(subset, common approvals) for every voter subset meeting the
// quota k * |subset| >= level * n; stops at the first true.
bool any_subset(const std::vector<Mask>& ballots, std::size_t k, std::size_t level,
                const std::function<bool(Mask subset, Mask common)>& fn) {
  const std::size_t n = ballots.size();
  for (Mask subset = 1; subset < (Mask{1} << n); ++subset) {
    const auto size = static_cast<std::uint64_t>(std::popcount(subset));
    if (!meets_quota(size, level, n, k)) continue;
    Mask common = ~Mask{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (subset >> i & 1) common &= ballots[i];
    }
    if (fn(subset, common)) return true;
  }
  return false;
}

bool each_member(const std::vector<Mask>& ballots, Mask subset, const std::function<bool(Mask)>& pred) {
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if ((subset >> i & 1) && !pred(ballots[i])) return false;
  }
  return true;
}

void require_size(const BallotProfile& profile, std::size_t k, const Committee& w) {
  require_committee_size(profile, k);
  if (w.k() != k) throw InvalidArgument("committee size differs from k");
  w.validate(profile.num_candidates());
}

void for_each_committee(std::size_t m, std::size_t k, const std::function<void(const Committee&)>& fn) {
  if (m > 20) throw InvalidArgument("oracle enumerates at most 20 candidates");
  if (k == 0 || k > m) throw InvalidArgument("committee size out of range");
  // Gosper's hack walks k-bit masks in increasing numeric order.
  Mask set = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << m;
  while (set < limit) {
    std::vector<Candidate> members;
    for (std::size_t c = 0; c < m; ++c) {
      if (set >> c & 1) members.push_back(static_cast<Candidate>(c));
    }
    fn(Committee(std::move(members)));
    const Mask low = set & (0 - set);
    const Mask ripple = set + low;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
}

}  // namespace

bool provides_jr(const BallotProfile& profile, std::size_t k, const Committee& w) {
  require_size(profile, k, w);
  const auto ballots = voters(profile);
  const Mask win = mask_of(w);
  return !any_subset(ballots, k, 1, [&](Mask subset, Mask common) {
    return common != 0 && each_member(ballots, subset, [&](Mask a) { return (a & win) == 0; });
  });
}

bool provides_ell_jr(const BallotProfile& profile, std::size_t k, const Committee& w, std::size_t level) {
  require_size(profile, k, w);
  if (level == 0 || level > k) throw InvalidArgument("level out of range");
  const auto ballots = voters(profile);
  const Mask win = mask_of(w);
  return !any_subset(ballots, k, level, [&](Mask subset, Mask common) {
    return static_cast<std::size_t>(std::popcount(common)) >= level &&
           each_member(ballots, subset, [&](Mask a) { return static_cast<std::size_t>(std::popcount(a & win)) < level; });
  });
}

bool provides_ejr(const BallotProfile& profile, std::size_t k, const Committee& w) {
  for (std::size_t level = 1; level <= k; ++level) {
    if (!provides_ell_jr(profile, k, w, level)) return false;
  }
  return true;
}

bool provides_sjr(const BallotProfile& profile, std::size_t k, const Committee& w) {
  require_size(profile, k, w);
  const auto ballots = voters(profile);
  const Mask win = mask_of(w);
  return !any_subset(ballots, k, 1, [&](Mask, Mask common) { return common != 0 && (common & win) == 0; });
}

bool unanimous(const BallotProfile& profile, const Committee& w) {
  Mask common = ~Mask{0};
  for (Mask a : voters(profile)) common &= a;
  return common == 0 || (common & mask_of(w)) != 0;
}

bool witness_valid(const BallotProfile& profile, std::size_t k, const Committee& w, const AxiomReport& report) {
  if (report.passed) return !report.witness.has_value();
  if (!report.witness) return false;
  const Witness& wit = *report.witness;
  const auto groups = profile.ballots();
  const Mask win = mask_of(w);
  const Mask cands = mask_of(wit.candidates);

  std::uint64_t size = 0;
  Mask common = ~Mask{0};
  for (std::size_t g : wit.voter_groups) {
    if (g >= groups.size()) return false;
    size += groups[g].multiplicity;
    common &= mask_of(groups[g].approvals);
  }
  if (wit.voter_groups.empty() || size != wit.group_size) return false;
  if ((common & cands) != cands) return false;
  if (!meets_quota(size, wit.level, profile.num_voters(), k)) return false;
  const auto hits = [&](std::size_t g) {
    return static_cast<std::size_t>(std::popcount(mask_of(groups[g].approvals) & win));
  };

  switch (report.axiom) {
    case AxiomKind::jr:
    case AxiomKind::ell_jr:
    case AxiomKind::ejr:
      if (report.axiom != AxiomKind::ejr && wit.level != report.level) return false;
      if (wit.candidates.size() < wit.level) return false;
      return std::all_of(wit.voter_groups.begin(), wit.voter_groups.end(),
                         [&](std::size_t g) { return hits(g) < wit.level; });
    case AxiomKind::sjr:
      return common != 0 && (common & win) == 0;
    case AxiomKind::unanimity:
      return size == profile.num_voters() && common != 0 && (common & win) == 0;
  }
  return false;
}

Rational score(const BallotProfile& profile, const Committee& w, const ScoringObjective& objective) {
  const Mask win = mask_of(w);
  const auto ballots = voters(profile);
  if (std::holds_alternative<objective::Mav>(objective)) {
    std::size_t worst = 0;
    for (Mask a : ballots) worst = std::max(worst, static_cast<std::size_t>(std::popcount(a ^ win)));
    return Rational(to_big(worst));
  }
  Rational total = 0;
  for (Mask a : ballots) {
    const auto p = static_cast<std::size_t>(std::popcount(a & win));
    if (std::holds_alternative<objective::Av>(objective)) {
      total += to_big(p);
    } else if (std::holds_alternative<objective::Sav>(objective)) {
      if (a != 0) total += Rational(to_big(p), to_big(static_cast<std::uint64_t>(std::popcount(a))));
    } else {
      const auto& wv = std::get<objective::WeightedPav>(objective).weights;
      for (std::size_t j = 1; j <= p; ++j) total += wv.weight(j);
    }
  }
  total.canonicalize();
  return total;
}

Optimum optimize(const BallotProfile& profile, std::size_t k, const ScoringObjective& objective, TieBreak tiebreak) {
  const bool minimize = std::holds_alternative<objective::Mav>(objective);
  std::optional<Rational> best;
  std::vector<Committee> co_optima;
  for_each_committee(profile.num_candidates(), k, [&](const Committee& w) {
    Rational s = score(profile, w, objective);
    if (!best || (minimize ? s < *best : s > *best)) {
      best = std::move(s);
      co_optima.clear();
      co_optima.push_back(w);
    } else if (s == *best) {
      co_optima.push_back(w);
    }
  });
  std::sort(co_optima.begin(), co_optima.end());
  Optimum out{co_optima.front(), *best, co_optima.size()};
  if (tiebreak == TieBreak::prefer_jr) {
    for (const Committee& w : co_optima) {
      if (provides_jr(profile, k, w)) {
        out.committee = w;
        break;
      }
    }
  }
  return out;
}

Committee sequential(const BallotProfile& profile, std::size_t k, const WeightVector& weights) {
  require_committee_size(profile, k);
  weights.require_length(profile.num_candidates());
  const auto ballots = voters(profile);
  const std::size_t m = profile.num_candidates();
  Mask chosen = 0;
  for (std::size_t round = 0; round < k; ++round) {
    std::optional<std::size_t> pick;
    Rational pick_weight;
    for (std::size_t c = 0; c < m; ++c) {
      if (chosen >> c & 1) continue;
      Rational weight = 0;
      for (Mask a : ballots) {
        if (a >> c & 1) weight += weights.weight(static_cast<std::size_t>(std::popcount(a & chosen)) + 1);
      }
      if (!pick || weight > pick_weight) {
        pick = c;
        pick_weight = weight;
      }
    }
    chosen |= Mask{1} << *pick;
  }
  std::vector<Candidate> members;
  for (std::size_t c = 0; c < m; ++c) {
    if (chosen >> c & 1) members.push_back(static_cast<Candidate>(c));
  }
  return Committee(std::move(members));
}

namespace {

Committee best_jr(const BallotProfile& profile, std::size_t k, const std::function<Rational(const Committee&)>& key) {
  std::optional<Committee> best;
  Rational best_key;
  std::vector<Committee> all;
  for_each_committee(profile.num_candidates(), k, [&](const Committee& w) { all.push_back(w); });
  std::sort(all.begin(), all.end());
  for (const Committee& w : all) {
    if (!provides_jr(profile, k, w)) continue;
    Rational v = key(w);
    if (!best || v > best_key) {
      best = w;
      best_key = std::move(v);
    }
  }
  if (!best) throw Error("no JR committee exists");
  return *best;
}

}  // namespace

Committee ujrav(const BallotProfile& profile, std::size_t k) {
  return best_jr(profile, k, [&](const Committee& w) { return score(profile, w, objective::Av{}); });
}

Committee ejrav(const BallotProfile& profile, std::size_t k) {
  const auto ballots = voters(profile);
  return best_jr(profile, k, [&](const Committee& w) {
    const Mask win = mask_of(w);
    std::size_t least = std::numeric_limits<std::size_t>::max();
    for (Mask a : ballots) least = std::min(least, static_cast<std::size_t>(std::popcount(a & win)));
    return Rational(to_big(least));
  });
}

bool has_biclique(const BipartiteGraph& graph, std::size_t ell) {
  const std::size_t left = graph.left_size();
  if (left > 20 || graph.right_size() > 64) throw InvalidArgument("graph too large for the biclique oracle");
  if (ell == 0) return true;
  std::vector<Mask> right_of(left, 0);
  for (const auto& [l, r] : graph.edges()) right_of[l] |= Mask{1} << r;
  for (Mask subset = 1; subset < (Mask{1} << left); ++subset) {
    if (static_cast<std::size_t>(std::popcount(subset)) != ell) continue;
    Mask common = ~Mask{0};
    for (std::size_t l = 0; l < left; ++l) {
      if (subset >> l & 1) common &= right_of[l];
    }
    if (static_cast<std::size_t>(std::popcount(common)) >= ell) return true;
  }
  return false;
}

}  // namespace abcvote::oracle
