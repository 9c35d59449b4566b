#include "abcvote/axioms.hpp"

#include <algorithm>

#include "abcvote/error.hpp"
#include "abcvote/rules.hpp"
#include "cohesive.hpp"

namespace abcvote {

namespace {

void require_committee(const BallotProfile& profile, std::size_t k, const Committee& committee) {
  require_committee_size(profile, k);
  if (committee.k() != k) {
    throw InvalidArgument("committee has " + std::to_string(committee.k()) + " members but k=" + std::to_string(k));
  }
  committee.validate(profile.num_candidates());
}

std::vector<bool> membership(std::size_t m, const Committee& committee) {
  std::vector<bool> in(m, false);
  for (Candidate c : committee) in[c] = true;
  return in;
}

std::size_t hits(const Ballot& b, const std::vector<bool>& in) {
  return static_cast<std::size_t>(std::count_if(b.approvals.begin(), b.approvals.end(), [&](Candidate c) { return in[c]; }));
}

AxiomReport passing(AxiomKind kind, std::size_t level) {
  AxiomReport r;
  r.axiom = kind;
  r.level = level;
  return r;
}

AxiomReport failing(AxiomKind kind, std::size_t level, Witness w) {
  AxiomReport r = passing(kind, level);
  r.passed = false;
  r.witness = std::move(w);
  return r;
}

}  // namespace

std::string axiom_label(const AxiomReport& report) {
  switch (report.axiom) {
    case AxiomKind::jr:
      return "jr";
    case AxiomKind::ell_jr:
      return "ell-jr:" + std::to_string(report.level);
    case AxiomKind::ejr:
      return "ejr";
    case AxiomKind::sjr:
      return "sjr";
    case AxiomKind::unanimity:
      return "unanimity";
  }
  return "unknown";
}

AxiomReport check_jr(const BallotProfile& profile, std::size_t k, const Committee& committee) {
  require_committee(profile, k, committee);
  const auto in = membership(profile.num_candidates(), committee);
  const auto ballots = profile.ballots();

  // s(c): unrepresented voters approving c.
  std::vector<std::uint64_t> unrepresented_support(profile.num_candidates(), 0);
  for (const Ballot& b : ballots) {
    if (hits(b, in) != 0) continue;
    for (Candidate c : b.approvals) unrepresented_support[c] += b.multiplicity;
  }
  for (std::size_t c = 0; c < profile.num_candidates(); ++c) {
    if (!meets_quota(unrepresented_support[c], 1, profile.num_voters(), k)) continue;
    Witness w;
    w.level = 1;
    w.candidates = CandidateSet{static_cast<Candidate>(c)};
    w.group_size = unrepresented_support[c];
    for (std::size_t g = 0; g < ballots.size(); ++g) {
      if (ballots[g].approvals.contains(static_cast<Candidate>(c)) && hits(ballots[g], in) == 0) {
        w.voter_groups.push_back(g);
      }
    }
    return failing(AxiomKind::jr, 1, std::move(w));
  }
  return passing(AxiomKind::jr, 1);
}

AxiomReport check_ell_jr(const BallotProfile& profile, std::size_t k, const Committee& committee, std::size_t level,
                         const SearchOptions& options) {
  require_committee(profile, k, committee);
  if (level == 0 || level > k) {
    throw InvalidArgument("level " + std::to_string(level) + " outside [1, k=" + std::to_string(k) + "]");
  }
  const auto in = membership(profile.num_candidates(), committee);
  std::vector<std::size_t> restricted;
  for (std::size_t g = 0; g < profile.num_groups(); ++g) {
    if (hits(profile.ballots()[g], in) < level) restricted.push_back(g);
  }
  const std::vector<bool> every_candidate(profile.num_candidates(), true);
  auto match = detail::find_cohesive_set(profile, restricted, every_candidate, level, k, options);
  if (!match) return passing(AxiomKind::ell_jr, level);
  Witness w;
  w.level = level;
  w.candidates = std::move(match->candidates);
  w.voter_groups = std::move(match->groups);
  w.group_size = match->size;
  return failing(AxiomKind::ell_jr, level, std::move(w));
}

AxiomReport check_ejr(const BallotProfile& profile, std::size_t k, const Committee& committee,
                      const SearchOptions& options) {
  require_committee(profile, k, committee);
  for (std::size_t level = 1; level <= k; ++level) {
    auto report = check_ell_jr(profile, k, committee, level, options);
    if (!report.passed) return failing(AxiomKind::ejr, k, std::move(*report.witness));
  }
  return passing(AxiomKind::ejr, k);
}

AxiomReport check_sjr(const BallotProfile& profile, std::size_t k, const Committee& committee) {
  require_committee(profile, k, committee);
  const auto ballots = profile.ballots();
  for (std::size_t c = 0; c < profile.num_candidates(); ++c) {
    const auto cand = static_cast<Candidate>(c);
    if (committee.contains(cand)) continue;
    Witness w;
    std::optional<CandidateSet> common;
    for (std::size_t g = 0; g < ballots.size(); ++g) {
      if (!ballots[g].approvals.contains(cand)) continue;
      w.voter_groups.push_back(g);
      w.group_size += ballots[g].multiplicity;
      common = common ? set_intersection(*common, ballots[g].approvals) : ballots[g].approvals;
    }
    if (!common || !meets_quota(w.group_size, 1, profile.num_voters(), k)) continue;
    if (intersection_size(*common, committee.as_set()) != 0) continue;
    w.level = 1;
    w.candidates = std::move(*common);
    return failing(AxiomKind::sjr, 1, std::move(w));
  }
  return passing(AxiomKind::sjr, 1);
}

AxiomReport check_unanimity(const BallotProfile& profile, std::size_t k, const Committee& committee) {
  require_committee(profile, k, committee);
  const auto ballots = profile.ballots();
  CandidateSet common = ballots.front().approvals;
  for (const Ballot& b : ballots) common = set_intersection(common, b.approvals);
  if (common.empty() || intersection_size(common, committee.as_set()) != 0) {
    return passing(AxiomKind::unanimity, 1);
  }
  Witness w;
  w.candidates = std::move(common);
  w.group_size = profile.num_voters();
  for (std::size_t g = 0; g < ballots.size(); ++g) w.voter_groups.push_back(g);
  return failing(AxiomKind::unanimity, 1, std::move(w));
}

Committee find_jr_committee(const BallotProfile& profile, std::size_t k) {
  return compute_sequential_rule(profile, k, weights::unit_prefix(profile.num_candidates()));
}

Committee find_ell_jr_committee(const BallotProfile& profile, std::size_t k, std::size_t level,
                                const SearchOptions& options) {
  require_committee_size(profile, k);
  if (level == 0 || level > k) {
    throw InvalidArgument("level " + std::to_string(level) + " outside [1, k=" + std::to_string(k) + "]");
  }
  const std::size_t m = profile.num_candidates();
  std::vector<bool> chosen(m, false);
  std::size_t picked = 0;
  std::vector<std::size_t> remaining(profile.num_groups());
  for (std::size_t g = 0; g < remaining.size(); ++g) remaining[g] = g;

  // The set may overlap W. Remaining ballots hold fewer than `level` members,
  // so every match adds at least one new candidate. Restricting matches to
  // non-members would stall on a group whose common set is partly elected.
  const std::vector<bool> allowed(m, true);
  while (picked + level <= k) {
    auto match = detail::find_cohesive_set(profile, remaining, allowed, level, k, options);
    if (!match) break;
    for (Candidate c : match->candidates) {
      if (!chosen[c]) {
        chosen[c] = true;
        ++picked;
      }
    }
    std::erase_if(remaining, [&](std::size_t g) { return hits(profile.ballots()[g], chosen) >= level; });
  }
  for (std::size_t c = 0; c < m && picked < k; ++c) {
    if (!chosen[c]) {
      chosen[c] = true;
      ++picked;
    }
  }
  std::vector<Candidate> members;
  for (std::size_t c = 0; c < m; ++c) {
    if (chosen[c]) members.push_back(static_cast<Candidate>(c));
  }
  return Committee(std::move(members));
}

std::optional<Committee> exists_sjr_committee(const BallotProfile& profile, std::size_t k,
                                              const SearchOptions& options, std::optional<std::uint64_t> budget) {
  require_committee_size(profile, k);
  auto result = best_committee_by(
      profile.num_candidates(), k,
      [&](const Committee& w) -> std::optional<Rational> {
        if (check_sjr(profile, k, w).passed) return Rational(0);
        return std::nullopt;
      },
      options, budget, /*stop_at_first=*/true);
  return result.committee;
}

}  // namespace abcvote
