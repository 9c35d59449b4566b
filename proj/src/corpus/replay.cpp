#include <algorithm>

#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"

namespace abcvote {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct Verdict {
  bool passed;
  std::string detail;
};

Verdict ok() { return {true, ""}; }
Verdict mismatch(std::string detail) { return {false, std::move(detail)}; }

AxiomReport run_axiom(const Fixture& f, AxiomKind axiom, std::size_t level, const Committee& w,
                      const SearchOptions& search) {
  switch (axiom) {
    case AxiomKind::jr:
      return check_jr(f.profile, f.k, w);
    case AxiomKind::ell_jr:
      return check_ell_jr(f.profile, f.k, w, level, search);
    case AxiomKind::ejr:
      return check_ejr(f.profile, f.k, w, search);
    case AxiomKind::sjr:
      return check_sjr(f.profile, f.k, w);
    case AxiomKind::unanimity:
      return check_unanimity(f.profile, f.k, w);
  }
  throw InvalidArgument("unknown axiom");
}

std::string verdict_word(bool passed) { return passed ? "pass" : "fail"; }

Verdict evaluate(const Fixture& f, const ExpectationCheck& check, const RuleOptions& options) {
  return std::visit(
      overloaded{
          [&](const expect::RuleCommittee& e) {
            const Committee got = compute_rule(f.profile, f.k, e.rule, options);
            return got == e.expected ? ok() : mismatch("got {" + got.to_string() + "}");
          },
          [&](const expect::RuleExcludes& e) {
            const Committee got = compute_rule(f.profile, f.k, e.rule, options);
            for (Candidate c : e.excluded) {
              if (got.contains(c)) return mismatch("committee {" + got.to_string() + "} contains " + std::to_string(c));
            }
            return ok();
          },
          [&](const expect::RulePasses& e) {
            const Committee got = compute_rule(f.profile, f.k, e.rule, options);
            const auto report = run_axiom(f, e.axiom, e.level, got, options.search);
            if (report.passed == e.passes) return ok();
            return mismatch("committee {" + got.to_string() + "} gives " + verdict_word(report.passed));
          },
          [&](const expect::ScoreEquals& e) {
            const Score got = score_committee(f.profile, e.committee, e.objective);
            return got.value() == e.value ? ok() : mismatch("score " + got.fraction());
          },
          [&](const expect::ScoreDifference& e) {
            const Rational got = score_committee(f.profile, e.first, e.objective).value() -
                                 score_committee(f.profile, e.second, e.objective).value();
            return got == e.difference ? ok() : mismatch("difference " + to_fraction_string(got));
          },
          [&](const expect::AxiomVerdict& e) {
            const auto report = run_axiom(f, e.axiom, e.level, e.committee, options.search);
            if (report.passed != e.passes) return mismatch("verdict " + verdict_word(report.passed));
            if (report.passed) return ok();
            const Witness& w = *report.witness;
            if (e.witness_size && w.group_size != *e.witness_size) {
              return mismatch("witness group of " + std::to_string(w.group_size) + " voters");
            }
            if (e.witness_candidates && w.candidates != *e.witness_candidates) {
              return mismatch("witness candidates {" + join_indices(w.candidates) + "}");
            }
            if (e.witness_level && w.level != *e.witness_level) {
              return mismatch("witness level " + std::to_string(w.level));
            }
            return ok();
          },
          [&](const expect::SequentialTrace& e) {
            const auto trace = trace_sequential_rule(f.profile, f.k, e.weights, !e.round_weights.empty());
            if (trace.order.size() < e.order_prefix.size() ||
                !std::equal(e.order_prefix.begin(), e.order_prefix.end(), trace.order.begin())) {
              std::string got;
              for (std::size_t i = 0; i < std::min(trace.order.size(), e.order_prefix.size()); ++i) {
                got += (i ? "," : "") + std::to_string(trace.order[i]);
              }
              return mismatch("selection order starts " + got);
            }
            for (const auto& rw : e.round_weights) {
              const auto& weights = trace.rounds.at(rw.round - 1).weights;
              const auto& got = weights.at(rw.candidate);
              if (!got || *got != rw.weight) {
                return mismatch("round " + std::to_string(rw.round) + " weight of " + std::to_string(rw.candidate) +
                                " is " + (got ? to_fraction_string(*got) : std::string("(elected)")));
              }
            }
            return ok();
          },
          [&](const expect::SjrExists& e) {
            const auto found = exists_sjr_committee(f.profile, f.k, options.search, options.budget);
            if (found.has_value() == e.exists) return ok();
            return mismatch(found ? "found {" + found->to_string() + "}" : std::string("none found"));
          },
          [&](const expect::EllJrConstruction& e) {
            const Committee got = find_ell_jr_committee(f.profile, f.k, e.level, options.search);
            return got == e.expected ? ok() : mismatch("got {" + got.to_string() + "}");
          },
      },
      check);
}

}  // namespace

std::vector<ExpectationOutcome> replay(const Fixture& fixture, const RuleOptions& options) {
  std::vector<ExpectationOutcome> out;
  for (const Expectation& e : fixture.expectations) {
    try {
      auto v = evaluate(fixture, e.check, options);
      out.push_back({e.description, v.passed, std::move(v.detail)});
    } catch (const BudgetExhausted&) {
      throw;
    } catch (const Error& err) {
      out.push_back({e.description, false, err.what()});
    }
  }
  return out;
}

}  // namespace abcvote
