#include "abcvote/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "abcvote/axioms.hpp"
#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"
#include "abcvote/io.hpp"
#include "abcvote/oracle.hpp"
#include "abcvote/rules.hpp"
#include "abcvote/scoring.hpp"
#include "abcvote/solver.hpp"

namespace abcvote::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Ordered key/value record printed as "key: value" (text) or "key=value" (kv).
// Timing is text-only so machine output stays byte-identical across runs.
class Output {
 public:
  Output(std::ostream& out, bool kv) : out_(out), kv_(kv) {}

  void field(const std::string& key, const std::string& value) {
    out_ << key << (kv_ ? "=" : ": ") << value << '\n';
  }
  void note(const std::string& text) {
    if (!kv_) out_ << text << '\n';
  }
  void timing(std::chrono::steady_clock::time_point start) {
    if (kv_) return;
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << ms.count() << " ms";
    field("time", s.str());
  }
  bool kv() const { return kv_; }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool kv_;
};

struct Common {
  std::string format = "text";
  int threads = 0;
  bool serial = false;
  std::optional<std::uint64_t> budget;

  RuleOptions rule_options() const {
    RuleOptions o;
    o.search.mode = serial ? SearchOptions::Mode::serial : SearchOptions::Mode::parallel;
    o.search.threads = threads;
    o.budget = budget;
    return o;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  sub->add_option("--threads", c.threads, "Worker threads for parallel search (0 = all)")->check(CLI::NonNegativeNumber);
  sub->add_flag("--serial", c.serial, "Use the serial reference search");
  sub->add_option("--budget", c.budget, "Search node/committee budget")->check(CLI::PositiveNumber);
}

// Integers print bare in listings and comments; documents keep num/den elsewhere.
std::string show_param(const Rational& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : to_fraction_string(v);
}

std::size_t to_index(std::string_view word, const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw UsageError(std::string("bad ") + what + " '" + std::string(word) + "'");
  }
  return v;
}

Committee parse_committee(std::string_view text) {
  std::vector<Candidate> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto word = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    members.push_back(static_cast<Candidate>(to_index(word, "committee member")));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Committee(std::move(members));
}

struct AxiomChoice {
  AxiomKind kind;
  std::size_t level = 1;
};

AxiomChoice parse_axiom(std::string_view text) {
  if (text == "jr") return {AxiomKind::jr};
  if (text == "ejr") return {AxiomKind::ejr};
  if (text == "sjr") return {AxiomKind::sjr};
  if (text == "unanimity") return {AxiomKind::unanimity};
  if (text.starts_with("ell-jr:")) return {AxiomKind::ell_jr, to_index(text.substr(7), "level")};
  throw UsageError("unknown axiom '" + std::string(text) + "'");
}

ProfileDocument load_profile(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
  }
  return parse_profile(read_file(path));
}

std::size_t resolve_k(const ProfileDocument& doc, std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (doc.k) return *doc.k;
  throw UsageError("no committee size: pass --k or add a 'k' line to the profile");
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_report(Output& o, const AxiomReport& r) {
  o.field("axiom", axiom_label(r));
  o.field("verdict", r.passed ? "pass" : "fail");
  if (!r.witness) return;
  o.field("witness.level", std::to_string(r.witness->level));
  o.field("witness.candidates", join_indices(r.witness->candidates));
  o.field("witness.voters", join(r.witness->voter_groups));
  o.field("witness.size", std::to_string(r.witness->group_size));
}

AxiomReport run_check(const BallotProfile& profile, std::size_t k, const Committee& w, const AxiomChoice& a,
                      const SearchOptions& search) {
  switch (a.kind) {
    case AxiomKind::jr:
      return check_jr(profile, k, w);
    case AxiomKind::ell_jr:
      return check_ell_jr(profile, k, w, a.level, search);
    case AxiomKind::ejr:
      return check_ejr(profile, k, w, search);
    case AxiomKind::sjr:
      return check_sjr(profile, k, w);
    case AxiomKind::unanimity:
      return check_unanimity(profile, k, w);
  }
  throw UsageError("unknown axiom");
}

FixtureParams parse_params(const std::vector<std::string>& raw) {
  FixtureParams params;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + p + "' is not key=value");
    params[p.substr(0, eq)] = parse_rational(std::string_view(p).substr(eq + 1));
  }
  return params;
}

std::string document_with_labels(const Fixture& f) {
  std::ostringstream s;
  s << "# " << f.name << ": " << f.summary << '\n';
  for (const auto& [key, value] : f.params) s << "# param " << key << '=' << show_param(value) << '\n';
  if (f.weights) s << "# weights " << f.weights->to_string() << '\n';
  s << "# labels";
  for (std::size_t i = 0; i < f.labels.size(); ++i) s << ' ' << i << '=' << f.labels[i];
  s << '\n' << serialize_profile(f.profile, f.k);
  return s.str();
}

struct OracleTally {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // agree, total
  void record(const std::string& name, bool agree) {
    auto& c = counts[name];
    c.first += agree ? 1 : 0;
    ++c.second;
  }
  bool all_agree() const {
    return std::all_of(counts.begin(), counts.end(), [](const auto& e) { return e.second.first == e.second.second; });
  }
};

void oracle_instance(const BallotProfile& profile, std::size_t k, const Committee& w, const SearchOptions& search,
                     OracleTally& t) {
  const auto jr = check_jr(profile, k, w);
  t.record("jr", jr.passed == oracle::provides_jr(profile, k, w) && oracle::witness_valid(profile, k, w, jr));
  for (std::size_t level = 1; level <= k; ++level) {
    const auto r = check_ell_jr(profile, k, w, level, search);
    t.record("ell-jr", r.passed == oracle::provides_ell_jr(profile, k, w, level) &&
                           oracle::witness_valid(profile, k, w, r));
  }
  const auto ejr = check_ejr(profile, k, w, search);
  t.record("ejr", ejr.passed == oracle::provides_ejr(profile, k, w) && oracle::witness_valid(profile, k, w, ejr));
  const auto sjr = check_sjr(profile, k, w);
  t.record("sjr", sjr.passed == oracle::provides_sjr(profile, k, w) && oracle::witness_valid(profile, k, w, sjr));
  const auto un = check_unanimity(profile, k, w);
  t.record("unanimity", un.passed == oracle::unanimous(profile, w) && oracle::witness_valid(profile, k, w, un));

  const std::size_t m = profile.num_candidates();
  const std::vector<std::pair<std::string, ScoringObjective>> objectives = {
      {"optimize.av", objective::Av{}},
      {"optimize.sav", objective::Sav{}},
      {"optimize.pav", objective::WeightedPav{weights::harmonic(m)}},
      {"optimize.mav", objective::Mav{}},
  };
  for (const auto& [name, obj] : objectives) {
    OptimizationRequest req;
    req.k = k;
    req.objective = obj;
    req.search = search;
    const auto got = optimize_committee(profile, req);
    const auto want = oracle::optimize(profile, k, obj, TieBreak::lexicographic);
    t.record(name, got.committee == want.committee && got.score.value() == want.score);
  }
  t.record("sequential.rav", compute_sequential_rule(profile, k, weights::harmonic(m)) ==
                                 oracle::sequential(profile, k, weights::harmonic(m)));
}

// Subcommand handlers ------------------------------------------------------

struct ComputeArgs {
  std::string rule;
  std::optional<std::size_t> k;
  std::string tiebreak = "lex";
  std::string path;
};

int do_compute(const ComputeArgs& a, const Common& c, std::istream& in, Output& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto doc = load_profile(a.path, in);
  const std::size_t k = resolve_k(doc, a.k);
  RuleSpec spec{parse_rule(a.rule), a.tiebreak == "prefer-jr" ? TieBreak::prefer_jr : TieBreak::lexicographic};
  const Committee w = compute_rule(doc.profile, k, spec, c.rule_options());
  const auto objective = reporting_objective(spec.kind, doc.profile);
  o.field("command", "compute");
  o.field("rule", rule_name(spec.kind));
  o.field("tiebreak", a.tiebreak);
  o.field("k", std::to_string(k));
  o.field("committee", w.to_string());
  o.field("objective", objective_name(objective));
  o.field("score", score_committee(doc.profile, w, objective).fraction());
  o.timing(start);
  return exit_ok;
}

struct CheckArgs {
  std::string axiom;
  std::string committee;
  std::optional<std::size_t> k;
  std::string path;
};

int do_check(const CheckArgs& a, const Common& c, std::istream& in, Output& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto doc = load_profile(a.path, in);
  const Committee w = parse_committee(a.committee);
  const std::size_t k = a.k ? *a.k : doc.k.value_or(w.k());
  const auto report = run_check(doc.profile, k, w, parse_axiom(a.axiom), c.rule_options().search);
  o.field("command", "check");
  o.field("k", std::to_string(k));
  o.field("committee", w.to_string());
  print_report(o, report);
  o.timing(start);
  return report.passed ? exit_ok : exit_fail;
}

struct FindArgs {
  std::string axiom;
  std::optional<std::size_t> k;
  std::string path;
};

int do_find(const FindArgs& a, const Common& c, std::istream& in, Output& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto doc = load_profile(a.path, in);
  const std::size_t k = resolve_k(doc, a.k);
  const auto axiom = parse_axiom(a.axiom);
  const auto options = c.rule_options();
  o.field("command", "find");
  o.field("k", std::to_string(k));
  std::optional<Committee> found;
  switch (axiom.kind) {
    case AxiomKind::jr:
      found = find_jr_committee(doc.profile, k);
      break;
    case AxiomKind::ell_jr:
      found = find_ell_jr_committee(doc.profile, k, axiom.level, options.search);
      break;
    case AxiomKind::sjr:
      found = exists_sjr_committee(doc.profile, k, options.search, options.budget);
      break;
    default:
      throw UsageError("find supports jr, ell-jr:<level> and sjr");
  }
  o.field("axiom", a.axiom);
  o.field("committee", found ? found->to_string() : "none");
  o.timing(start);
  return found ? exit_ok : exit_fail;
}

struct CorpusArgs {
  std::string name;
  std::vector<std::string> params;
  bool emit = false;
  bool verify = false;
  bool list = false;
};

int do_corpus(const CorpusArgs& a, const Common& c, Output& o) {
  if (a.list) {
    for (const auto& info : fixture_catalog()) {
      std::string params;
      for (const auto& [key, value] : info.defaults) params += " " + key + "=" + show_param(value);
      o.raw() << info.name << params << "  # " << info.summary << '\n';
    }
    return exit_ok;
  }
  if (a.name.empty()) throw UsageError("corpus needs --name (or --list)");
  const auto start = std::chrono::steady_clock::now();
  const Fixture f = build_fixture(a.name, parse_params(a.params));
  if (!a.verify) {
    o.raw() << document_with_labels(f);
    return exit_ok;
  }
  const auto outcomes = replay(f, c.rule_options());
  bool all = true;
  o.field("command", "corpus");
  o.field("fixture", f.name);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& r = outcomes[i];
    all = all && r.passed;
    const std::string verdict = r.passed ? "pass" : "fail";
    if (o.kv()) {
      o.field("expectation." + std::to_string(i), verdict + " " + r.description + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    } else {
      o.note("  [" + verdict + "] " + r.description + (r.detail.empty() ? "" : "  -- " + r.detail));
    }
  }
  o.field("verdict", all ? "pass" : "fail");
  o.timing(start);
  return all ? exit_ok : exit_fail;
}

struct ReduceArgs {
  std::string graph;
  std::size_t ell = 3;
  bool check = false;
};

int do_reduce(const ReduceArgs& a, const Common& c, std::istream& in, Output& o) {
  std::string text;
  if (a.graph == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    text = read_file(a.graph);
  }
  const auto inst = reduce_biclique(parse_graph(text), a.ell);
  if (!a.check) {
    o.raw() << "# committee " << inst.committee.to_string() << '\n' << serialize_profile(inst.profile, inst.k);
    return exit_ok;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto report = check_ejr(inst.profile, inst.k, inst.committee, c.rule_options().search);
  o.field("command", "reduce");
  o.field("k", std::to_string(inst.k));
  o.field("committee", inst.committee.to_string());
  print_report(o, report);
  o.timing(start);
  return report.passed ? exit_ok : exit_fail;
}

struct RandomArgs {
  std::uint64_t seed = 0;
  std::size_t n = 10;
  std::size_t m = 6;
  std::optional<std::size_t> k;
  std::string culture = "uniform:1/2";
};

int do_random(const RandomArgs& a, Output& o) {
  const auto profile = random_profile(a.seed, a.n, a.m, parse_culture(a.culture));
  o.raw() << serialize_profile(profile, a.k);
  return exit_ok;
}

struct OracleArgs {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t max_n = 9;
  std::size_t max_m = 7;
  std::size_t max_k = 4;
  std::optional<std::size_t> rav_jr_k;
};

int do_oracle(const OracleArgs& a, const Common& c, Output& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto search = c.rule_options().search;
  o.field("command", "oracle");
  if (a.rav_jr_k) {
    // Exploratory: look for random profiles where RAV fails JR at this k.
    const std::size_t k = *a.rav_jr_k;
    std::size_t failures = 0;
    std::optional<BallotProfile> example;
    for (std::size_t t = 0; t < a.trials; ++t) {
      auto inst = random_instance(a.seed + t, a.max_n, std::max(a.max_m, k), 1);
      if (inst.profile.num_candidates() < k) continue;
      const Committee w = compute_sequential_rule(inst.profile, k, weights::harmonic(inst.profile.num_candidates()));
      if (!check_jr(inst.profile, k, w).passed) {
        ++failures;
        if (!example) example = inst.profile;
      }
    }
    o.field("search", "rav-jr");
    o.field("k", std::to_string(k));
    o.field("failures", std::to_string(failures));
    if (example) o.note(serialize_profile(*example, k));
    o.timing(start);
    return exit_ok;
  }
  OracleTally tally;
  for (std::size_t t = 0; t < a.trials; ++t) {
    const auto inst = random_instance(a.seed + t, a.max_n, a.max_m, a.max_k);
    const std::size_t m = inst.profile.num_candidates();
    oracle_instance(inst.profile, inst.k, random_committee(a.seed + t, m, inst.k), search, tally);
    oracle_instance(inst.profile, inst.k, find_jr_committee(inst.profile, inst.k), search, tally);
  }
  o.field("trials", std::to_string(a.trials));
  for (const auto& [name, counts] : tally.counts) {
    o.field("agree." + name, std::to_string(counts.first) + "/" + std::to_string(counts.second));
  }
  o.field("verdict", tally.all_agree() ? "pass" : "fail");
  o.timing(start);
  return tally.all_agree() ? exit_ok : exit_fail;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approval-based committee voting: rules, axiom checks and constructions", "abcvote"};
  app.require_subcommand(1);
  Common common;

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a rule's committee");
  compute_cmd->add_option("--rule", compute.rule, "av, sav, mav, pav, cc, gav, rav, geometric-rav, ujrav, ejrav, "
                                                  "wpav:<w>, wrav:<w>")
      ->required();
  compute_cmd->add_option("--k", compute.k, "Committee size (overrides the file)");
  compute_cmd->add_option("--tiebreak", compute.tiebreak, "lex or prefer-jr")->check(CLI::IsMember({"lex", "prefer-jr"}));
  compute_cmd->add_option("profile", compute.path, "Profile file, - for stdin")->required();
  add_common(compute_cmd, common);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check an axiom; exit 0 on pass, 1 on fail");
  check_cmd->add_option("--axiom", check.axiom, "jr, ell-jr:<level>, ejr, sjr, unanimity")->required();
  check_cmd->add_option("--committee", check.committee, "Comma-separated candidate indices")->required();
  check_cmd->add_option("--k", check.k, "Committee size");
  check_cmd->add_option("profile", check.path, "Profile file, - for stdin")->required();
  add_common(check_cmd, common);

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Construct a committee providing an axiom");
  find_cmd->add_option("--axiom", find.axiom, "jr, ell-jr:<level> or sjr")->required();
  find_cmd->add_option("--k", find.k, "Committee size");
  find_cmd->add_option("profile", find.path, "Profile file, - for stdin")->required();
  add_common(find_cmd, common);

  CorpusArgs corpus;
  auto* corpus_cmd = app.add_subcommand("corpus", "Emit or verify a built-in construction");
  corpus_cmd->add_option("--name", corpus.name, "Fixture name");
  corpus_cmd->add_option("--param", corpus.params, "key=value parameter (repeatable)");
  auto* emit_flag = corpus_cmd->add_flag("--emit", corpus.emit, "Print the profile document (default)");
  corpus_cmd->add_flag("--verify", corpus.verify, "Replay the fixture's expectations")->excludes(emit_flag);
  corpus_cmd->add_flag("--list", corpus.list, "List fixtures and their parameters");
  add_common(corpus_cmd, common);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the balanced-biclique EJR instance");
  reduce_cmd->add_option("--graph", reduce.graph, "Graph file, - for stdin")->required();
  reduce_cmd->add_option("--ell", reduce.ell, "Biclique size")->required();
  reduce_cmd->add_flag("--check", reduce.check, "Check EJR of the reduced committee instead of printing the profile");
  add_common(reduce_cmd, common);

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("random", "Print a random profile");
  random_cmd->add_option("--seed", random.seed, "RNG seed");
  random_cmd->add_option("--n", random.n, "Voters")->check(CLI::PositiveNumber);
  random_cmd->add_option("--m", random.m, "Candidates")->check(CLI::PositiveNumber);
  random_cmd->add_option("--k", random.k, "Committee size header");
  random_cmd->add_option("--culture", random.culture, "uniform:<p>, fixed:<s> or urn:<groups>,<cohesion>");
  add_common(random_cmd, common);

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check fast algorithms against brute force");
  oracle_cmd->add_option("--trials", oracle_args.trials, "Random instances");
  oracle_cmd->add_option("--seed", oracle_args.seed, "First seed");
  oracle_cmd->add_option("--max-n", oracle_args.max_n, "Largest voter count")->check(CLI::Range(1, 20));
  oracle_cmd->add_option("--max-m", oracle_args.max_m, "Largest candidate count")->check(CLI::Range(1, 20));
  oracle_cmd->add_option("--max-k", oracle_args.max_k, "Largest committee size")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--search-rav-jr", oracle_args.rav_jr_k,
                         "Instead, search random profiles for RAV failing JR at this k");
  add_common(oracle_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Output o(out, common.format == "kv");
  try {
    if (*compute_cmd) return do_compute(compute, common, in, o);
    if (*check_cmd) return do_check(check, common, in, o);
    if (*find_cmd) return do_find(find, common, in, o);
    if (*corpus_cmd) return do_corpus(corpus, common, o);
    if (*reduce_cmd) return do_reduce(reduce, common, in, o);
    if (*random_cmd) return do_random(random, o);
    return do_oracle(oracle_args, common, o);
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    if (e.best_so_far()) err << "best so far: " << e.best_so_far()->to_string() << '\n';
    return exit_budget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const MalformedProfile& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace abcvote::cli
