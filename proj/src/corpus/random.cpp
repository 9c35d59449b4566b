#include <algorithm>
#include <charconv>
#include <random>

#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"

namespace abcvote {

namespace {

// std::uniform_int_distribution is implementation-defined, so draws are
// reduced by rejection sampling on raw engine output instead.
std::uint64_t below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

struct Probability {
  std::uint64_t num;
  std::uint64_t den;
};

Probability probability(const Rational& p, const char* what) {
  if (p < 0 || p > 1) throw ConstraintViolation(std::string(what) + " must lie in [0, 1]");
  if (!p.get_den().fits_ulong_p()) throw ConstraintViolation(std::string(what) + " denominator too large");
  return {p.get_num().get_ui(), p.get_den().get_ui()};
}

bool draw(std::mt19937_64& gen, Probability p) { return below(gen, p.den) < p.num; }

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Culture parse_culture(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("culture needs the form name:params");
  const auto name = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (name == "uniform") return culture::UniformSubsets{parse_rational(rest)};
  if (name == "fixed") return culture::FixedSize{parse_count(rest, "ballot size")};
  if (name == "urn") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw InvalidArgument("urn culture needs groups,cohesion");
    return culture::Urn{parse_count(rest.substr(0, comma), "group count"), parse_rational(rest.substr(comma + 1))};
  }
  throw InvalidArgument("unknown culture '" + std::string(name) + "'");
}

std::string culture_name(const Culture& c) {
  if (auto* u = std::get_if<culture::UniformSubsets>(&c)) return "uniform:" + to_fraction_string(u->p);
  if (auto* f = std::get_if<culture::FixedSize>(&c)) return "fixed:" + std::to_string(f->s);
  const auto& urn = std::get<culture::Urn>(c);
  return "urn:" + std::to_string(urn.groups) + "," + to_fraction_string(urn.cohesion);
}

BallotProfile random_profile(std::uint64_t seed, std::size_t n, std::size_t m, const Culture& culture) {
  if (n == 0) throw InvalidArgument("random profile needs n >= 1");
  if (m == 0) throw InvalidArgument("random profile needs m >= 1");
  std::mt19937_64 gen(seed);
  std::vector<Ballot> ballots;
  ballots.reserve(n);
  const auto subset = [&](const std::vector<bool>& in) {
    std::vector<Candidate> members;
    for (std::size_t c = 0; c < m; ++c) {
      if (in[c]) members.push_back(static_cast<Candidate>(c));
    }
    return CandidateSet(std::move(members));
  };

  if (auto* u = std::get_if<culture::UniformSubsets>(&culture)) {
    const auto p = probability(u->p, "approval probability");
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> in(m);
      for (std::size_t c = 0; c < m; ++c) in[c] = draw(gen, p);
      ballots.push_back({subset(in), 1});
    }
  } else if (auto* f = std::get_if<culture::FixedSize>(&culture)) {
    if (f->s > m) throw ConstraintViolation("fixed ballot size needs s <= m");
    std::vector<Candidate> pool(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) pool[c] = static_cast<Candidate>(c);
      // Partial Fisher-Yates: the first s slots become a uniform s-subset.
      for (std::size_t j = 0; j < f->s; ++j) std::swap(pool[j], pool[j + below(gen, m - j)]);
      ballots.push_back({CandidateSet(std::vector<Candidate>(pool.begin(), pool.begin() + f->s)), 1});
    }
  } else {
    const auto& urn = std::get<culture::Urn>(culture);
    if (urn.groups == 0) throw ConstraintViolation("urn culture needs groups >= 1");
    const auto keep = probability(urn.cohesion, "cohesion");
    const Probability fair{1, 2};
    std::vector<std::vector<bool>> bases(urn.groups, std::vector<bool>(m));
    for (auto& base : bases) {
      for (std::size_t c = 0; c < m; ++c) base[c] = draw(gen, fair);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& base = bases[below(gen, urn.groups)];
      std::vector<bool> in(m);
      for (std::size_t c = 0; c < m; ++c) in[c] = draw(gen, keep) ? base[c] : draw(gen, fair);
      ballots.push_back({subset(in), 1});
    }
  }
  return BallotProfile(m, std::move(ballots));
}

RandomInstance random_instance(std::uint64_t seed, std::size_t max_n, std::size_t max_m, std::size_t max_k) {
  if (max_n == 0 || max_m == 0 || max_k == 0) throw InvalidArgument("random instance bounds must be positive");
  std::mt19937_64 gen(seed);
  const std::size_t n = 1 + below(gen, max_n);
  const std::size_t m = 1 + below(gen, max_m);
  const std::size_t k = 1 + below(gen, std::min(m, max_k));
  Culture culture;
  switch (below(gen, 3)) {
    case 0:
      culture = culture::UniformSubsets{make_rational(static_cast<std::int64_t>(1 + below(gen, 3)), 4)};
      break;
    case 1:
      culture = culture::FixedSize{1 + below(gen, m)};
      break;
    default:
      culture = culture::Urn{1 + below(gen, 3), make_rational(3, 4)};
      break;
  }
  return RandomInstance{random_profile(gen(), n, m, culture), k};
}

Committee random_committee(std::uint64_t seed, std::size_t m, std::size_t k) {
  if (k == 0 || k > m) throw InvalidArgument("committee size out of range");
  std::mt19937_64 gen(seed);
  std::vector<Candidate> pool(m);
  for (std::size_t c = 0; c < m; ++c) pool[c] = static_cast<Candidate>(c);
  for (std::size_t j = 0; j < k; ++j) std::swap(pool[j], pool[j + below(gen, m - j)]);
  return Committee(std::vector<Candidate>(pool.begin(), pool.begin() + k));
}

}  // namespace abcvote
