#include "abcvote/weights.hpp"

#include "abcvote/error.hpp"

namespace abcvote {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("weight vector is empty");
  for (auto& w : weights_) w.canonicalize();
  if (weights_.front() != 1) throw InvalidArgument("weight vector must start with w_1 = 1");
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] < 0) throw InvalidArgument("weight w_" + std::to_string(j + 1) + " is negative");
    if (j > 0 && weights_[j] > weights_[j - 1]) {
      throw InvalidArgument("weight vector increases at w_" + std::to_string(j + 1));
    }
  }
}

Rational WeightVector::partial_sum(std::size_t p) const {
  if (p > weights_.size()) throw InvalidArgument("partial sum beyond weight vector length");
  Rational total = 0;
  for (std::size_t j = 0; j < p; ++j) total += weights_[j];
  return total;
}

void WeightVector::require_length(std::size_t m) const {
  if (weights_.size() != m) {
    throw InvalidArgument("weight vector has length " + std::to_string(weights_.size()) + " but m=" +
                          std::to_string(m));
  }
}

std::string WeightVector::to_string() const {
  std::string out;
  for (const Rational& w : weights_) {
    if (!out.empty()) out += ',';
    out += w.get_den() == 1 ? w.get_num().get_str() : to_fraction_string(w);
  }
  return out;
}

namespace weights {

WeightVector harmonic(std::size_t m) {
  std::vector<Rational> w;
  for (std::size_t j = 1; j <= m; ++j) w.push_back(make_rational(1, static_cast<std::int64_t>(j)));
  return WeightVector(std::move(w));
}

WeightVector all_ones(std::size_t m) { return WeightVector(std::vector<Rational>(m, Rational(1))); }

WeightVector unit_prefix(std::size_t m) {
  std::vector<Rational> w(m, Rational(0));
  if (!w.empty()) w[0] = 1;
  return WeightVector(std::move(w));
}

WeightVector geometric(std::size_t m, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("geometric weights need n >= 1");
  std::vector<Rational> w;
  BigInt denom = 1;
  const BigInt base = to_big(n);
  for (std::size_t j = 0; j < m; ++j) {
    w.emplace_back(BigInt(1), denom);
    denom *= base;
  }
  return WeightVector(std::move(w));
}

WeightVector constant_tail(std::size_t m, const Rational& w2) {
  std::vector<Rational> w(m, w2);
  if (!w.empty()) w[0] = 1;
  return WeightVector(std::move(w));
}

WeightVector parse(std::string_view text) {
  std::vector<Rational> w;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    w.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(w));
}

}  // namespace weights

}  // namespace abcvote
