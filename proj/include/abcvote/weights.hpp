#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abcvote/rational.hpp"

namespace abcvote {

/// Non-increasing score vector (w_1, ..., w_m) with w_1 = 1 and all entries
/// non-negative. Drives both the Thiele (w-PAV) and the sequential (w-RAV)
/// families. A vector used with a profile must have length exactly m.
class WeightVector {
 public:
  /// Throws InvalidArgument if empty, w_1 != 1, some entry is negative or the
  /// sequence increases somewhere.
  explicit WeightVector(std::vector<Rational> weights);

  /// 1-based: weight(1) == 1.
  const Rational& weight(std::size_t j) const { return weights_.at(j - 1); }
  /// r_w(p) = w_1 + ... + w_p; r_w(0) = 0.
  Rational partial_sum(std::size_t p) const;
  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const Rational> entries() const noexcept { return weights_; }

  /// Throws InvalidArgument unless size() == m.
  void require_length(std::size_t m) const;

  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> weights_;
};

namespace weights {

/// (1, 1/2, ..., 1/m): PAV and RAV.
WeightVector harmonic(std::size_t m);
/// (1, 1, ..., 1): w-PAV with this vector is AV.
WeightVector all_ones(std::size_t m);
/// (1, 0, ..., 0): Chamberlin-Courant as w-PAV, greedy approval voting as w-RAV.
WeightVector unit_prefix(std::size_t m);
/// (1, 1/n, 1/n^2, ..., 1/n^(m-1)).
WeightVector geometric(std::size_t m, std::uint64_t n);
/// (1, w2, w2, ..., w2). Requires 0 <= w2 <= 1.
WeightVector constant_tail(std::size_t m, const Rational& w2);

/// Comma-separated rationals, e.g. "1,3/4,1/3".
WeightVector parse(std::string_view text);

}  // namespace weights

}  // namespace abcvote
