#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace abcvote {

/// Arbitrary-precision rational. Every score, weight and approval weight in
/// the library is one of these; nothing in scoring ever touches floating point.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws InvalidArgument on malformed text or a
/// zero denominator. The result is canonical (lowest terms, positive denominator).
Rational parse_rational(std::string_view text);

/// Canonical "num/den" rendering; integers keep the "/1".
std::string to_fraction_string(const Rational& value);

static_assert(sizeof(unsigned long) == 8 && sizeof(long) == 8, "GMP conversions assume LP64");

inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// Exact committee score. Thin strong type over Rational so scores do not get
/// mixed up with weights.
class Score {
 public:
  Score() = default;
  explicit Score(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

  const Rational& value() const noexcept { return value_; }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  std::string fraction() const { return to_fraction_string(value_); }

  friend bool operator==(const Score& a, const Score& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Score& a, const Score& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

}  // namespace abcvote
