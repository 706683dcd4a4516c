#ifndef WOLFKIT_RATIONAL_HPP
#define WOLFKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace wolfkit {

// Arbitrary precision rational, always kept canonical (lowest terms,
// positive denominator).
using Rational = mpq_class;

// Parses "a", "-a", "a/b". Throws UsageError on malformed text or a zero
// denominator.
Rational parse_rational(std::string_view text);

// "num/den", with "/den" omitted when the denominator is 1.
std::string to_string(const Rational& q);

// Deterministic source of small rationals for sampled checks.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int max_num = 9, int max_den = 5)
      : engine_(seed), max_num_(max_num), max_den_(max_den) {}

  Rational next();
  Rational next_nonzero();
  std::uint64_t next_index(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  int max_num_;
  int max_den_;
};

}  // namespace wolfkit

#endif  // WOLFKIT_RATIONAL_HPP
