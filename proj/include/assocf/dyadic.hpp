#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace assocf {

/// Exact dyadic rational numerator / 2^exponent in lowest terms
/// (odd numerator, or exponent 0). Arithmetic throws std::overflow_error
/// instead of wrapping.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t numerator, int exponent);

  static Dyadic integer(std::int64_t v) { return Dyadic(v, 0); }
  /// 2^-k for k >= 0.
  static Dyadic half_power(int k) { return Dyadic(1, k); }

  std::int64_t numerator() const noexcept { return num_; }
  int exponent() const noexcept { return exp_; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  /// Multiplication by 2^k (k may be negative).
  Dyadic scaled(int k) const;

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }

  /// "n/2^e".
  std::string str() const;
  /// Parses "n/2^e" or a plain integer.
  static Dyadic parse(std::string_view text);
  /// Exact decimal expansion of value * scale (dyadics terminate in base 10).
  std::string decimal(std::int64_t scale = 1) const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// log2(b / a) when b / a is an integer power of two; throws
/// std::domain_error otherwise. Both arguments must be positive.
int log2_ratio(const Dyadic& a, const Dyadic& b);

}  // namespace assocf
