#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace littlewood {

using int128 = __int128;
using uint128 = unsigned __int128;

std::string to_string(int128 value);
std::string to_string(uint128 value);

/// Parses an optionally signed decimal integer.  Throws std::invalid_argument
/// or std::overflow_error.
int128 parse_int128(std::string_view text);

/// Exact rational with 128-bit numerator and denominator, always in lowest
/// terms with a positive denominator.  Every operation is overflow-checked and
/// throws std::overflow_error instead of wrapping.
class ExactRational {
 public:
  constexpr ExactRational() noexcept = default;
  ExactRational(int128 value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(int128 numerator, int128 denominator);

  /// Accepts "p" or "p/q".
  static ExactRational parse(std::string_view text);

  int128 numerator() const noexcept { return num_; }
  int128 denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs);

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

namespace checked {
int128 add(int128 a, int128 b);
int128 sub(int128 a, int128 b);
int128 mul(int128 a, int128 b);
}  // namespace checked

/// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
int128 gcd(int128 a, int128 b);

/// Floor division for any signs; b != 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

/// Ceiling division for any signs; b != 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace littlewood
