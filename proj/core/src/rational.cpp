#include "littlewood/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace littlewood {

namespace {

constexpr int128 kInt128Min = static_cast<int128>(uint128{1} << 127);

[[noreturn]] void overflow(const char* what) {
  throw std::overflow_error(std::string("128-bit overflow in ") + what);
}

}  // namespace

std::string to_string(uint128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(int128 value) {
  if (value >= 0) return to_string(static_cast<uint128>(value));
  return "-" + to_string(static_cast<uint128>(0) - static_cast<uint128>(value));
}

int128 parse_int128(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("integer has no digits");
  int128 value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid digit in integer '" + std::string(text) + "'");
    }
    value = checked::add(checked::mul(value, 10), negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

namespace checked {

int128 add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

int128 sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

int128 mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

}  // namespace checked

int128 gcd(int128 a, int128 b) {
  uint128 x = a < 0 ? uint128{0} - static_cast<uint128>(a) : static_cast<uint128>(a);
  uint128 y = b < 0 ? uint128{0} - static_cast<uint128>(b) : static_cast<uint128>(b);
  while (y != 0) {
    const uint128 t = x % y;
    x = y;
    y = t;
  }
  if (x > static_cast<uint128>(~uint128{0} >> 1)) overflow("gcd");
  return static_cast<int128>(x);
}

ExactRational::ExactRational(int128 numerator, int128 denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (numerator == kInt128Min || denominator == kInt128Min) overflow("normalisation");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const int128 g = gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_int128(text));
  return ExactRational(parse_int128(text.substr(0, slash)), parse_int128(text.substr(slash + 1)));
}

double ExactRational::to_double() const noexcept {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string ExactRational::to_string() const {
  if (den_ == 1) return littlewood::to_string(num_);
  return littlewood::to_string(num_) + "/" + littlewood::to_string(den_);
}

ExactRational ExactRational::operator-() const {
  if (num_ == kInt128Min) overflow("negation");
  ExactRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b/g*d)
  const int128 g = gcd(den_, rhs.den_);
  const int128 num = checked::add(checked::mul(num_, rhs.den_ / g), checked::mul(rhs.num_, den_ / g));
  *this = ExactRational(num, checked::mul(den_ / g, rhs.den_));
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  const int128 g1 = gcd(num_, rhs.den_);
  const int128 g2 = gcd(rhs.num_, den_);
  const int128 a = g1 == 0 ? num_ : num_ / g1;
  const int128 d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
  const int128 c = g2 == 0 ? rhs.num_ : rhs.num_ / g2;
  const int128 b = g2 == 0 ? den_ : den_ / g2;
  *this = ExactRational(checked::mul(a, c), checked::mul(b, d));
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  ExactRational inverse;
  inverse.num_ = rhs.den_;
  inverse.den_ = rhs.num_;
  if (inverse.den_ < 0) {
    inverse.num_ = -inverse.num_;
    inverse.den_ = -inverse.den_;
  }
  return *this *= inverse;
}

std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
  const int128 left = checked::mul(lhs.num_, rhs.den_);
  const int128 right = checked::mul(rhs.num_, lhs.den_);
  return left <=> right;
}

}  // namespace littlewood
