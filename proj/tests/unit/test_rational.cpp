#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "littlewood/rational.hpp"
#include "littlewood/rng.hpp"

using namespace littlewood;

TEST_CASE("rationals normalise") {
  const ExactRational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(ExactRational(0, -7).to_string() == "0");
  CHECK(ExactRational(0, -7).denominator() == 1);
  CHECK(ExactRational::parse("-12/8") == ExactRational(-3, 2));
  CHECK(ExactRational::parse("5") == ExactRational(5));
  CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  const ExactRational a(16, 3);
  const ExactRational b(56, 3);
  CHECK(a * ExactRational(27) - ExactRational(180) + b * ExactRational(3) - ExactRational(4) ==
        ExactRational(16));
  CHECK(ExactRational(1, 2) + ExactRational(1, 3) == ExactRational(5, 6));
  CHECK(ExactRational(1, 2) / ExactRational(-1, 4) == ExactRational(-2));
  CHECK(ExactRational(1, 3) < ExactRational(1, 2));
  CHECK(ExactRational(-1, 3) > ExactRational(-1, 2));
  CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST_CASE("rational field laws on random operands") {
  CounterRng rng(99);
  auto draw = [&] {
    const auto num = static_cast<std::int64_t>(rng.next() % 2001) - 1000;
    const auto den = static_cast<std::int64_t>(rng.next() % 999) + 1;
    return ExactRational(num, den);
  };
  for (int i = 0; i < 2000; ++i) {
    const auto x = draw();
    const auto y = draw();
    const auto z = draw();
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == ExactRational(0));
    if (y != ExactRational(0)) CHECK((x / y) * y == x);
    CHECK(gcd(x.numerator(), x.denominator()) <= 1);
  }
}

TEST_CASE("overflow is reported, never wrapped") {
  const int128 big = static_cast<int128>(std::numeric_limits<std::int64_t>::max()) << 62;
  CHECK_THROWS_AS(ExactRational(big) * ExactRational(big), std::overflow_error);
  const int128 top = (static_cast<int128>(1) << 126) - 1 + (static_cast<int128>(1) << 126);
  CHECK_THROWS_AS(checked::add(top, int128{1}), std::overflow_error);
  CHECK_THROWS_AS(checked::sub(-top - 1, int128{1}), std::overflow_error);
  CHECK_THROWS_AS(parse_int128("999999999999999999999999999999999999999999"),
                  std::overflow_error);
}

TEST_CASE("int128 decimal formatting") {
  CHECK(to_string(int128{0}) == "0");
  CHECK(to_string(int128{-42}) == "-42");
  const int128 big = static_cast<int128>(1) << 100;
  CHECK(to_string(big) == "1267650600228229401496703205376");
  CHECK(parse_int128(to_string(-big)) == -big);
}

TEST_CASE("floor and ceiling division") {
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(-4, 2) == -2);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(-1, 2) == 0);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(16, 4) == 4);
}
