#include "littlewood/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace littlewood {

namespace {

using R = ExactRational;

constexpr std::int64_t odd_indicator(std::int64_t u) { return (u % 2 != 0) ? 1 : 0; }

// Number of odd integers in [1, x]; zero for x < 1.
constexpr std::int64_t odd_count_upto(std::int64_t x) { return x < 1 ? 0 : (x + 1) / 2; }

std::int64_t lhs_single(int id, std::int64_t n) {
  std::int64_t sum = 0;
  switch (id) {
    case 1:
      for (std::int64_t u = 1; u <= n - 1; ++u) sum += floor_div(u, 2);
      return sum;
    case 2:
      for (std::int64_t u = 1; u <= n - 1; ++u) sum += floor_div(u, 2) * floor_div(u - 2, 2);
      return 3 * sum;
    case 3:
      for (std::int64_t u = 1; u <= n - 1; ++u) sum += odd_indicator(u);
      return sum;
    case 4:
      // I_u (u-1)/2 is an integer whenever I_u = 1.
      for (std::int64_t u = 1; u <= n - 1; ++u) {
        if (odd_indicator(u)) sum += (u - 1) / 2;
      }
      return 2 * sum;
    case 5:
      for (std::int64_t u = 1; u <= n - 1; ++u) {
        if (odd_indicator(u)) sum += ((u - 1) / 2) * ((u - 3) / 2);
      }
      return 3 * sum;
    case 7:
      for (std::int64_t u = (n + 1) / 2; u <= n - 1; ++u) {
        if (odd_indicator(u)) sum += (2 * u - n - 1) / 2;
      }
      return sum;
    case 9:
      for (std::int64_t u = ceil_div(3 * n + 1, 4); u <= n - 1; ++u) sum += odd_indicator(u);
      return sum;
    case 10:
      for (std::int64_t u = ceil_div(2 * n + 1, 3); u <= n - 1; ++u) sum += odd_indicator(u);
      return sum;
    default:
      break;
  }
  throw std::logic_error("not a single-sum identity");
}

std::int64_t lhs_double_literal(int id, std::int64_t n) {
  std::int64_t sum = 0;
  for (std::int64_t u = 1; u <= n - 1; ++u) {
    for (std::int64_t v = 1; v <= n - 1; ++v) {
      if (id == 6) {
        sum += odd_indicator(u) * ((u + 2 * v > 2 * n) ? 1 : 0);
      } else {
        sum += odd_indicator(u) * odd_indicator(v) * ((2 * u + v > 2 * n) ? 1 : 0);
      }
    }
  }
  return id == 6 ? 2 * sum : sum;
}

std::int64_t lhs_double_counted(int id, std::int64_t n) {
  std::int64_t sum = 0;
  for (std::int64_t u = 1; u <= n - 1; ++u) {
    if (!odd_indicator(u)) continue;
    if (id == 6) {
      // v > (2n - u) / 2
      const std::int64_t lo = std::max<std::int64_t>(1, floor_div(2 * n - u, 2) + 1);
      sum += std::max<std::int64_t>(0, n - lo);
    } else {
      // odd v > 2n - 2u
      const std::int64_t lo = std::max<std::int64_t>(1, 2 * n - 2 * u + 1);
      sum += std::max<std::int64_t>(0, odd_count_upto(n - 1) - odd_count_upto(lo - 1));
    }
  }
  return id == 6 ? 2 * sum : sum;
}

R rhs(int id, std::int64_t n) {
  switch (id) {
    case 1:
      return R(floor_div(n, 2)) * R(floor_div(n - 1, 2));
    case 2:
      return R(2) * R(floor_div(n, 2)) * R(n - 2, 2) * R(ceil_div(n - 4, 2));
    case 3:
      return R(floor_div(n, 2));
    case 4:
    case 6:
      return R(floor_div(n, 2)) * R(floor_div(n - 2, 2));
    case 5:
      return R(floor_div(n, 2)) * R(floor_div(n - 2, 2)) * R(floor_div(n - 4, 2));
    case 7:
    case 8:
      return R(floor_div(n - 1, 4)) * R(floor_div(n - 3, 4));
    case 9:
      return R(floor_div(n - 1, 8));
    case 10:
      return R(floor_div(n, 6)) + R(n % 6 == 4 ? 1 : 0);
    default:
      break;
  }
  throw std::invalid_argument("identity id must be in 1..10");
}

std::int64_t checked_length(const ClassSpec& spec) {
  const auto n = static_cast<std::int64_t>(spec.n());
  if (n > kMaxFormulaLength) {
    throw std::invalid_argument("closed forms are evaluated for n <= " +
                                std::to_string(kMaxFormulaLength));
  }
  return n;
}

}  // namespace

IdentitySides identity_sides(int id, std::int64_t n, InnerSum inner) {
  if (id < 1 || id > kIdentityCount) {
    throw std::invalid_argument("identity id must be in 1..10, got " + std::to_string(id));
  }
  if (n < 2) throw std::invalid_argument("identities are stated for n >= 2");
  if (identity_requires_odd(id) && n % 2 == 0) {
    throw std::invalid_argument("identity " + std::to_string(id) + " holds for odd n only");
  }
  std::int64_t lhs = 0;
  if (id == 6 || id == 8) {
    lhs = inner == InnerSum::Literal ? lhs_double_literal(id, n) : lhs_double_counted(id, n);
  } else {
    lhs = lhs_single(id, n);
  }
  return IdentitySides{R(lhs), rhs(id, n)};
}

bool check_auxiliary_identity(std::int64_t u) {
  if (u < 1) throw std::invalid_argument("auxiliary identity is stated for u >= 1");
  const std::int64_t left = floor_div(u, 2) * floor_div(u - 1, 2);
  const R right = R(floor_div(u, 2) * floor_div(u - 2, 2)) + R(odd_indicator(u)) * R(u - 1, 2);
  return R(left) == right;
}

FormulaTerms FormulaTerms::of(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("formula terms need n >= 2");
  FormulaTerms t;
  t.n = n;
  t.odd = static_cast<int>(odd_indicator(n));
  t.floor_nm1_over_8 = floor_div(n - 1, 8);
  t.floor_nm1_over_12 = floor_div(n - 1, 12);
  t.floor_n_over_6 = floor_div(n, 6);
  t.floor_nm1_over_4 = floor_div(n - 1, 4);
  t.floor_nm1_over_6 = floor_div(n - 1, 6);
  t.n_mod6_is_4 = n % 6 == 4 ? 1 : 0;
  if (t.odd) t.half_sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
  return t;
}

ExactRational mean_formula(const ClassSpec& spec) {
  const std::int64_t n = checked_length(spec);
  const R nr(n);
  switch (spec.kind()) {
    case ClassKind::All:
      return R(2) * nr * nr - nr;
    case ClassKind::SkewSymmetric:
      return R(2) * nr * nr - R(3) * nr + R(2);
    case ClassKind::Reciprocal:
    case ClassKind::NegativeReciprocal: {
      const std::int64_t sign = n % 2 == 0 ? 1 : -1;  // (-1)^n
      return R(3) * nr * nr - R(3) * nr + R(1 - sign, 2);
    }
  }
  throw std::logic_error("unknown class");
}

ExactRational variance_formula(const ClassSpec& spec) {
  const std::int64_t n = checked_length(spec);
  const FormulaTerms t = FormulaTerms::of(n);
  const R nr(n);
  const R n2 = nr * nr;
  const R n3 = n2 * nr;
  switch (spec.kind()) {
    case ClassKind::All: {
      const std::int64_t sign = t.odd ? -1 : 1;
      return R(16, 3) * n3 - R(20) * n2 + R(56, 3) * nr - R(2) + R(2 * sign);
    }
    case ClassKind::SkewSymmetric:
      return R(32, 3) * n3 - R(88) * n2 + R(592, 3) * nr - R(512) * R(t.floor_nm1_over_8) -
             R(512) * R(t.floor_nm1_over_12) - R(88) + R(16) * R(*t.half_sign) * R(n - 3);
    case ClassKind::Reciprocal:
    case ClassKind::NegativeReciprocal:
      if (!t.odd) {
        return R(32) * n3 - R(216) * n2 + R(304) * nr + R(256) * R(t.floor_n_over_6) +
               R(256) * R(t.n_mod6_is_4);
      }
      return R(32) * n3 - R(144) * n2 + R(160) * nr - R(576) * R(t.floor_nm1_over_4) -
             R(512) * R(t.floor_nm1_over_6) - R(48);
  }
  throw std::logic_error("unknown class");
}

LimitConstants formula_limit_constants(ClassKind kind) {
  const R c = (kind == ClassKind::All || kind == ClassKind::SkewSymmetric) ? R(2) : R(3);
  return LimitConstants{c, R(1) / (c - R(1))};
}

void write_formula_csv(std::ostream& out, ClassKind kind, std::int64_t min_n, std::int64_t max_n,
                       bool header) {
  if (header) out << "class,n,mean,variance\n";
  for (std::int64_t n = std::max<std::int64_t>(min_n, 2); n <= max_n; ++n) {
    if (!ClassSpec::admissible(kind, static_cast<std::size_t>(n))) continue;
    const ClassSpec spec(kind, static_cast<std::size_t>(n));
    out << class_name(kind) << ',' << n << ',' << mean_formula(spec).to_string() << ','
        << variance_formula(spec).to_string() << '\n';
  }
}

}  // namespace littlewood
