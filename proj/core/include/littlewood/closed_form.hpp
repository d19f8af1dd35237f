#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>

#include "littlewood/rational.hpp"
#include "littlewood/sequence.hpp"

namespace littlewood {

/// Number of summation identities; ids run 1..kIdentityCount.
inline constexpr int kIdentityCount = 10;

/// The identities with ids 7, 8 and 9 are stated for odd n only.
constexpr bool identity_requires_odd(int id) noexcept { return id >= 7 && id <= 9; }

/// How the inner sum over v of the two double-sum identities (ids 6 and 8) is
/// evaluated.  Literal loops over every v; Counted counts the v satisfying
/// the indicator in closed form for each u, which keeps a scan up to n = 10^4
/// linear per n.  Single-sum identities are always summed term by term.
enum class InnerSum { Literal, Counted };

struct IdentitySides {
  ExactRational lhs;
  ExactRational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Left side by brute-force summation over u (and v), right side in closed
/// form.  Throws std::invalid_argument for ids outside 1..10, n < 2, or even n
/// with an odd-only identity.
IdentitySides identity_sides(int id, std::int64_t n, InnerSum inner = InnerSum::Counted);

inline bool check_identity(int id, std::int64_t n, InnerSum inner = InnerSum::Counted) {
  return identity_sides(id, n, inner).holds();
}

/// floor(u/2) floor((u-1)/2) = floor(u/2) floor((u-2)/2) + I_u (u-1)/2, u >= 1.
bool check_auxiliary_identity(std::int64_t u);

/// Integer ingredients of the closed forms, each computed directly from n.
struct FormulaTerms {
  std::int64_t n = 0;
  int odd = 0;                         // I[n odd]
  std::int64_t floor_nm1_over_8 = 0;   // floor((n-1)/8)
  std::int64_t floor_nm1_over_12 = 0;  // floor((n-1)/12)
  std::int64_t floor_n_over_6 = 0;     // floor(n/6)
  std::int64_t floor_nm1_over_4 = 0;   // floor((n-1)/4)
  std::int64_t floor_nm1_over_6 = 0;   // floor((n-1)/6)
  int n_mod6_is_4 = 0;                 // I[n mod 6 = 4]
  std::optional<int> half_sign;        // (-1)^((n-1)/2), odd n only

  static FormulaTerms of(std::int64_t n);
};

/// Largest n accepted by the closed-form evaluators.
inline constexpr std::int64_t kMaxFormulaLength = 1'000'000;

/// Exact mean of ||f||_4^4 over the class.
ExactRational mean_formula(const ClassSpec& spec);

/// Exact (population) variance of ||f||_4^4 over the class.
ExactRational variance_formula(const ClassSpec& spec);

/// Limits as n -> infinity: mean / n^2 -> c and the merit factor tends to
/// 1 / (c - 1) in probability.
struct LimitConstants {
  ExactRational mean_ratio;
  ExactRational merit_factor;
};

LimitConstants formula_limit_constants(ClassKind kind);

/// Writes "class,n,mean,variance" rows for every admissible n in
/// [min_n, max_n].
void write_formula_csv(std::ostream& out, ClassKind kind, std::int64_t min_n, std::int64_t max_n,
                       bool header = true);

}  // namespace littlewood
