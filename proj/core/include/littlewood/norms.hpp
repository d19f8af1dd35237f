#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "littlewood/rational.hpp"
#include "littlewood/sequence.hpp"

namespace littlewood {

/// Aperiodic autocorrelations C_1 .. C_{n-1}, where
/// C_u = sum_{j=0}^{u-1} a_j a_{j+n-u}.  c[u-1] holds C_u.
struct AutocorrelationProfile {
  std::size_t n = 0;
  std::vector<std::int64_t> c;

  std::int64_t at(std::size_t u) const { return c.at(u - 1); }
  std::int64_t sum_of_squares() const;

  friend bool operator==(const AutocorrelationProfile&, const AutocorrelationProfile&) = default;
};

/// Double-loop evaluation straight from the definition.  This is the oracle
/// the bit-parallel kernel is tested against.
AutocorrelationProfile autocorrelation_reference(const BinarySequence& seq);

/// XOR + popcount kernel; agrees exactly with autocorrelation_reference.
AutocorrelationProfile autocorrelation(const BinarySequence& seq);

/// Kernel entry point writing C_1 .. C_{n-1} into out (size n-1) without
/// allocating.
void autocorrelation_into(const BinarySequence& seq, std::span<std::int64_t> out);

/// Single autocorrelation C_u for 1 <= u <= n-1.
std::int64_t autocorrelation_at(const BinarySequence& seq, std::size_t u);

/// sum_{u>=1} C_u^2 computed with the bit-parallel kernel.
std::int64_t sum_c_squared(const BinarySequence& seq);

/// ||f||_4^4 = n^2 + 2 * sum C_u^2.
inline std::int64_t norm4_fourth(const BinarySequence& seq) {
  const auto n = static_cast<std::int64_t>(seq.size());
  return n * n + 2 * sum_c_squared(seq);
}

/// Exact merit factor n^2 / (2 * sum_c_sq); nullopt when sum_c_sq is zero.
std::optional<ExactRational> merit_factor(std::size_t n, std::int64_t sum_c_sq);

struct L4Report {
  std::size_t n = 0;
  std::int64_t sum_c_sq = 0;
  std::int64_t norm4_fourth = 0;
  std::optional<ExactRational> merit_factor;
};

L4Report l4_report(const BinarySequence& seq);

/// Largest length accepted by the quadrature routines.
inline constexpr std::size_t kMaxQuadratureLength = std::size_t{1} << 14;

/// Mean of |f|^4 over M = 4n equally spaced points of the unit circle.  As
/// |f|^4 on the circle is a trigonometric polynomial of degree 2(n-1), the
/// rule is exact up to rounding.  Throws std::invalid_argument above
/// kMaxQuadratureLength.
double l4_by_quadrature(const BinarySequence& seq);

/// Mean of |f|^2 on the same nodes; equals n up to rounding.
double l2_by_quadrature(const BinarySequence& seq);

/// {"n", "seq", "c", "sum_c_sq", "norm4_fourth", "merit_factor"}
nlohmann::ordered_json to_json(const BinarySequence& seq, const AutocorrelationProfile& profile,
                               const L4Report& report);

}  // namespace littlewood
