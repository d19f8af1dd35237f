#pragma once

// Test-only reference computations.  They work on plain int coefficient
// vectors and never call into the library's kernels, completion logic or
// moment accumulators.

#include <cstdint>
#include <vector>

namespace oracle {

using Coefficients = std::vector<int>;

/// All 2^n sign vectors, index bit j set meaning a_j = -1.
inline std::vector<Coefficients> all_sequences(int n) {
  std::vector<Coefficients> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Coefficients a(n);
    for (int j = 0; j < n; ++j) a[j] = ((mask >> j) & 1U) ? -1 : 1;
    out.push_back(a);
  }
  return out;
}

/// Coefficients of f(z) f(1/z): entry s + n - 1 holds sum_{j-k=s} a_j a_k.
inline std::vector<std::int64_t> self_product(const Coefficients& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::int64_t> p(2 * n - 1, 0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) p[j - k + n - 1] += a[j] * a[k];
  }
  return p;
}

/// C_u read off f(z) f(1/z) at exponent n - u.
inline std::vector<std::int64_t> autocorrelations(const Coefficients& a) {
  const int n = static_cast<int>(a.size());
  const auto p = self_product(a);
  std::vector<std::int64_t> c(n - 1);
  for (int u = 1; u < n; ++u) c[u - 1] = p[(n - u) + n - 1];
  return c;
}

/// ||f||_4^4 by Parseval: the squared l2 norm of the coefficients of |f|^2.
inline std::int64_t norm4_fourth(const Coefficients& a) {
  std::int64_t total = 0;
  for (const auto v : self_product(a)) total += v * v;
  return total;
}

/// Membership from the polynomial identities: compare f(z) with
/// sign * z^{n-1} f(eps / z), coefficient by coefficient.
enum class Kind { All, Skew, Reciprocal, NegReciprocal };

inline bool member(const Coefficients& a, Kind kind) {
  const int n = static_cast<int>(a.size());
  if (kind == Kind::All) return true;
  if (kind == Kind::Skew && n % 2 == 0) return false;
  if (kind == Kind::NegReciprocal && n % 2 == 1) return false;
  const int eps = kind == Kind::Skew ? -1 : 1;
  int sign = kind == Kind::NegReciprocal ? -1 : 1;
  if (kind == Kind::Skew && ((n - 1) / 2) % 2 == 1) sign = -1;
  // z^{n-1} f(eps/z) = sum_j a_j eps^j z^{n-1-j}; coefficient of z^i uses j = n-1-i.
  for (int i = 0; i < n; ++i) {
    const int j = n - 1 - i;
    const int eps_pow = (eps == -1 && j % 2 == 1) ? -1 : 1;
    if (a[i] != sign * eps_pow * a[j]) return false;
  }
  return true;
}

/// Population mean and variance of ||f||_4^4 over the class as reduced
/// fractions num/den, from filtered brute force over all 2^n sequences.
struct Moments {
  std::int64_t count = 0;
  __int128 s1 = 0;
  __int128 s2 = 0;
};

inline Moments class_moments(int n, Kind kind) {
  Moments m;
  for (const auto& a : all_sequences(n)) {
    if (!member(a, kind)) continue;
    const std::int64_t v = norm4_fourth(a);
    ++m.count;
    m.s1 += v;
    m.s2 += static_cast<__int128>(v) * v;
  }
  return m;
}

}  // namespace oracle
