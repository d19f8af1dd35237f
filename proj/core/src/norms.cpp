#include "littlewood/norms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace littlewood {

std::int64_t AutocorrelationProfile::sum_of_squares() const {
  std::int64_t total = 0;
  for (const auto value : c) total += value * value;
  return total;
}

AutocorrelationProfile autocorrelation_reference(const BinarySequence& seq) {
  const std::size_t n = seq.size();
  const std::vector<int> a = seq.coefficients();
  AutocorrelationProfile profile{n, std::vector<std::int64_t>(n - 1, 0)};
  for (std::size_t u = 1; u < n; ++u) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < u; ++j) sum += a[j] * a[j + n - u];
    profile.c[u - 1] = sum;
  }
  return profile;
}

namespace {

// Number of sign disagreements between a_j and a_{j+shift} over j < count.
std::int64_t shifted_mismatches(std::span<const std::uint64_t> words, std::size_t shift,
                                std::size_t count) {
  const std::size_t q = shift >> 6;
  const unsigned r = shift & 63;
  const std::size_t full = count >> 6;
  const unsigned tail = count & 63;
  std::int64_t mismatches = 0;

  auto shifted_word = [&](std::size_t w) -> std::uint64_t {
    const std::size_t src = w + q;
    std::uint64_t lo = src < words.size() ? words[src] : 0;
    if (r == 0) return lo;
    const std::uint64_t hi = src + 1 < words.size() ? words[src + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
  };

  for (std::size_t w = 0; w < full; ++w) {
    mismatches += std::popcount(words[w] ^ shifted_word(w));
  }
  if (tail != 0) {
    const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
    mismatches += std::popcount((words[full] ^ shifted_word(full)) & mask);
  }
  return mismatches;
}

}  // namespace

std::int64_t autocorrelation_at(const BinarySequence& seq, std::size_t u) {
  const std::size_t n = seq.size();
  if (u == 0 || u >= n) throw std::out_of_range("autocorrelation shift out of range");
  const auto words = seq.words();
  if (n <= 64) {
    const std::uint64_t b = words[0];
    const std::uint64_t mask = (std::uint64_t{1} << u) - 1;
    return static_cast<std::int64_t>(u) - 2 * std::popcount((b ^ (b >> (n - u))) & mask);
  }
  return static_cast<std::int64_t>(u) - 2 * shifted_mismatches(words, n - u, u);
}

void autocorrelation_into(const BinarySequence& seq, std::span<std::int64_t> out) {
  const std::size_t n = seq.size();
  if (out.size() != n - 1) throw std::invalid_argument("autocorrelation buffer must hold n-1 values");
  const auto words = seq.words();
  if (n <= 64) {
    const std::uint64_t b = words[0];
    for (std::size_t u = 1; u < n; ++u) {
      const std::uint64_t mask = (std::uint64_t{1} << u) - 1;
      out[u - 1] = static_cast<std::int64_t>(u) - 2 * std::popcount((b ^ (b >> (n - u))) & mask);
    }
    return;
  }
  for (std::size_t u = 1; u < n; ++u) {
    out[u - 1] = static_cast<std::int64_t>(u) - 2 * shifted_mismatches(words, n - u, u);
  }
}

AutocorrelationProfile autocorrelation(const BinarySequence& seq) {
  AutocorrelationProfile profile{seq.size(), std::vector<std::int64_t>(seq.size() - 1)};
  autocorrelation_into(seq, profile.c);
  return profile;
}

std::int64_t sum_c_squared(const BinarySequence& seq) {
  const std::size_t n = seq.size();
  const auto words = seq.words();
  std::int64_t total = 0;
  if (n <= 64) {
    const std::uint64_t b = words[0];
    for (std::size_t u = 1; u < n; ++u) {
      const std::uint64_t mask = (std::uint64_t{1} << u) - 1;
      const std::int64_t c =
          static_cast<std::int64_t>(u) - 2 * std::popcount((b ^ (b >> (n - u))) & mask);
      total += c * c;
    }
    return total;
  }
  for (std::size_t u = 1; u < n; ++u) {
    const std::int64_t c = static_cast<std::int64_t>(u) - 2 * shifted_mismatches(words, n - u, u);
    total += c * c;
  }
  return total;
}

std::optional<ExactRational> merit_factor(std::size_t n, std::int64_t sum_c_sq) {
  if (sum_c_sq == 0) return std::nullopt;
  const auto nn = static_cast<int128>(n);
  return ExactRational(nn * nn, 2 * static_cast<int128>(sum_c_sq));
}

L4Report l4_report(const BinarySequence& seq) {
  L4Report report;
  report.n = seq.size();
  report.sum_c_sq = sum_c_squared(seq);
  const auto n = static_cast<std::int64_t>(report.n);
  report.norm4_fourth = n * n + 2 * report.sum_c_sq;
  report.merit_factor = merit_factor(report.n, report.sum_c_sq);
  return report;
}

namespace {

// |f(w^k)|^2 at the M = 4n roots of unity w = exp(2 pi i / M).
std::vector<double> circle_power_samples(const BinarySequence& seq) {
  const std::size_t n = seq.size();
  if (n > kMaxQuadratureLength) {
    throw std::invalid_argument("quadrature is limited to n <= " +
                                std::to_string(kMaxQuadratureLength));
  }
  const std::size_t m = 4 * n;
  std::vector<double> cos_table(m);
  std::vector<double> sin_table(m);
  for (std::size_t t = 0; t < m; ++t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
    cos_table[t] = std::cos(angle);
    sin_table[t] = std::sin(angle);
  }
  const std::vector<int> a = seq.coefficients();
  std::vector<double> power(m);
  for (std::size_t k = 0; k < m; ++k) {
    double re = 0.0;
    double im = 0.0;
    std::size_t index = 0;  // (j * k) mod m
    for (std::size_t j = 0; j < n; ++j) {
      re += a[j] * cos_table[index];
      im += a[j] * sin_table[index];
      index += k;
      if (index >= m) index -= m;
    }
    power[k] = re * re + im * im;
  }
  return power;
}

}  // namespace

double l4_by_quadrature(const BinarySequence& seq) {
  const auto power = circle_power_samples(seq);
  double total = 0.0;
  for (const double p : power) total += p * p;
  return total / static_cast<double>(power.size());
}

double l2_by_quadrature(const BinarySequence& seq) {
  const auto power = circle_power_samples(seq);
  const double total = std::accumulate(power.begin(), power.end(), 0.0);
  return total / static_cast<double>(power.size());
}

nlohmann::ordered_json to_json(const BinarySequence& seq, const AutocorrelationProfile& profile,
                               const L4Report& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["seq"] = seq.to_string();
  j["c"] = profile.c;
  j["sum_c_sq"] = report.sum_c_sq;
  j["norm4_fourth"] = report.norm4_fourth;
  if (report.merit_factor) {
    j["merit_factor"] = report.merit_factor->to_string();
  } else {
    j["merit_factor"] = nullptr;
  }
  return j;
}

}  // namespace littlewood
