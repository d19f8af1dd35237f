#include "littlewood/moments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "littlewood/closed_form.hpp"
#include "littlewood/norms.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/rng.hpp"
#include "littlewood/version.hpp"

namespace littlewood {

namespace {

constexpr std::size_t kEnumerationChunks = 256;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_free_count(const ClassSpec& spec, std::size_t cap, const char* what) {
  if (spec.free_count() > cap) {
    throw std::invalid_argument(std::string(what) + ": class " + std::string(class_name(spec.kind())) +
                                " at n = " + std::to_string(spec.n()) + " has 2^" +
                                std::to_string(spec.free_count()) + " members, cap is 2^" +
                                std::to_string(cap));
  }
}

// Population moments S1/N and S2/N - (S1/N)^2 as exact rationals.
void set_population_moments(MomentReport& report, const PowerSums& sums) {
  const auto count = static_cast<int128>(sums.count);
  const auto s1 = static_cast<int128>(sums.s1);
  if (sums.s2 > static_cast<uint128>(std::numeric_limits<int128>::max())) {
    throw std::overflow_error("second power sum exceeds 127 bits");
  }
  const auto s2 = static_cast<int128>(sums.s2);
  report.mean = ExactRational(s1, count);
  report.variance = ExactRational(checked::sub(checked::mul(s2, count), checked::mul(s1, s1)),
                                  checked::mul(count, count));
}

}  // namespace

std::string_view method_name(MomentMethod method) noexcept {
  switch (method) {
    case MomentMethod::Enumeration:
      return "enumeration";
    case MomentMethod::Formula:
      return "formula";
    case MomentMethod::MonteCarlo:
      return "montecarlo";
  }
  return "?";
}

PowerSums range_power_sums(const EnumerationRange& range) {
  PowerSums sums;
  for_each_member(range, [&](std::uint64_t, const BinarySequence& seq) {
    const auto value = static_cast<std::uint64_t>(norm4_fourth(seq));
    sums.s1 += value;
    sums.s2 += static_cast<uint128>(value) * value;
  });
  sums.count = range.size();
  return sums;
}

PowerSums class_power_sums(const ClassSpec& spec, std::size_t threads) {
  const auto full = EnumerationRange::full(spec);
  const auto chunks = partition(full, static_cast<std::size_t>(
                                          std::min<std::uint64_t>(kEnumerationChunks, full.size())));
  std::vector<PowerSums> partial(chunks.size());
  parallel_tasks(chunks.size(), threads,
                 [&](std::size_t t) { partial[t] = range_power_sums(chunks[t]); });
  PowerSums total;
  for (const auto& p : partial) total += p;
  return total;
}

MomentReport exact_moments(const ClassSpec& spec, std::size_t threads) {
  require_free_count(spec, kMaxExactFreeCount, "exact moments");
  const auto start = Clock::now();
  MomentReport report{spec, MomentMethod::Enumeration};
  const PowerSums sums = class_power_sums(spec, threads);
  set_population_moments(report, sums);
  report.sample_count = sums.count;
  report.wall_time_s = seconds_since(start);
  return report;
}

MomentReport formula_moments(const ClassSpec& spec) {
  const auto start = Clock::now();
  MomentReport report{spec, MomentMethod::Formula};
  report.mean = mean_formula(spec);
  report.variance = variance_formula(spec);
  report.wall_time_s = seconds_since(start);
  return report;
}

namespace {

// Per-range sums of C_u^2 and of C_u^2 C_v^2 (u <= v, row-major upper
// triangle including the diagonal).
struct CorrelationMoments {
  std::vector<std::int64_t> square_sums;
  std::vector<std::int64_t> product_sums;
};

CorrelationMoments range_correlation_moments(const EnumerationRange& range) {
  const std::size_t m = range.spec.n() - 1;
  CorrelationMoments acc{std::vector<std::int64_t>(m, 0), std::vector<std::int64_t>(m * m, 0)};
  std::vector<std::int64_t> c(m);
  std::vector<std::int64_t> sq(m);
  for_each_member(range, [&](std::uint64_t, const BinarySequence& seq) {
    autocorrelation_into(seq, c);
    for (std::size_t u = 0; u < m; ++u) sq[u] = c[u] * c[u];
    for (std::size_t u = 0; u < m; ++u) {
      acc.square_sums[u] += sq[u];
      std::int64_t* row = acc.product_sums.data() + u * m;
      for (std::size_t v = u; v < m; ++v) row[v] += sq[u] * sq[v];
    }
  });
  return acc;
}

}  // namespace

PropOneReport prop1_quantities(const ClassSpec& spec, std::size_t threads) {
  require_free_count(spec, kMaxPropOneFreeCount, "autocorrelation moment sums");
  const auto full = EnumerationRange::full(spec);
  const auto chunks = partition(full, static_cast<std::size_t>(
                                          std::min<std::uint64_t>(kEnumerationChunks, full.size())));
  std::vector<CorrelationMoments> partial(chunks.size());
  parallel_tasks(chunks.size(), threads,
                 [&](std::size_t t) { partial[t] = range_correlation_moments(chunks[t]); });

  const std::size_t m = spec.n() - 1;
  int128 e_sum = 0;
  int128 v_sum = 0;
  for (const auto& p : partial) {
    for (std::size_t u = 0; u < m; ++u) {
      e_sum += p.square_sums[u];
      v_sum += p.product_sums[u * m + u];
      for (std::size_t v = u + 1; v < m; ++v) v_sum += 2 * static_cast<int128>(p.product_sums[u * m + v]);
    }
  }
  const auto count = static_cast<int128>(full.size());
  PropOneReport report{spec, ExactRational(e_sum, count), ExactRational(v_sum, count)};
  const auto n = static_cast<int128>(spec.n());
  report.mean = ExactRational(n * n) + ExactRational(2) * report.e;
  report.variance = ExactRational(4) * (report.v - report.e * report.e);
  return report;
}

std::vector<std::int64_t> monte_carlo_values(const ClassSpec& spec, std::uint64_t samples,
                                             std::uint64_t seed, std::size_t threads) {
  constexpr std::uint64_t kBlock = 1024;
  const CounterRng root(seed);
  std::vector<std::int64_t> values(samples);
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  parallel_tasks(static_cast<std::size_t>(blocks), threads, [&](std::size_t b) {
    const std::uint64_t lo = b * kBlock;
    const std::uint64_t hi = std::min(samples, lo + kBlock);
    for (std::uint64_t i = lo; i < hi; ++i) {
      CounterRng stream = root.split(i);
      values[i] = norm4_fourth(sample_uniform(spec, stream));
    }
  });
  return values;
}

MomentReport monte_carlo_moments(const ClassSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                 std::size_t threads) {
  if (samples < kMinMonteCarloSamples) {
    throw std::invalid_argument("Monte Carlo needs at least " +
                                std::to_string(kMinMonteCarloSamples) + " samples");
  }
  const auto start = Clock::now();
  const auto values = monte_carlo_values(spec, samples, seed, threads);

  int128 s1 = 0;
  int128 s2 = 0;
  for (const auto x : values) {
    s1 = checked::add(s1, x);
    s2 = checked::add(s2, checked::mul(x, x));
  }
  const auto count = static_cast<int128>(samples);

  MomentReport report{spec, MomentMethod::MonteCarlo};
  report.mean = ExactRational(s1, count);
  report.variance = ExactRational(checked::sub(checked::mul(count, s2), checked::mul(s1, s1)),
                                  checked::mul(count, count - 1));
  report.sample_count = samples;
  report.seed = seed;

  MomentEstimate est;
  est.mean = report.mean.to_double();
  est.variance = report.variance.to_double();
  double m4 = 0.0;
  for (const auto x : values) {
    const double d = static_cast<double>(x) - est.mean;
    m4 += d * d * d * d;
  }
  m4 /= static_cast<double>(samples);
  const auto nd = static_cast<double>(samples);
  est.mean_se = std::sqrt(est.variance / nd);
  est.variance_se = std::sqrt(std::max(0.0, m4 - est.variance * est.variance * (nd - 3) / (nd - 1)) / nd);
  report.estimate = est;
  report.wall_time_s = seconds_since(start);
  return report;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<ScanRow> convergence_scan(ClassKind kind, std::span<const std::size_t> n_list,
                                      std::uint64_t samples, std::uint64_t seed,
                                      std::size_t threads) {
  if (!std::is_sorted(n_list.begin(), n_list.end())) {
    throw std::invalid_argument("scan lengths must be in ascending order");
  }
  if (samples < 2) throw std::invalid_argument("scan needs at least 2 samples per length");
  std::vector<ScanRow> rows;
  for (const std::size_t n : n_list) {
    const ClassSpec spec(kind, n);
    const auto values = monte_carlo_values(spec, samples, seed, threads);
    const auto nn = static_cast<double>(n) * static_cast<double>(n);
    std::vector<double> merit(values.size());
    std::vector<double> ratio(values.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      ratio[i] = static_cast<double>(values[i]) / nn;
      const double excess = static_cast<double>(values[i]) - nn;  // 2 sum C_u^2, never zero
      merit[i] = nn / excess;
      sum += ratio[i];
    }
    const double mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (const double r : ratio) ss += (r - mean) * (r - mean);
    const double var = ss / static_cast<double>(values.size() - 1);

    std::sort(merit.begin(), merit.end());
    std::sort(ratio.begin(), ratio.end());
    ScanRow row;
    row.n = n;
    row.samples = samples;
    row.median_merit = quantile_sorted(merit, 0.5);
    row.iqr_merit = quantile_sorted(merit, 0.75) - quantile_sorted(merit, 0.25);
    row.median_ratio = quantile_sorted(ratio, 0.5);
    row.iqr_ratio = quantile_sorted(ratio, 0.75) - quantile_sorted(ratio, 0.25);
    row.mean_ratio = mean;
    row.mean_ratio_se = std::sqrt(var / static_cast<double>(values.size()));
    row.formula_ratio = mean_formula(spec).to_double() / nn;
    rows.push_back(row);
  }
  return rows;
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

nlohmann::ordered_json json_integer(int128 value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

void write_moment_csv_header(std::ostream& out) {
  out << "class,n,method,mean_num,mean_den,var_num,var_den,samples,seed\n";
}

void write_moment_csv_row(std::ostream& out, const MomentReport& report) {
  out << class_name(report.spec.kind()) << ',' << report.spec.n() << ','
      << method_name(report.method) << ',' << to_string(report.mean.numerator()) << ','
      << to_string(report.mean.denominator()) << ',' << to_string(report.variance.numerator())
      << ',' << to_string(report.variance.denominator()) << ',' << report.sample_count << ',';
  if (report.seed) out << *report.seed;
  out << '\n';
}

nlohmann::ordered_json to_json(const MomentReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["class"] = class_name(report.spec.kind());
  j["n"] = report.spec.n();
  j["method"] = method_name(report.method);
  j["mean_num"] = json_integer(report.mean.numerator());
  j["mean_den"] = json_integer(report.mean.denominator());
  j["var_num"] = json_integer(report.variance.numerator());
  j["var_den"] = json_integer(report.variance.denominator());
  j["samples"] = report.sample_count;
  j["seed"] = report.seed ? nlohmann::ordered_json(*report.seed) : nlohmann::ordered_json(nullptr);
  j["mean"] = report.mean.to_string();
  j["variance"] = report.variance.to_string();
  if (report.estimate) {
    j["mean_estimate"] = report.estimate->mean;
    j["mean_se"] = report.estimate->mean_se;
    j["variance_estimate"] = report.estimate->variance;
    j["variance_se"] = report.estimate->variance_se;
  }
  j["version"] = kVersionString;
  if (include_timing) j["wall_time_s"] = report.wall_time_s;
  return j;
}

void write_scan_csv(std::ostream& out, ClassKind kind, std::uint64_t seed,
                    std::span<const ScanRow> rows) {
  out << "class,n,samples,seed,median_merit,iqr_merit,median_ratio,iqr_ratio,mean_ratio,"
         "mean_ratio_se,formula_ratio\n";
  for (const auto& r : rows) {
    out << class_name(kind) << ',' << r.n << ',' << r.samples << ',' << seed << ','
        << format_double(r.median_merit) << ',' << format_double(r.iqr_merit) << ','
        << format_double(r.median_ratio) << ',' << format_double(r.iqr_ratio) << ','
        << format_double(r.mean_ratio) << ',' << format_double(r.mean_ratio_se) << ','
        << format_double(r.formula_ratio) << '\n';
  }
}

nlohmann::ordered_json scan_to_json(ClassKind kind, std::uint64_t seed,
                                    std::span<const ScanRow> rows) {
  nlohmann::ordered_json j;
  j["class"] = class_name(kind);
  j["seed"] = seed;
  j["version"] = kVersionString;
  auto& out = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"samples", r.samples},
                   {"median_merit", r.median_merit},
                   {"iqr_merit", r.iqr_merit},
                   {"median_ratio", r.median_ratio},
                   {"iqr_ratio", r.iqr_ratio},
                   {"mean_ratio", r.mean_ratio},
                   {"mean_ratio_se", r.mean_ratio_se},
                   {"formula_ratio", r.formula_ratio}});
  }
  return j;
}

}  // namespace littlewood
