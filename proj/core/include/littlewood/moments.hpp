#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "littlewood/rational.hpp"
#include "littlewood/sequence.hpp"

namespace littlewood {

enum class MomentMethod { Enumeration, Formula, MonteCarlo };

std::string_view method_name(MomentMethod method) noexcept;

/// Raw power sums of ||f||_4^4 over a set of sequences.  Merging is exact and
/// associative, so any partition of a class gives identical totals.
struct PowerSums {
  std::uint64_t count = 0;
  std::uint64_t s1 = 0;  // sum of ||f||_4^4
  uint128 s2 = 0;        // sum of (||f||_4^4)^2

  PowerSums& operator+=(const PowerSums& other) {
    count += other.count;
    s1 += other.s1;
    s2 += other.s2;
    return *this;
  }
  friend bool operator==(const PowerSums&, const PowerSums&) = default;
};

/// Power sums over one range, on the calling thread.
PowerSums range_power_sums(const EnumerationRange& range);

/// Power sums over the whole class, split into fixed chunks run on `threads`
/// workers (0 = default).  The result does not depend on the thread count.
PowerSums class_power_sums(const ClassSpec& spec, std::size_t threads = 0);

struct MomentEstimate {
  double mean = 0.0;
  double mean_se = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;
};

/// Mean and variance of ||f||_4^4 over a class.  For Enumeration and Formula
/// the values are the exact population moments.  For MonteCarlo they are the
/// exact sample mean and the Bessel-corrected sample variance of the drawn
/// values, and `estimate` carries the same as floats with standard errors.
struct MomentReport {
  ClassSpec spec;
  MomentMethod method = MomentMethod::Enumeration;
  ExactRational mean;
  ExactRational variance;
  std::optional<MomentEstimate> estimate;
  std::uint64_t sample_count = 0;  // class size for Enumeration, draws for MonteCarlo
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0.0;
};

/// Largest free count exact_moments will enumerate.
inline constexpr std::size_t kMaxExactFreeCount = 30;
/// Largest free count prop1_quantities will enumerate.
inline constexpr std::size_t kMaxPropOneFreeCount = 24;
/// Fewest draws monte_carlo_moments accepts.
inline constexpr std::uint64_t kMinMonteCarloSamples = 1000;

/// Exact population mean and variance by enumerating the class.
MomentReport exact_moments(const ClassSpec& spec, std::size_t threads = 0);

/// Mean and variance from the closed forms.
MomentReport formula_moments(const ClassSpec& spec);

/// E = sum_u E[C_u^2] and V = sum_{u,v} E[C_u^2 C_v^2] over the class, with
/// the mean n^2 + 2E and variance 4(V - E^2) they imply.
struct PropOneReport {
  ClassSpec spec;
  ExactRational e;
  ExactRational v;
  ExactRational mean;
  ExactRational variance;
};

PropOneReport prop1_quantities(const ClassSpec& spec, std::size_t threads = 0);

/// ||f||_4^4 of `samples` uniform draws; draw i uses stream i of the seed, so
/// the values do not depend on the thread count.
std::vector<std::int64_t> monte_carlo_values(const ClassSpec& spec, std::uint64_t samples,
                                             std::uint64_t seed, std::size_t threads = 0);

MomentReport monte_carlo_moments(const ClassSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                 std::size_t threads = 0);

/// Type-7 (linear interpolation) sample quantile of sorted data, p in [0, 1].
double quantile_sorted(std::span<const double> sorted, double p);

struct ScanRow {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  double median_merit = 0.0;
  double iqr_merit = 0.0;
  double median_ratio = 0.0;  // (||f||_4 / sqrt(n))^4
  double iqr_ratio = 0.0;
  double mean_ratio = 0.0;
  double mean_ratio_se = 0.0;
  double formula_ratio = 0.0;  // mean_formula / n^2
};

/// Sample statistics of the merit factor and of ||f||_4^4 / n^2 at each n.
/// Lengths the class does not admit are rejected.
std::vector<ScanRow> convergence_scan(ClassKind kind, std::span<const std::size_t> n_list,
                                      std::uint64_t samples, std::uint64_t seed,
                                      std::size_t threads = 0);

/// CSV: class,n,method,mean_num,mean_den,var_num,var_den,samples,seed
void write_moment_csv_header(std::ostream& out);
void write_moment_csv_row(std::ostream& out, const MomentReport& report);

/// JSON mirror of the CSV fields plus float estimates, the version string and
/// (when include_timing) the wall time.
nlohmann::ordered_json to_json(const MomentReport& report, bool include_timing);

void write_scan_csv(std::ostream& out, ClassKind kind, std::uint64_t seed,
                    std::span<const ScanRow> rows);
nlohmann::ordered_json scan_to_json(ClassKind kind, std::uint64_t seed,
                                    std::span<const ScanRow> rows);

/// Shortest round-trip decimal form, stable across runs.
std::string format_double(double value);

/// A number when it fits in 64 bits, otherwise a decimal string.
nlohmann::ordered_json json_integer(int128 value);

}  // namespace littlewood
