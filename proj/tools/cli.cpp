#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "littlewood/littlewood.hpp"

namespace littlewood::cli {

namespace {

constexpr double kQuadratureTolerance = 1e-9;

struct RunConfig {
  std::string class_name = "any";
  std::string n = "";
  std::string min_n = "2";
  std::string max_n = "";
  std::string samples = "100000";
  std::string count = "100";
  std::optional<std::uint64_t> seed;
  std::string n_list = "101,401,1601";
  int identity = 0;
  std::size_t threads = 0;
  std::string format;
  std::string output;
  bool no_timing = false;
  std::string sequence;
};

// Raised for bad flags and guardrail violations; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<ClassKind> selected_classes(const std::string& name) {
  if (name == "any") {
    return {ClassKind::All, ClassKind::SkewSymmetric, ClassKind::Reciprocal,
            ClassKind::NegativeReciprocal};
  }
  return {parse_class(name)};
}

ClassKind single_class(const std::string& name) {
  if (name == "any") throw UsageError("this command needs a single --class");
  return parse_class(name);
}

std::size_t parse_length(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  const std::uint64_t value = parse_count(text);
  if (value < 2) throw UsageError(std::string(flag) + " must be at least 2");
  if (value > kMaxLength) {
    throw UsageError(std::string(flag) + " = " + text + " exceeds the length cap " +
                     std::to_string(kMaxLength));
  }
  return static_cast<std::size_t>(value);
}

std::uint64_t resolve_seed(const RunConfig& config, std::ostream& err) {
  if (config.seed) return *config.seed;
  std::random_device device;
  const std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  err << "no --seed given; using generated seed " << seed << '\n';
  return seed;
}

std::string header_comment(std::optional<std::uint64_t> seed) {
  std::string line = "# " + std::string(kVersionString);
  if (seed) line += " seed=" + std::to_string(*seed);
  return line + '\n';
}

// ---- commands --------------------------------------------------------------

int cmd_verify_theorems(const RunConfig& config, std::ostream& out) {
  const auto min_n = static_cast<std::size_t>(parse_count(config.min_n));
  if (config.max_n.empty()) throw UsageError("--max-n is required");
  const std::uint64_t max_n = parse_count(config.max_n);
  const auto classes = selected_classes(config.class_name);

  if (max_n > kMaxLength) {
    throw UsageError("guardrail: --max-n " + config.max_n + " exceeds the length cap " +
                     std::to_string(kMaxLength));
  }
  for (const ClassKind kind : classes) {
    // The largest admissible n in range has the largest free count.
    for (std::uint64_t n : {max_n, max_n - 1}) {
      if (n < std::max<std::uint64_t>(min_n, 2) || !ClassSpec::admissible(kind, n)) continue;
      const ClassSpec spec(kind, n);
      if (spec.free_count() > kMaxExactFreeCount) {
        throw UsageError("guardrail: class " + std::string(class_name(kind)) + " at n = " +
                         std::to_string(n) + " has 2^" + std::to_string(spec.free_count()) +
                         " members; exhaustive verification is capped at 2^" +
                         std::to_string(kMaxExactFreeCount));
      }
    }
  }

  const bool json = config.format == "json";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << header_comment(std::nullopt) << "class,n,enum_mean,enum_var,formula_mean,formula_var,status\n";
  int failures = 0;
  int checks = 0;
  for (const ClassKind kind : classes) {
    for (std::uint64_t n = std::max<std::size_t>(min_n, 2); n <= max_n; ++n) {
      if (!ClassSpec::admissible(kind, n)) continue;
      const ClassSpec spec(kind, n);
      const auto exact = exact_moments(spec, config.threads);
      const auto formula = formula_moments(spec);
      const bool pass = exact.mean == formula.mean && exact.variance == formula.variance;
      ++checks;
      if (!pass) ++failures;
      if (json) {
        rows.push_back({{"class", class_name(kind)},
                        {"n", n},
                        {"enum_mean", exact.mean.to_string()},
                        {"enum_var", exact.variance.to_string()},
                        {"formula_mean", formula.mean.to_string()},
                        {"formula_var", formula.variance.to_string()},
                        {"status", pass ? "PASS" : "FAIL"}});
      } else {
        csv << class_name(kind) << ',' << n << ',' << exact.mean.to_string() << ','
            << exact.variance.to_string() << ',' << formula.mean.to_string() << ','
            << formula.variance.to_string() << ',' << (pass ? "PASS" : "FAIL") << '\n';
      }
    }
  }
  if (json) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersionString;
    doc["checks"] = checks;
    doc["failures"] = failures;
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_verify_identities(const RunConfig& config, std::ostream& out) {
  const std::uint64_t min_n = std::max<std::uint64_t>(2, parse_count(config.min_n));
  const std::uint64_t max_n = config.max_n.empty() ? 10000 : parse_count(config.max_n);
  if (max_n > 1'000'000) throw UsageError("guardrail: identity scans are capped at n <= 10^6");

  std::vector<int> ids;
  if (config.identity != 0) {
    ids.push_back(config.identity);
  } else {
    for (int id = 1; id <= kIdentityCount; ++id) ids.push_back(id);
  }

  const bool json = config.format == "json";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << header_comment(std::nullopt) << "identity,min_n,max_n,checked,failures,status\n";
  int total_failures = 0;
  auto emit = [&](const std::string& id, std::uint64_t lo, std::uint64_t hi, std::uint64_t checked,
                  std::uint64_t failures) {
    const char* status = failures == 0 ? "PASS" : "FAIL";
    if (json) {
      rows.push_back({{"identity", id},
                      {"min_n", lo},
                      {"max_n", hi},
                      {"checked", checked},
                      {"failures", failures},
                      {"status", status}});
    } else {
      csv << id << ',' << lo << ',' << hi << ',' << checked << ',' << failures << ',' << status
          << '\n';
    }
  };

  for (const int id : ids) {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    for (std::uint64_t n = min_n; n <= max_n; ++n) {
      if (identity_requires_odd(id) && n % 2 == 0) continue;
      ++checked;
      if (!check_identity(id, static_cast<std::int64_t>(n))) ++failures;
    }
    total_failures += static_cast<int>(failures);
    emit(std::to_string(id), min_n, max_n, checked, failures);
  }
  if (config.identity == 0) {
    std::uint64_t failures = 0;
    for (std::uint64_t u = 1; u <= max_n; ++u) {
      if (!check_auxiliary_identity(static_cast<std::int64_t>(u))) ++failures;
    }
    total_failures += static_cast<int>(failures);
    emit("aux", 1, max_n, max_n, failures);
  }

  if (json) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersionString;
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return total_failures == 0 ? kExitOk : kExitFailed;
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ClassSpec spec(single_class(config.class_name), parse_length(config.n, "--n"));
  const std::uint64_t samples = parse_count(config.samples);
  if (samples < kMinMonteCarloSamples) {
    throw UsageError("--samples must be at least " + std::to_string(kMinMonteCarloSamples));
  }
  const std::uint64_t seed = resolve_seed(config, err);
  const auto report = monte_carlo_moments(spec, samples, seed, config.threads);
  if (config.format == "csv") {
    out << header_comment(seed);
    write_moment_csv_header(out);
    write_moment_csv_row(out, report);
  } else {
    auto j = to_json(report, !config.no_timing);
    if (spec.n() <= static_cast<std::size_t>(kMaxFormulaLength)) {
      j["formula_mean"] = mean_formula(spec).to_string();
      j["formula_variance"] = variance_formula(spec).to_string();
    }
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_exact(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec(single_class(config.class_name), parse_length(config.n, "--n"));
  if (spec.free_count() > kMaxExactFreeCount) {
    throw UsageError("guardrail: exact moments are capped at 2^" +
                     std::to_string(kMaxExactFreeCount) + " class members");
  }
  const auto report = exact_moments(spec, config.threads);
  if (config.format == "csv") {
    out << header_comment(std::nullopt);
    write_moment_csv_header(out);
    write_moment_csv_row(out, report);
  } else {
    out << to_json(report, !config.no_timing).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ClassKind kind = single_class(config.class_name);
  std::vector<std::size_t> lengths;
  std::stringstream list(config.n_list);
  for (std::string item; std::getline(list, item, ',');) {
    lengths.push_back(parse_length(item, "--n-list"));
  }
  if (lengths.empty()) throw UsageError("--n-list is empty");
  if (!std::is_sorted(lengths.begin(), lengths.end())) {
    throw UsageError("--n-list must be ascending");
  }
  for (const auto n : lengths) {
    if (!ClassSpec::admissible(kind, n)) {
      throw UsageError("class " + std::string(class_name(kind)) + " does not admit n = " +
                       std::to_string(n));
    }
    if (n > kMaxQuadratureLength) throw UsageError("guardrail: scan lengths are capped at 2^14");
  }
  const std::uint64_t samples = parse_count(config.samples);
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const std::uint64_t seed = resolve_seed(config, err);
  const auto rows = convergence_scan(kind, lengths, samples, seed, config.threads);
  if (config.format == "json") {
    out << scan_to_json(kind, seed, rows).dump(2) << '\n';
  } else {
    out << header_comment(seed);
    write_scan_csv(out, kind, seed, rows);
  }
  return kExitOk;
}

int cmd_search(const RunConfig& config, std::ostream& out) {
  const ClassSpec spec(single_class(config.class_name), parse_length(config.n, "--n"));
  if (spec.free_count() > kMaxSearchFreeCount) {
    throw UsageError("guardrail: exhaustive search is capped at 2^" +
                     std::to_string(kMaxSearchFreeCount) + " class members");
  }
  const auto result = min_search(spec, config.threads);
  if (config.format == "csv") {
    out << header_comment(std::nullopt) << "class,n,min,best_merit_factor,witness_count,witness\n";
    for (const auto& w : result.witnesses) {
      out << class_name(spec.kind()) << ',' << spec.n() << ',' << result.min_norm4_fourth << ','
          << result.max_merit_factor.to_string() << ',' << result.witness_count << ','
          << w.to_string() << '\n';
    }
  } else {
    out << to_json(result).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string kind_name = config.class_name == "any" ? "all" : config.class_name;
  const ClassSpec spec(parse_class(kind_name), parse_length(config.n, "--n"));
  if (spec.n() > kMaxQuadratureLength) {
    throw UsageError("guardrail: quadrature is capped at n <= " +
                     std::to_string(kMaxQuadratureLength));
  }
  const std::uint64_t count = parse_count(config.count);
  const std::uint64_t seed = resolve_seed(config, err);
  const CounterRng root(seed);
  double max_l4 = 0.0;
  double max_l2 = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    CounterRng stream = root.split(i);
    const auto seq = sample_uniform(spec, stream);
    const auto exact = static_cast<double>(norm4_fourth(seq));
    const double n = static_cast<double>(spec.n());
    max_l4 = std::max(max_l4, std::abs(l4_by_quadrature(seq) - exact) / exact);
    max_l2 = std::max(max_l2, std::abs(l2_by_quadrature(seq) - n) / n);
  }
  const bool pass = max_l4 <= kQuadratureTolerance && max_l2 <= kQuadratureTolerance;
  nlohmann::ordered_json j;
  j["class"] = class_name(spec.kind());
  j["n"] = spec.n();
  j["count"] = count;
  j["seed"] = seed;
  j["max_rel_error_l4"] = max_l4;
  j["max_rel_error_l2"] = max_l2;
  j["tolerance"] = kQuadratureTolerance;
  j["status"] = pass ? "PASS" : "FAIL";
  j["version"] = kVersionString;
  if (config.format == "csv") {
    out << header_comment(seed) << "class,n,count,seed,max_rel_error_l4,max_rel_error_l2,status\n"
        << class_name(spec.kind()) << ',' << spec.n() << ',' << count << ',' << seed << ','
        << format_double(max_l4) << ',' << format_double(max_l2) << ',' << (pass ? "PASS" : "FAIL")
        << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return pass ? kExitOk : kExitFailed;
}

int cmd_norm(const RunConfig& config, std::istream& in, std::ostream& out) {
  std::string text = config.sequence;
  if (text.empty() || text == "-") {
    text.clear();
    in >> text;
  }
  if (text.empty()) throw UsageError("no sequence given (argument or stdin)");
  const auto seq = BinarySequence::from_string(text);
  const auto profile = autocorrelation(seq);
  const auto report = l4_report(seq);
  if (config.format == "csv") {
    out << "n,seq,sum_c_sq,norm4_fourth,merit_factor\n"
        << report.n << ',' << text << ',' << report.sum_c_sq << ',' << report.norm4_fourth << ','
        << (report.merit_factor ? report.merit_factor->to_string() : "") << '\n';
  } else {
    out << to_json(seq, profile, report).dump() << '\n';
  }
  return kExitOk;
}

int cmd_formula(const RunConfig& config, std::ostream& out) {
  const std::uint64_t min_n = parse_count(config.min_n);
  const std::uint64_t max_n = config.max_n.empty() ? min_n : parse_count(config.max_n);
  if (max_n > static_cast<std::uint64_t>(kMaxFormulaLength)) {
    throw UsageError("guardrail: closed forms are evaluated for n <= 10^6");
  }
  out << header_comment(std::nullopt);
  bool header = true;
  for (const ClassKind kind : selected_classes(config.class_name)) {
    write_formula_csv(out, kind, static_cast<std::int64_t>(min_n), static_cast<std::int64_t>(max_n),
                      header);
    header = false;
  }
  return kExitOk;
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  auto parse_plain = [](std::string_view digits) -> std::uint64_t {
    if (digits.empty()) throw std::invalid_argument("empty number");
    std::uint64_t value = 0;
    for (const char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("invalid number '" + std::string(digits) + "'");
      if (__builtin_mul_overflow(value, 10U, &value) ||
          __builtin_add_overflow(value, static_cast<unsigned>(c - '0'), &value)) {
        throw std::invalid_argument("number '" + std::string(digits) + "' overflows 64 bits");
      }
    }
    return value;
  };
  auto power = [&](std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t value = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
      if (__builtin_mul_overflow(value, base, &value)) {
        throw std::invalid_argument("number '" + std::string(text) + "' overflows 64 bits");
      }
    }
    return value;
  };
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    return power(parse_plain(text.substr(0, caret)), parse_plain(text.substr(caret + 1)));
  }
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::uint64_t value = parse_plain(text.substr(0, e));
    if (__builtin_mul_overflow(value, power(10, parse_plain(text.substr(e + 1))), &value)) {
      throw std::invalid_argument("number '" + std::string(text) + "' overflows 64 bits");
    }
    return value;
  }
  return parse_plain(text);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact L4-norm and merit-factor statistics of Littlewood polynomials", "littlewood"};
  app.set_version_flag("--version", std::string(kVersionString));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--threads", config.threads,
                 "Worker threads (0 = $LITTLEWOOD_THREADS or hardware concurrency)");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", config.output, "Write output to this file instead of stdout");
  app.add_flag("--no-timing", config.no_timing, "Omit wall-time fields from reports");

  const std::string class_help = "Class: all, skew, reciprocal, negreciprocal";

  auto* verify_theorems =
      app.add_subcommand("verify-theorems", "Exhaustive moments vs. closed-form mean and variance");
  verify_theorems->add_option("--class", config.class_name, class_help + " or any")
      ->capture_default_str();
  verify_theorems->add_option("--min-n", config.min_n)->capture_default_str();
  verify_theorems->add_option("--max-n", config.max_n, "Largest n (e.g. 20, 2^5)")->required();

  auto* verify_identities =
      app.add_subcommand("verify-identities", "Check the summation identities up to --max-n");
  verify_identities->add_option("--id", config.identity, "Single identity 1..10")
      ->check(CLI::Range(1, kIdentityCount));
  verify_identities->add_option("--min-n", config.min_n)->capture_default_str();
  verify_identities->add_option("--max-n", config.max_n, "Largest n (default 10000)");

  auto* sample = app.add_subcommand("sample", "Monte Carlo mean and variance of ||f||_4^4");
  sample->add_option("--class", config.class_name, class_help)->required();
  sample->add_option("--n", config.n)->required();
  sample->add_option("--samples", config.samples)->capture_default_str();
  sample->add_option("--seed", config.seed, "64-bit seed (generated and printed if absent)");

  auto* exact = app.add_subcommand("exact", "Exact moments by exhaustive enumeration");
  exact->add_option("--class", config.class_name, class_help)->required();
  exact->add_option("--n", config.n)->required();

  auto* scan = app.add_subcommand("scan", "Merit-factor convergence scan (CSV for plotting)");
  scan->add_option("--class", config.class_name, class_help)->required();
  scan->add_option("--n-list", config.n_list, "Comma-separated ascending lengths")
      ->capture_default_str();
  scan->add_option("--samples", config.samples)->capture_default_str();
  scan->add_option("--seed", config.seed, "64-bit seed (generated and printed if absent)");

  auto* search = app.add_subcommand("search", "Exhaustive minimum of ||f||_4^4 with witnesses");
  search->add_option("--class", config.class_name, class_help)->required();
  search->add_option("--n", config.n)->required();

  auto* crosscheck =
      app.add_subcommand("crosscheck", "Unit-circle quadrature vs. exact autocorrelation value");
  crosscheck->add_option("--class", config.class_name, class_help);
  crosscheck->add_option("--n", config.n)->required();
  crosscheck->add_option("--count", config.count)->capture_default_str();
  crosscheck->add_option("--seed", config.seed, "64-bit seed (generated and printed if absent)");

  auto* norm = app.add_subcommand("norm", "Autocorrelations, L4 norm and merit factor of a sequence");
  norm->add_option("sequence", config.sequence, "Sequence over {+,-}; read from stdin if absent");

  auto* formula = app.add_subcommand("formula", "Closed-form mean and variance as CSV");
  formula->add_option("--class", config.class_name, class_help + " or any")->capture_default_str();
  formula->add_option("--min-n", config.min_n)->capture_default_str();
  formula->add_option("--max-n", config.max_n);

  // A sequence such as "++" or "-+-" would otherwise be read as a CLI11
  // separator or a flag, so mark it as positional.
  static const std::string kPositional = "--";
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    const bool sequence_like =
        !a.empty() && a.find_first_not_of("+-") == std::string::npos && i > 0 && args[i - 1] == "norm" &&
        !(a == "--" && i + 1 < args.size());
    if (sequence_like) argv.push_back(kPositional.c_str());
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersionString << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write output file '" << config.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*verify_theorems) {
      if (config.format.empty()) config.format = "csv";
      return cmd_verify_theorems(config, *sink);
    }
    if (*verify_identities) {
      if (config.format.empty()) config.format = "csv";
      return cmd_verify_identities(config, *sink);
    }
    if (*sample) return cmd_sample(config, *sink, err);
    if (*exact) return cmd_exact(config, *sink);
    if (*scan) return cmd_scan(config, *sink, err);
    if (*search) return cmd_search(config, *sink);
    if (*crosscheck) return cmd_crosscheck(config, *sink, err);
    if (*norm) return cmd_norm(config, in, *sink);
    if (*formula) return cmd_formula(config, *sink);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace littlewood::cli
