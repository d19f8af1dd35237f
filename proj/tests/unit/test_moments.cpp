#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "littlewood/closed_form.hpp"
#include "littlewood/moments.hpp"
#include "oracles.hpp"

using namespace littlewood;

TEST_CASE("exact moments examples") {
  // Brute force by hand: L_3 has norms 11 and 19, four sequences each.
  const auto all3 = exact_moments(ClassSpec(ClassKind::All, 3));
  CHECK(all3.mean == ExactRational(15));
  CHECK(all3.variance == ExactRational(16));
  CHECK(all3.sample_count == 8);
  CHECK(all3.method == MomentMethod::Enumeration);

  const auto skew5 = exact_moments(ClassSpec(ClassKind::SkewSymmetric, 5));
  CHECK(skew5.mean == ExactRational(37));
  CHECK(skew5.variance == ExactRational(64));

  const auto rec2 = exact_moments(ClassSpec(ClassKind::Reciprocal, 2));
  CHECK(rec2.mean == ExactRational(6));
  CHECK(rec2.variance == ExactRational(0));
}

TEST_CASE("skew-symmetric n = 5 takes exactly the values 29 and 45") {
  std::vector<int> counts(2, 0);
  enumerate(EnumerationRange::full(ClassSpec(ClassKind::SkewSymmetric, 5)),
            [&](std::uint64_t, const BinarySequence& s) {
              const auto v = oracle::norm4_fourth(s.coefficients());
              REQUIRE((v == 29 || v == 45));
              ++counts[v == 45];
            });
  CHECK(counts == std::vector<int>{4, 4});
}

TEST_CASE("exact moments agree with the brute-force oracle and the closed forms") {
  const std::pair<ClassKind, oracle::Kind> kinds[] = {
      {ClassKind::All, oracle::Kind::All},
      {ClassKind::SkewSymmetric, oracle::Kind::Skew},
      {ClassKind::Reciprocal, oracle::Kind::Reciprocal},
      {ClassKind::NegativeReciprocal, oracle::Kind::NegReciprocal}};
  for (int n = 2; n <= 12; ++n) {
    for (const auto& [kind, okind] : kinds) {
      if (!ClassSpec::admissible(kind, n)) continue;
      const ClassSpec spec(kind, n);
      const auto m = oracle::class_moments(n, okind);
      const auto report = exact_moments(spec, 2);
      CHECK(report.mean == ExactRational(m.s1, m.count));
      CHECK(report.variance == ExactRational(m.s2 * m.count - m.s1 * m.s1,
                                             static_cast<int128>(m.count) * m.count));
      const auto formula = formula_moments(spec);
      CHECK(report.mean == formula.mean);
      CHECK(report.variance == formula.variance);
    }
  }
}

TEST_CASE("power sums do not depend on partitioning or thread count") {
  const ClassSpec spec(ClassKind::Reciprocal, 27);
  const auto reference = class_power_sums(spec, 1);
  CHECK(reference.count == spec.class_size());
  for (std::size_t threads : {2, 3, 8}) CHECK(class_power_sums(spec, threads) == reference);
  for (std::size_t parts : {1, 5, 1000}) {
    PowerSums merged;
    for (const auto& r : partition(EnumerationRange::full(spec), parts)) merged += range_power_sums(r);
    CHECK(merged == reference);
  }
}

TEST_CASE("guardrails") {
  CHECK_THROWS_AS(exact_moments(ClassSpec(ClassKind::All, 31)), std::invalid_argument);
  CHECK_THROWS_AS(prop1_quantities(ClassSpec(ClassKind::All, 25)), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_moments(ClassSpec(ClassKind::All, 10), 999, 1), std::invalid_argument);
}

TEST_CASE("autocorrelation moment sums E and V") {
  const auto all4 = prop1_quantities(ClassSpec(ClassKind::All, 4));
  CHECK(all4.e == ExactRational(6));

  const auto rec5 = prop1_quantities(ClassSpec(ClassKind::Reciprocal, 5));
  CHECK(rec5.e == ExactRational(18));

  const auto skew5 = prop1_quantities(ClassSpec(ClassKind::SkewSymmetric, 5));
  CHECK(skew5.e == ExactRational(6));
  CHECK(skew5.mean == ExactRational(37));
  CHECK(skew5.variance == ExactRational(64));

  for (std::size_t n = 2; n <= 14; ++n) {
    for (const ClassKind kind : {ClassKind::All, ClassKind::SkewSymmetric, ClassKind::Reciprocal,
                                 ClassKind::NegativeReciprocal}) {
      if (!ClassSpec::admissible(kind, n)) continue;
      const ClassSpec spec(kind, n);
      const auto p = prop1_quantities(spec, 2);
      const auto exact = exact_moments(spec, 2);
      CHECK(p.mean == exact.mean);
      CHECK(p.variance == exact.variance);
    }
  }
}

TEST_CASE("Monte Carlo examples") {
  const ClassSpec all101(ClassKind::All, 101);
  const auto report = monte_carlo_moments(all101, 100000, 42);
  REQUIRE(report.estimate.has_value());
  CHECK(std::abs(report.estimate->mean - 20301.0) <= 5 * report.estimate->mean_se);
  CHECK(report.seed == 42U);
  CHECK(report.sample_count == 100000U);
  CHECK(report.estimate->variance_se > 0);

  const ClassSpec rec100(ClassKind::Reciprocal, 100);
  const auto rec = monte_carlo_moments(rec100, 100000, 7);
  const double ratio = rec.estimate->mean / 10000.0;
  CHECK(ratio >= 2.9);
  CHECK(ratio <= 3.1);

  const auto flat = monte_carlo_moments(ClassSpec(ClassKind::All, 2), 1000, 3);
  CHECK(flat.variance == ExactRational(0));
  CHECK(flat.mean == ExactRational(6));
}

TEST_CASE("Monte Carlo is deterministic and thread-count independent") {
  const ClassSpec spec(ClassKind::SkewSymmetric, 61);
  const auto a = monte_carlo_values(spec, 5000, 123, 1);
  const auto b = monte_carlo_values(spec, 5000, 123, 4);
  CHECK(a == b);
  CHECK(a != monte_carlo_values(spec, 5000, 124, 1));
  const auto ra = monte_carlo_moments(spec, 5000, 123, 1);
  const auto rb = monte_carlo_moments(spec, 5000, 123, 3);
  CHECK(to_json(ra, false).dump() == to_json(rb, false).dump());
}

TEST_CASE("quantiles") {
  const std::vector<double> data{1, 2, 3, 4};
  CHECK(quantile_sorted(data, 0.5) == doctest::Approx(2.5));
  CHECK(quantile_sorted(data, 0.25) == doctest::Approx(1.75));
  CHECK(quantile_sorted(data, 0.0) == 1);
  CHECK(quantile_sorted(data, 1.0) == 4);
  CHECK_THROWS_AS(quantile_sorted(std::vector<double>{}, 0.5), std::invalid_argument);
}

TEST_CASE("convergence scan shape") {
  const std::vector<std::size_t> single{41};
  const auto rows = convergence_scan(ClassKind::All, single, 2000, 5, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 41);
  CHECK(rows[0].formula_ratio == doctest::Approx((2.0 * 41 * 41 - 41) / (41.0 * 41)));
  // 1 + 1/F = ratio holds sample-wise, so the medians satisfy it too.
  CHECK(1.0 + 1.0 / rows[0].median_merit == doctest::Approx(rows[0].median_ratio));

  const std::vector<std::size_t> unsorted{41, 21};
  CHECK_THROWS_AS(convergence_scan(ClassKind::All, unsorted, 100, 5), std::invalid_argument);
  const std::vector<std::size_t> even{40};
  CHECK_THROWS_AS(convergence_scan(ClassKind::SkewSymmetric, even, 100, 5), std::invalid_argument);
}

TEST_CASE("moment report CSV and JSON") {
  const auto report = exact_moments(ClassSpec(ClassKind::All, 3));
  std::ostringstream out;
  write_moment_csv_header(out);
  write_moment_csv_row(out, report);
  CHECK(out.str() ==
        "class,n,method,mean_num,mean_den,var_num,var_den,samples,seed\n"
        "all,3,enumeration,15,1,16,1,8,\n");
  const auto j = to_json(report, false);
  CHECK(j["mean_num"] == 15);
  CHECK(j["var_den"] == 1);
  CHECK(j["seed"].is_null());
  CHECK_FALSE(j.contains("wall_time_s"));
  CHECK(to_json(report, true).contains("wall_time_s"));

  const auto mc = monte_carlo_moments(ClassSpec(ClassKind::All, 2), 1000, 9);
  std::ostringstream mc_out;
  write_moment_csv_row(mc_out, mc);
  CHECK(mc_out.str() == "all,2,montecarlo,6,1,0,1,1000,9\n");
}
