#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "littlewood/rng.hpp"
#include "littlewood/sequence.hpp"
#include "oracles.hpp"

using namespace littlewood;

namespace {

oracle::Kind to_oracle(ClassKind kind) {
  switch (kind) {
    case ClassKind::All:
      return oracle::Kind::All;
    case ClassKind::SkewSymmetric:
      return oracle::Kind::Skew;
    case ClassKind::Reciprocal:
      return oracle::Kind::Reciprocal;
    case ClassKind::NegativeReciprocal:
      return oracle::Kind::NegReciprocal;
  }
  return oracle::Kind::All;
}

constexpr ClassKind kKinds[] = {ClassKind::All, ClassKind::SkewSymmetric, ClassKind::Reciprocal,
                                ClassKind::NegativeReciprocal};

}  // namespace

TEST_CASE("text form round trip and validation") {
  const auto seq = BinarySequence::from_string("++-+-");
  CHECK(seq.size() == 5);
  CHECK(seq.coefficient(0) == 1);
  CHECK(seq.coefficient(2) == -1);
  CHECK(seq.to_string() == "++-+-");
  CHECK_THROWS_AS(BinarySequence::from_string("+"), std::invalid_argument);
  CHECK_THROWS_AS(BinarySequence::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(BinarySequence::from_string("++x"), std::invalid_argument);
  CHECK_THROWS_AS(BinarySequence(kMaxLength + 1), std::invalid_argument);

  // Bits beyond n stay clear, including across word boundaries.
  CounterRng rng(11);
  for (std::size_t n : {63, 64, 65, 130}) {
    std::string text;
    for (std::size_t j = 0; j < n; ++j) text.push_back((rng.next() & 1) ? '-' : '+');
    const auto s = BinarySequence::from_string(text);
    CHECK(s.to_string() == text);
    if (n % 64 != 0) CHECK((s.words().back() >> (n % 64)) == 0);
  }
}

TEST_CASE("class specs: free counts and parity") {
  CHECK(ClassSpec(ClassKind::All, 7).free_count() == 7);
  CHECK(ClassSpec(ClassKind::SkewSymmetric, 7).free_count() == 4);
  CHECK(ClassSpec(ClassKind::Reciprocal, 7).free_count() == 4);
  CHECK(ClassSpec(ClassKind::Reciprocal, 8).free_count() == 4);
  CHECK(ClassSpec(ClassKind::NegativeReciprocal, 8).free_count() == 4);
  CHECK(ClassSpec(ClassKind::SkewSymmetric, 3).class_size() == 4);

  CHECK_THROWS_AS(ClassSpec(ClassKind::SkewSymmetric, 6), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec(ClassKind::NegativeReciprocal, 5), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec(ClassKind::All, 1), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec(ClassKind::All, 0), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec(ClassKind::All, 100).class_size(), std::overflow_error);

  CHECK(parse_class("skew") == ClassKind::SkewSymmetric);
  CHECK(parse_class("N") == ClassKind::NegativeReciprocal);
  CHECK_THROWS_AS(parse_class("bogus"), std::invalid_argument);
}

TEST_CASE("complete_from_free examples") {
  CHECK(complete_from_free(ClassSpec(ClassKind::Reciprocal, 4), 0b00).to_string() == "++++");
  CHECK(complete_from_free(ClassSpec(ClassKind::SkewSymmetric, 5), 0b000).to_string() == "+++-+");
  CHECK(complete_from_free(ClassSpec(ClassKind::NegativeReciprocal, 4), 0b10).to_string() ==
        "+-+-");
  CHECK(complete_from_free(ClassSpec(ClassKind::All, 4), 0b1000).to_string() == "+++-");

  CHECK_THROWS_AS(complete_from_free(ClassSpec(ClassKind::Reciprocal, 4), 4),
                  std::invalid_argument);
}

TEST_CASE("is_member examples") {
  const auto ones = BinarySequence::from_string("++++");
  CHECK(is_member(ones, ClassSpec(ClassKind::Reciprocal, 4)));
  CHECK_FALSE(is_member(ones, ClassSpec(ClassKind::NegativeReciprocal, 4)));
  CHECK(is_member(BinarySequence::from_string("+++-+"), ClassSpec(ClassKind::SkewSymmetric, 5)));
  CHECK(is_member(ones, ClassSpec(ClassKind::All, 4)));
  CHECK_THROWS_AS(is_member(ones, ClassSpec(ClassKind::All, 5)), std::invalid_argument);
}

TEST_CASE("enumerate examples") {
  const auto skew3 = EnumerationRange::full(ClassSpec(ClassKind::SkewSymmetric, 3));
  CHECK(enumerate(skew3, [](std::uint64_t, const BinarySequence&) {}) == 4);

  std::vector<std::string> seen;
  enumerate(EnumerationRange::full(ClassSpec(ClassKind::All, 2)),
            [&](std::uint64_t, const BinarySequence& s) { seen.push_back(s.to_string()); });
  CHECK(seen == std::vector<std::string>{"++", "-+", "+-", "--"});

  const ClassSpec all3(ClassKind::All, 3);
  std::multiset<std::string> visited;
  for (const auto& r : {EnumerationRange{all3, 0, 4}, EnumerationRange{all3, 4, 8}}) {
    enumerate(r, [&](std::uint64_t, const BinarySequence& s) { visited.insert(s.to_string()); });
  }
  CHECK(visited.size() == 8);
  CHECK(std::set<std::string>(visited.begin(), visited.end()).size() == 8);

  CHECK_THROWS_AS(validate(EnumerationRange{all3, 5, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate(EnumerationRange{all3, 0, 9}), std::invalid_argument);
  CHECK_THROWS_AS(EnumerationRange::full(ClassSpec(ClassKind::All, 41)), std::invalid_argument);
}

TEST_CASE("partitions cover the class exactly once") {
  const auto full = EnumerationRange::full(ClassSpec(ClassKind::Reciprocal, 11));
  for (std::size_t parts : {1, 3, 7, 64, 100}) {
    std::vector<int> hits(full.size(), 0);
    for (const auto& r : partition(full, parts)) {
      enumerate(r, [&](std::uint64_t i, const BinarySequence&) { ++hits[i]; });
    }
    for (const int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("completion: membership, injectivity and agreement with filtered enumeration") {
  for (std::size_t n = 2; n <= 16; ++n) {
    // Oracle: filter every length-n sequence through the polynomial definitions.
    const auto everything = oracle::all_sequences(static_cast<int>(n));
    for (const ClassKind kind : kKinds) {
      if (!ClassSpec::admissible(kind, n)) continue;
      const ClassSpec spec(kind, n);
      std::set<std::string> produced;
      enumerate(EnumerationRange::full(spec), [&](std::uint64_t, const BinarySequence& s) {
        CHECK(is_member(s, spec));
        produced.insert(s.to_string());
      });
      CHECK(produced.size() == spec.class_size());

      std::set<std::string> filtered;
      for (const auto& a : everything) {
        const auto seq = BinarySequence::from_coefficients(a);
        const bool by_oracle = oracle::member(a, to_oracle(kind));
        CHECK(is_member(seq, spec) == by_oracle);
        if (by_oracle) filtered.insert(seq.to_string());
      }
      CHECK(filtered == produced);
    }
  }
}

TEST_CASE("completion of long sequences from multi-word free coefficients") {
  CounterRng rng(5);
  for (const ClassKind kind : kKinds) {
    for (std::size_t n : {129, 200, 1601, 1602}) {
      if (!ClassSpec::admissible(kind, n)) continue;
      const ClassSpec spec(kind, n);
      for (int rep = 0; rep < 5; ++rep) {
        const auto seq = sample_uniform(spec, rng);
        CHECK(is_member(seq, spec));
        CHECK(oracle::member(seq.coefficients(), to_oracle(kind)));
      }
    }
  }
}

TEST_CASE("sample_uniform determinism and uniformity") {
  const ClassSpec spec(ClassKind::All, 3);
  CounterRng a(1234);
  CounterRng b(1234);
  const auto a1 = sample_uniform(spec, a);
  const auto a2 = sample_uniform(spec, a);
  CHECK(a1 == sample_uniform(spec, b));
  CHECK(a2 == sample_uniform(spec, b));

  constexpr int kDraws = 100000;
  std::map<std::string, int> counts;
  CounterRng rng(42);
  for (int i = 0; i < kDraws; ++i) ++counts[sample_uniform(spec, rng).to_string()];
  REQUIRE(counts.size() == 8);
  const double p = 1.0 / 8.0;
  const double band = 5.0 * std::sqrt(p * (1 - p) / kDraws);
  for (const auto& [text, count] : counts) {
    CHECK(std::abs(static_cast<double>(count) / kDraws - p) <= band);
  }

  CounterRng r(9);
  for (std::size_t n : {10, 11, 64, 65, 300}) {
    const ClassSpec rec(ClassKind::Reciprocal, n);
    for (int i = 0; i < 20; ++i) CHECK(is_member(sample_uniform(rec, r), rec));
  }
  CHECK_THROWS_AS(ClassSpec(ClassKind::SkewSymmetric, 100), std::invalid_argument);
}

TEST_CASE("counter rng streams are replayable and distinct") {
  const CounterRng root(42);
  auto s1 = root.split(7);
  auto s2 = root.split(7);
  auto s3 = root.split(8);
  const auto x = s1.next();
  CHECK(x == s2.next());
  CHECK(x != s3.next());
  CHECK(root.at(0) == CounterRng(42).next());
}

TEST_CASE("symmetry maps") {
  const auto s = BinarySequence::from_string("++-+-");
  CHECK(negated(s).to_string() == "--+-+");
  CHECK(reversed(s).to_string() == "-+-++");
  CHECK(alternated(s).to_string() == "+----");
  CHECK(alternated(alternated(s)) == s);
}
