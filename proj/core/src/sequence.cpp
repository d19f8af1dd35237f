#include "littlewood/sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "littlewood/rng.hpp"

namespace littlewood {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void check_length(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("sequence length must be at least 2, got " + std::to_string(n));
  }
  if (n > kMaxLength) {
    throw std::invalid_argument("sequence length " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(kMaxLength));
  }
}

// Sign flip linking a_{n-1-j} to a_j for the dependent half of each class.
bool dependent_flip(ClassKind kind, std::size_t n, std::size_t j) {
  switch (kind) {
    case ClassKind::Reciprocal:
      return false;
    case ClassKind::NegativeReciprocal:
      return true;
    case ClassKind::SkewSymmetric:
      return ((j + (n - 1) / 2) & 1U) != 0;
    case ClassKind::All:
      break;
  }
  return false;
}

}  // namespace

BinarySequence::BinarySequence(std::size_t n) : n_(n) {
  check_length(n);
  words_.assign(word_count(n), 0);
}

BinarySequence BinarySequence::from_string(std::string_view text) {
  BinarySequence seq(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    const char c = text[j];
    if (c == '-') {
      seq.set_negative(j, true);
    } else if (c != '+') {
      throw std::invalid_argument("sequence text may only contain '+' and '-', found '" +
                                  std::string(1, c) + "' at position " + std::to_string(j));
    }
  }
  return seq;
}

BinarySequence BinarySequence::from_coefficients(std::span<const int> coefficients) {
  BinarySequence seq(coefficients.size());
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j] == -1) {
      seq.set_negative(j, true);
    } else if (coefficients[j] != 1) {
      throw std::invalid_argument("coefficients must be +1 or -1");
    }
  }
  return seq;
}

std::vector<int> BinarySequence::coefficients() const {
  std::vector<int> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = coefficient(j);
  return out;
}

std::string BinarySequence::to_string() const {
  std::string out(n_, '+');
  for (std::size_t j = 0; j < n_; ++j) {
    if (is_negative(j)) out[j] = '-';
  }
  return out;
}

BinarySequence negated(const BinarySequence& seq) {
  BinarySequence out(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) out.set_negative(j, !seq.is_negative(j));
  return out;
}

BinarySequence reversed(const BinarySequence& seq) {
  const std::size_t n = seq.size();
  BinarySequence out(n);
  for (std::size_t j = 0; j < n; ++j) out.set_negative(j, seq.is_negative(n - 1 - j));
  return out;
}

BinarySequence alternated(const BinarySequence& seq) {
  BinarySequence out(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    out.set_negative(j, seq.is_negative(j) != ((j & 1U) != 0));
  }
  return out;
}

std::string_view class_name(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::All:
      return "all";
    case ClassKind::SkewSymmetric:
      return "skew";
    case ClassKind::Reciprocal:
      return "reciprocal";
    case ClassKind::NegativeReciprocal:
      return "negreciprocal";
  }
  return "?";
}

ClassKind parse_class(std::string_view name) {
  if (name == "all" || name == "L" || name == "littlewood") return ClassKind::All;
  if (name == "skew" || name == "S" || name == "skew-symmetric") return ClassKind::SkewSymmetric;
  if (name == "reciprocal" || name == "R" || name == "symmetric") return ClassKind::Reciprocal;
  if (name == "negreciprocal" || name == "N" || name == "negative-reciprocal" ||
      name == "antisymmetric") {
    return ClassKind::NegativeReciprocal;
  }
  throw std::invalid_argument("unknown class '" + std::string(name) +
                              "' (expected all, skew, reciprocal or negreciprocal)");
}

bool ClassSpec::admissible(ClassKind kind, std::size_t n) noexcept {
  if (n < 2 || n > kMaxLength) return false;
  if (kind == ClassKind::SkewSymmetric) return n % 2 == 1;
  if (kind == ClassKind::NegativeReciprocal) return n % 2 == 0;
  return true;
}

ClassSpec::ClassSpec(ClassKind kind, std::size_t n) : kind_(kind), n_(n) {
  check_length(n);
  if (kind == ClassKind::SkewSymmetric && n % 2 == 0) {
    throw std::invalid_argument("skew-symmetric class requires odd n, got " + std::to_string(n));
  }
  if (kind == ClassKind::NegativeReciprocal && n % 2 == 1) {
    throw std::invalid_argument("negative reciprocal class requires even n, got " +
                                std::to_string(n));
  }
}

std::size_t ClassSpec::free_count() const noexcept {
  switch (kind_) {
    case ClassKind::All:
      return n_;
    case ClassKind::SkewSymmetric:
      return (n_ + 1) / 2;
    case ClassKind::Reciprocal:
      return (n_ + 1) / 2;
    case ClassKind::NegativeReciprocal:
      return n_ / 2;
  }
  return n_;
}

std::uint64_t ClassSpec::class_size() const {
  const std::size_t k = free_count();
  if (k > 63) {
    throw std::overflow_error("class size 2^" + std::to_string(k) + " does not fit in 64 bits");
  }
  return std::uint64_t{1} << k;
}

void complete_into(const ClassSpec& spec, std::span<const std::uint64_t> free_words,
                   BinarySequence& out) {
  const std::size_t n = spec.n();
  const std::size_t k = spec.free_count();
  if (out.size() != n) throw std::invalid_argument("output sequence has the wrong length");

  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t w = j >> 6;
    const bool bit = w < free_words.size() && ((free_words[w] >> (j & 63)) & 1U);
    out.set_negative(j, bit);
  }
  for (std::size_t j = 0; j + k < n; ++j) {
    out.set_negative(n - 1 - j, out.is_negative(j) != dependent_flip(spec.kind(), n, j));
  }
}

BinarySequence complete_from_free(const ClassSpec& spec,
                                  std::span<const std::uint64_t> free_words) {
  const std::size_t k = spec.free_count();
  if (free_words.size() != word_count(k)) {
    throw std::invalid_argument("expected " + std::to_string(word_count(k)) +
                                " words of free coefficients");
  }
  if (k % 64 != 0 && (free_words.back() >> (k % 64)) != 0) {
    throw std::invalid_argument("free coefficient bits set beyond free_count");
  }
  BinarySequence out(spec.n());
  complete_into(spec, free_words, out);
  return out;
}

BinarySequence complete_from_free(const ClassSpec& spec, std::uint64_t free_bits) {
  const std::size_t k = spec.free_count();
  if (k < 64 && (free_bits >> k) != 0) {
    throw std::invalid_argument("free index " + std::to_string(free_bits) +
                                " is outside [0, 2^" + std::to_string(k) + ")");
  }
  BinarySequence out(spec.n());
  complete_into(spec, std::span<const std::uint64_t>(&free_bits, 1), out);
  return out;
}

bool is_member(const BinarySequence& seq, const ClassSpec& spec) {
  const std::size_t n = spec.n();
  if (seq.size() != n) {
    throw std::invalid_argument("sequence length " + std::to_string(seq.size()) +
                                " does not match class length " + std::to_string(n));
  }
  if (spec.kind() == ClassKind::All) return true;
  for (std::size_t j = 0; j < n; ++j) {
    const bool expected = seq.is_negative(j) != dependent_flip(spec.kind(), n, j);
    if (seq.is_negative(n - 1 - j) != expected) return false;
  }
  return true;
}

EnumerationRange EnumerationRange::full(const ClassSpec& spec) {
  if (spec.free_count() > kMaxEnumerationFreeCount) {
    throw std::invalid_argument("class has 2^" + std::to_string(spec.free_count()) +
                                " members; enumeration is capped at free count " +
                                std::to_string(kMaxEnumerationFreeCount));
  }
  return EnumerationRange{spec, 0, spec.class_size()};
}

void validate(const EnumerationRange& range) {
  if (range.spec.free_count() > kMaxEnumerationFreeCount) {
    throw std::invalid_argument("enumeration free count " +
                                std::to_string(range.spec.free_count()) + " exceeds the cap " +
                                std::to_string(kMaxEnumerationFreeCount));
  }
  if (range.lo > range.hi || range.hi > range.spec.class_size()) {
    throw std::invalid_argument("invalid enumeration range [" + std::to_string(range.lo) + ", " +
                                std::to_string(range.hi) + ")");
  }
}

std::vector<EnumerationRange> partition(const EnumerationRange& range, std::size_t parts) {
  validate(range);
  parts = std::max<std::size_t>(parts, 1);
  std::vector<EnumerationRange> out;
  out.reserve(parts);
  const std::uint64_t total = range.size();
  const std::uint64_t base = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t lo = range.lo;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::uint64_t len = base + (p < extra ? 1 : 0);
    out.push_back(EnumerationRange{range.spec, lo, lo + len});
    lo += len;
  }
  return out;
}

std::uint64_t enumerate(const EnumerationRange& range, const SequenceVisitor& visitor) {
  return for_each_member(range, visitor);
}

BinarySequence sample_uniform(const ClassSpec& spec, CounterRng& rng) {
  const std::size_t k = spec.free_count();
  std::vector<std::uint64_t> free_words(word_count(k));
  for (auto& w : free_words) w = rng.next();
  if (k % 64 != 0) free_words.back() &= (std::uint64_t{1} << (k % 64)) - 1;
  BinarySequence out(spec.n());
  complete_into(spec, free_words, out);
  return out;
}

}  // namespace littlewood
