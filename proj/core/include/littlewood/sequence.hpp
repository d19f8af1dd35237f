#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace littlewood {

/// Largest supported sequence length.
inline constexpr std::size_t kMaxLength = std::size_t{1} << 20;

/// Largest free-coefficient count an enumeration may cover.
inline constexpr unsigned kMaxEnumerationFreeCount = 40;

/// A length-n sequence of +1/-1 coefficients, i.e. the Littlewood polynomial
/// f(z) = sum a_j z^j.  Bit j of the packed storage is 0 for a_j = +1 and 1
/// for a_j = -1; bits at positions >= n are always zero.
class BinarySequence {
 public:
  /// All-ones sequence of length n.  Throws std::invalid_argument unless
  /// 2 <= n <= kMaxLength.
  explicit BinarySequence(std::size_t n);

  /// Parses the text form: a string over {+,-}, a_0 first.
  static BinarySequence from_string(std::string_view text);

  /// Builds from +1/-1 coefficients.
  static BinarySequence from_coefficients(std::span<const int> coefficients);

  std::size_t size() const noexcept { return n_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool is_negative(std::size_t j) const noexcept {
    return (words_[j >> 6] >> (j & 63)) & 1U;
  }
  int coefficient(std::size_t j) const noexcept { return is_negative(j) ? -1 : 1; }
  std::vector<int> coefficients() const;

  void set_negative(std::size_t j, bool negative) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (j & 63);
    if (negative) {
      words_[j >> 6] |= mask;
    } else {
      words_[j >> 6] &= ~mask;
    }
  }

  std::string to_string() const;

  friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// a_j -> -a_j
BinarySequence negated(const BinarySequence& seq);
/// a_j -> a_{n-1-j}
BinarySequence reversed(const BinarySequence& seq);
/// a_j -> (-1)^j a_j, i.e. f(z) -> f(-z)
BinarySequence alternated(const BinarySequence& seq);

enum class ClassKind { All, SkewSymmetric, Reciprocal, NegativeReciprocal };

/// Short name used in text interfaces: all, skew, reciprocal, negreciprocal.
std::string_view class_name(ClassKind kind) noexcept;
/// Inverse of class_name; also accepts a few aliases (L, S, R, N, symmetric,
/// antisymmetric).  Throws std::invalid_argument on unknown names.
ClassKind parse_class(std::string_view name);

/// One of the four polynomial classes at a fixed length.
class ClassSpec {
 public:
  /// Throws std::invalid_argument for n outside [2, kMaxLength] and for parity
  /// violations (skew-symmetric needs odd n, negative reciprocal even n).
  ClassSpec(ClassKind kind, std::size_t n);

  /// True when (kind, n) satisfies the class parity constraint and n >= 2.
  static bool admissible(ClassKind kind, std::size_t n) noexcept;

  ClassKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }

  /// Number of freely chosen coefficients a_0 .. a_{free_count-1}.
  std::size_t free_count() const noexcept;

  /// 2^free_count; only defined for free_count <= 63.
  std::uint64_t class_size() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

 private:
  ClassKind kind_;
  std::size_t n_;
};

/// Unique class member whose free coefficients are given by free_bits
/// (bit k encodes a_k, 1 meaning -1).  Requires free_bits < 2^free_count.
BinarySequence complete_from_free(const ClassSpec& spec, std::uint64_t free_bits);

/// Same as above with the free coefficients packed into words (bit k of the
/// concatenation encodes a_k).  Requires ceil(free_count/64) words and no bits
/// set at or above free_count.
BinarySequence complete_from_free(const ClassSpec& spec,
                                  std::span<const std::uint64_t> free_words);

/// Writes the completion into `out` in place; `out.size()` must equal spec.n().
void complete_into(const ClassSpec& spec, std::span<const std::uint64_t> free_words,
                   BinarySequence& out);

/// Whether seq satisfies the defining coefficient relation of the class.
/// Throws std::invalid_argument when the lengths differ.
bool is_member(const BinarySequence& seq, const ClassSpec& spec);

/// Half-open interval [lo, hi) of free-coefficient indices of one class.
struct EnumerationRange {
  ClassSpec spec;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  /// The whole class.  Throws std::invalid_argument if free_count exceeds
  /// kMaxEnumerationFreeCount.
  static EnumerationRange full(const ClassSpec& spec);

  std::uint64_t size() const noexcept { return hi - lo; }
};

/// Throws std::invalid_argument unless lo <= hi <= 2^free_count and
/// free_count <= kMaxEnumerationFreeCount.
void validate(const EnumerationRange& range);

/// Splits a range into `parts` contiguous, disjoint, covering subranges (some
/// possibly empty when parts exceeds the range size).
std::vector<EnumerationRange> partition(const EnumerationRange& range, std::size_t parts);

using SequenceVisitor = std::function<void(std::uint64_t index, const BinarySequence&)>;

/// Calls visitor on complete_from_free(spec, i) for i = lo .. hi-1 in order.
/// The sequence reference is only valid for the duration of the call.
std::uint64_t enumerate(const EnumerationRange& range, const SequenceVisitor& visitor);

/// Template flavour of enumerate for hot loops.
template <typename Visitor>
std::uint64_t for_each_member(const EnumerationRange& range, Visitor&& visitor) {
  validate(range);
  BinarySequence seq(range.spec.n());
  for (std::uint64_t i = range.lo; i < range.hi; ++i) {
    const std::uint64_t word = i;
    complete_into(range.spec, std::span<const std::uint64_t>(&word, 1), seq);
    visitor(i, static_cast<const BinarySequence&>(seq));
  }
  return range.size();
}

class CounterRng;

/// Uniform draw from the class; advances rng by ceil(free_count/64) outputs.
BinarySequence sample_uniform(const ClassSpec& spec, CounterRng& rng);

}  // namespace littlewood
