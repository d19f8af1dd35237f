#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "littlewood/rational.hpp"
#include "littlewood/sequence.hpp"

namespace littlewood {

/// The eight maps generated by negation, reversal and alternation, applied to
/// seq.  Element 0 is seq itself.
std::vector<BinarySequence> symmetry_orbit(const BinarySequence& seq);

/// Lexicographically smallest text form among the orbit elements that stay
/// inside the class.  Every class is closed under negation and reversal;
/// alternation is only used where it preserves membership (it swaps the
/// reciprocal and negative reciprocal classes at even n).
BinarySequence canonical_form(const BinarySequence& seq, const ClassSpec& spec);

struct ExtremalResult {
  ClassSpec spec;
  std::int64_t min_norm4_fourth = 0;
  ExactRational max_merit_factor;
  std::vector<BinarySequence> witnesses;  // canonical, sorted by text form
  std::uint64_t witness_count = 0;        // minimisers before canonicalisation
};

/// Largest free count min_search will scan.
inline constexpr std::size_t kMaxSearchFreeCount = 28;

/// Exhaustive minimum of ||f||_4^4 over the class.  Throws
/// std::invalid_argument above kMaxSearchFreeCount.
ExtremalResult min_search(const ClassSpec& spec, std::size_t threads = 0);

/// {"class", "n", "min", "best_merit_factor", "witness_count", "witnesses", "version"}
nlohmann::ordered_json to_json(const ExtremalResult& result);

}  // namespace littlewood
