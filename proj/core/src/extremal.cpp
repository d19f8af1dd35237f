#include "littlewood/extremal.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "littlewood/norms.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/version.hpp"

namespace littlewood {

std::vector<BinarySequence> symmetry_orbit(const BinarySequence& seq) {
  std::vector<BinarySequence> orbit;
  orbit.reserve(8);
  const BinarySequence alt = alternated(seq);
  for (const BinarySequence& base : {seq, alt}) {
    const BinarySequence rev = reversed(base);
    orbit.push_back(base);
    orbit.push_back(negated(base));
    orbit.push_back(rev);
    orbit.push_back(negated(rev));
  }
  return orbit;
}

BinarySequence canonical_form(const BinarySequence& seq, const ClassSpec& spec) {
  std::string best = seq.to_string();
  for (const auto& image : symmetry_orbit(seq)) {
    if (!is_member(image, spec)) continue;
    std::string text = image.to_string();
    if (text < best) best = std::move(text);
  }
  return BinarySequence::from_string(best);
}

namespace {

constexpr std::size_t kSearchChunks = 256;

struct PartialMinimum {
  std::int64_t min = std::numeric_limits<std::int64_t>::max();
  std::uint64_t count = 0;
  std::set<std::string> canonical;

  void merge(PartialMinimum&& other) {
    if (other.min < min) {
      *this = std::move(other);
    } else if (other.min == min) {
      count += other.count;
      canonical.merge(other.canonical);
    }
  }
};

PartialMinimum search_range(const EnumerationRange& range) {
  PartialMinimum best;
  std::vector<BinarySequence> minimisers;
  for_each_member(range, [&](std::uint64_t, const BinarySequence& seq) {
    const std::int64_t value = norm4_fourth(seq);
    if (value < best.min) {
      best.min = value;
      best.count = 0;
      minimisers.clear();
    }
    if (value == best.min) {
      ++best.count;
      minimisers.push_back(seq);
    }
  });
  for (const auto& seq : minimisers) {
    best.canonical.insert(canonical_form(seq, range.spec).to_string());
  }
  return best;
}

}  // namespace

ExtremalResult min_search(const ClassSpec& spec, std::size_t threads) {
  if (spec.free_count() > kMaxSearchFreeCount) {
    throw std::invalid_argument("exhaustive search is capped at free count " +
                                std::to_string(kMaxSearchFreeCount) + ", class has " +
                                std::to_string(spec.free_count()));
  }
  const auto full = EnumerationRange::full(spec);
  const auto chunks =
      partition(full, static_cast<std::size_t>(std::min<std::uint64_t>(kSearchChunks, full.size())));
  std::vector<PartialMinimum> partial(chunks.size());
  parallel_tasks(chunks.size(), threads,
                 [&](std::size_t t) { partial[t] = search_range(chunks[t]); });

  PartialMinimum best;
  for (auto& p : partial) best.merge(std::move(p));

  const auto n = static_cast<std::int64_t>(spec.n());
  ExtremalResult result{spec, best.min};
  // min - n^2 = 2 sum C_u^2 >= 2 because C_1 = a_0 a_{n-1} = +-1.
  result.max_merit_factor = ExactRational(n * n, best.min - n * n);
  result.witness_count = best.count;
  for (const auto& text : best.canonical) result.witnesses.push_back(BinarySequence::from_string(text));
  return result;
}

nlohmann::ordered_json to_json(const ExtremalResult& result) {
  nlohmann::ordered_json j;
  j["class"] = class_name(result.spec.kind());
  j["n"] = result.spec.n();
  j["min"] = result.min_norm4_fourth;
  j["best_merit_factor"] = result.max_merit_factor.to_string();
  j["witness_count"] = result.witness_count;
  auto& w = j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& seq : result.witnesses) w.push_back(seq.to_string());
  j["version"] = kVersionString;
  return j;
}

}  // namespace littlewood
