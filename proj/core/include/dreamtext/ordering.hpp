#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dreamtext/lexicon.hpp"

namespace dreamtext {

// Corpus keeps input order (the identity ordering); the other three are
// the sort keys proper.
enum class OrderKey { Corpus, Incidence, Alphabetic, Length };

enum class Direction { Ascending, Descending };

enum class Repetition { WithRepetitions, Deduplicated };

struct OrderingSpec {
  OrderKey key = OrderKey::Incidence;
  Direction direction = Direction::Descending;
  Repetition repetition = Repetition::Deduplicated;

  bool operator==(const OrderingSpec&) const = default;
};

// Two-level collation: accent-folded primary, raw normalized secondary.
// Total and deterministic over normalized words.
struct CollationKey {
  std::string primary;
  std::string secondary;

  static CollationKey make(std::string_view normalized_word);
  std::strong_ordering operator<=>(const CollationKey&) const = default;
};

// Keeps the first occurrence of each word, order preserved.
std::vector<std::string> dedup_preserving(const std::vector<std::string>& words);

// Stable sort by key, ties broken by collation then original position.
// Deduplication (when requested) happens before sorting, on input order.
// Throws DataError when key == Incidence and a word is absent from the
// table.
std::vector<std::string> order_words(const std::vector<std::string>& words,
                                     const FrequencyTable& table,
                                     const OrderingSpec& spec);

}  // namespace dreamtext
