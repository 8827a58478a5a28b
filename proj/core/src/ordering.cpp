#include "dreamtext/ordering.hpp"

#include <algorithm>
#include <set>

#include "dreamtext/error.hpp"
#include "dreamtext/unicode.hpp"

namespace dreamtext {

CollationKey CollationKey::make(std::string_view normalized_word) {
  return {uni::fold_key(normalized_word), std::string(normalized_word)};
}

std::vector<std::string> dedup_preserving(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const std::string& word : words)
    if (seen.insert(word).second) out.push_back(word);
  return out;
}

std::vector<std::string> order_words(const std::vector<std::string>& words,
                                     const FrequencyTable& table,
                                     const OrderingSpec& spec) {
  std::vector<std::string> selected = spec.repetition == Repetition::Deduplicated
                                          ? dedup_preserving(words)
                                          : words;
  if (spec.key == OrderKey::Corpus) return selected;

  if (spec.key == OrderKey::Incidence)
    for (const std::string& word : selected)
      if (table.count_of(word) == 0)
        throw DataError("word absent from frequency table: '" + word + "'");

  struct Entry {
    std::uint64_t numeric;  // incidence count or code-point length
    CollationKey collation;
    std::size_t position;
    const std::string* word;
  };
  std::vector<Entry> entries;
  entries.reserve(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const std::string& word = selected[i];
    std::uint64_t numeric = 0;
    if (spec.key == OrderKey::Incidence)
      numeric = table.count_of(word);
    else if (spec.key == OrderKey::Length)
      numeric = uni::codepoint_count(word);
    entries.push_back({numeric, CollationKey::make(word), i, &word});
  }

  const bool descending = spec.direction == Direction::Descending;
  const bool alphabetic = spec.key == OrderKey::Alphabetic;
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (alphabetic) {
      if (a.collation != b.collation)
        return descending ? b.collation < a.collation : a.collation < b.collation;
    } else {
      if (a.numeric != b.numeric)
        return descending ? b.numeric < a.numeric : a.numeric < b.numeric;
      if (a.collation != b.collation) return a.collation < b.collation;
    }
    return a.position < b.position;
  });

  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const Entry& entry : entries) out.push_back(*entry.word);
  return out;
}

}  // namespace dreamtext
