#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dreamtext/lexicon.hpp"

namespace dreamtext {

// Grapheme-level sound classes for Portuguese orthography. This is a
// declared approximation: no syllabification, no voicing distinctions,
// 'x' always fricative.
enum class Sound { Vowel, Plosive, Fricative, Nasal, Lateral, Rhotic, Silent, Other };

// One letter or digraph consumed as a unit by the classifier.
struct GraphemeUnit {
  std::string text;        // accent-folded unit text, e.g. "ch", "a"
  Sound sound = Sound::Other;
  char vowel_base = 0;     // 'a'..'u' when sound == Vowel
};

// Scans left to right, digraphs first (ch, lh, nh, rr, ss, qu, gu+e/i),
// then context rules for c/g. Throws DataError on a character outside
// letters, '-' and apostrophes.
std::vector<GraphemeUnit> grapheme_units(std::string_view normalized_word);
std::vector<Sound> grapheme_classes(std::string_view normalized_word);

struct SingleVowelFilter {};

struct ConsonantClassFilter {
  std::set<Sound> allowed_classes;
  std::optional<std::set<char>> allowed_vowels;  // vowel bases; absent = all
  std::set<std::string> extra_letters;           // literal units, e.g. "m"
};

struct LengthFilter {
  std::size_t min = 0;
  std::size_t max = SIZE_MAX;
};

struct FrequencyFilter {
  std::uint64_t min = 0;
  std::uint64_t max = UINT64_MAX;
};

using FilterSpec =
    std::variant<SingleVowelFilter, ConsonantClassFilter, LengthFilter, FrequencyFilter>;

// Throws DataError on min > max or an empty consonant-class spec.
void validate_filter(const FilterSpec& spec);

// True iff the word has exactly one distinct vowel base (accent-folded),
// repeated any number of times.
bool passes_single_vowel(std::string_view normalized_word);

// True iff every non-silent unit is an allowed vowel, a consonant of an
// allowed class, or a literal unit in extra_letters.
bool passes_consonant_class(std::string_view normalized_word,
                            const ConsonantClassFilter& spec);

// Length in code points, '-' and apostrophes excluded.
bool passes_length(std::string_view normalized_word, const LengthFilter& spec);

bool passes_frequency(std::string_view normalized_word, const FrequencyTable& table,
                      const FrequencyFilter& spec);

bool passes_filter(std::string_view normalized_word, const FrequencyTable& table,
                   const FilterSpec& spec);

}  // namespace dreamtext
