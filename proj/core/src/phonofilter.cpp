#include "dreamtext/phonofilter.hpp"

#include <set>

#include "dreamtext/error.hpp"
#include "dreamtext/unicode.hpp"

namespace dreamtext {

namespace {

bool is_vowel_base(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_joiner(char32_t cp) {
  return cp == U'-' || cp == U'\'' || cp == 0x2019 || cp == 0x2018;
}

Sound single_consonant(char c, char next_base) {
  switch (c) {
    case 'c':
      return (next_base == 'e' || next_base == 'i') ? Sound::Fricative : Sound::Plosive;
    case 'g':
      return (next_base == 'e' || next_base == 'i') ? Sound::Fricative : Sound::Plosive;
    case 's': case 'z': case 'j': case 'x': case 'f': case 'v':
      return Sound::Fricative;
    case 'p': case 'b': case 't': case 'd': case 'k': case 'q':
      return Sound::Plosive;
    case 'm': case 'n':
      return Sound::Nasal;
    case 'l':
      return Sound::Lateral;
    case 'r':
      return Sound::Rhotic;
    case 'h':
      return Sound::Silent;
    default:  // w, y
      return Sound::Other;
  }
}

}  // namespace

std::vector<GraphemeUnit> grapheme_units(std::string_view normalized_word) {
  std::u32string cps = uni::decode_utf8(normalized_word);

  // Accent-folded view; 0 marks joiners, which stay Silent.
  std::vector<char> folded(cps.size(), 0);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_joiner(cps[i])) continue;
    char32_t f = uni::fold_accent(cps[i]);
    if (f < U'a' || f > U'z')
      throw DataError("unexpected character '" +
                      uni::encode_utf8(std::u32string(1, cps[i])) + "' in word '" +
                      std::string(normalized_word) + "'");
    folded[i] = static_cast<char>(f);
  }

  std::vector<GraphemeUnit> units;
  std::size_t i = 0;
  while (i < cps.size()) {
    char c = folded[i];
    if (c == 0) {  // '-' or apostrophe
      units.push_back({std::string(1, cps[i] == U'-' ? '-' : '\''), Sound::Silent, 0});
      ++i;
      continue;
    }
    if (cps[i] == 0xE7) {  // ç is always fricative, never context-ruled
      units.push_back({"ç", Sound::Fricative, 0});
      ++i;
      continue;
    }
    char next = i + 1 < cps.size() ? folded[i + 1] : 0;
    char after = i + 2 < cps.size() ? folded[i + 2] : 0;

    // Digraphs first.
    if (next != 0) {
      if (c == 'c' && next == 'h') { units.push_back({"ch", Sound::Fricative, 0}); i += 2; continue; }
      if (c == 'l' && next == 'h') { units.push_back({"lh", Sound::Lateral, 0}); i += 2; continue; }
      if (c == 'n' && next == 'h') { units.push_back({"nh", Sound::Nasal, 0}); i += 2; continue; }
      if (c == 'r' && next == 'r') { units.push_back({"rr", Sound::Rhotic, 0}); i += 2; continue; }
      if (c == 's' && next == 's') { units.push_back({"ss", Sound::Fricative, 0}); i += 2; continue; }
      if (c == 'q' && next == 'u') { units.push_back({"qu", Sound::Plosive, 0}); i += 2; continue; }
      if (c == 'g' && next == 'u' && (after == 'e' || after == 'i')) {
        units.push_back({"gu", Sound::Plosive, 0});
        i += 2;
        continue;
      }
    }

    if (is_vowel_base(c)) {
      units.push_back({std::string(1, c), Sound::Vowel, c});
    } else {
      units.push_back({std::string(1, c), single_consonant(c, next), 0});
    }
    ++i;
  }
  return units;
}

std::vector<Sound> grapheme_classes(std::string_view normalized_word) {
  std::vector<Sound> out;
  for (const GraphemeUnit& unit : grapheme_units(normalized_word))
    out.push_back(unit.sound);
  return out;
}

void validate_filter(const FilterSpec& spec) {
  if (const auto* length = std::get_if<LengthFilter>(&spec)) {
    if (length->min > length->max)
      throw DataError("length filter has min > max");
  } else if (const auto* freq = std::get_if<FrequencyFilter>(&spec)) {
    if (freq->min > freq->max)
      throw DataError("frequency filter has min > max");
  } else if (const auto* cc = std::get_if<ConsonantClassFilter>(&spec)) {
    if (cc->allowed_classes.empty() && cc->extra_letters.empty() &&
        (!cc->allowed_vowels || cc->allowed_vowels->empty()))
      throw DataError("consonant-class filter allows nothing");
  }
}

bool passes_single_vowel(std::string_view normalized_word) {
  std::set<char> bases;
  for (char32_t cp : uni::decode_utf8(normalized_word)) {
    char32_t f = uni::fold_accent(cp);
    if (f <= 0x7F && is_vowel_base(static_cast<char>(f)))
      bases.insert(static_cast<char>(f));
  }
  return bases.size() == 1;
}

bool passes_consonant_class(std::string_view normalized_word,
                            const ConsonantClassFilter& spec) {
  for (const GraphemeUnit& unit : grapheme_units(normalized_word)) {
    if (unit.sound == Sound::Silent) continue;
    if (spec.extra_letters.count(unit.text)) continue;
    if (unit.sound == Sound::Vowel) {
      if (!spec.allowed_vowels || spec.allowed_vowels->count(unit.vowel_base)) continue;
      return false;
    }
    if (!spec.allowed_classes.count(unit.sound)) return false;
  }
  return true;
}

bool passes_length(std::string_view normalized_word, const LengthFilter& spec) {
  std::size_t length = 0;
  for (char32_t cp : uni::decode_utf8(normalized_word))
    if (!is_joiner(cp)) ++length;
  return length >= spec.min && length <= spec.max;
}

bool passes_frequency(std::string_view normalized_word, const FrequencyTable& table,
                      const FrequencyFilter& spec) {
  std::uint64_t count = table.count_of(normalized_word);
  return count >= spec.min && count <= spec.max;
}

bool passes_filter(std::string_view normalized_word, const FrequencyTable& table,
                   const FilterSpec& spec) {
  validate_filter(spec);
  return std::visit(
      [&](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SingleVowelFilter>)
          return passes_single_vowel(normalized_word);
        else if constexpr (std::is_same_v<T, ConsonantClassFilter>)
          return passes_consonant_class(normalized_word, f);
        else if constexpr (std::is_same_v<T, LengthFilter>)
          return passes_length(normalized_word, f);
        else
          return passes_frequency(normalized_word, table, f);
      },
      spec);
}

}  // namespace dreamtext
