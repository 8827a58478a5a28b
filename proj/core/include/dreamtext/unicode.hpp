#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 and Latin-script helpers. The corpora are Brazilian
// Portuguese, so coverage is ASCII plus Latin-1 Supplement plus the
// typographic punctuation that actually occurs in the texts (curly
// quotes, ellipsis, dashes). No locale tables, no ICU.
namespace dreamtext::uni {

// Decodes UTF-8; throws DecodeError with the byte offset of the first
// invalid sequence.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

std::size_t codepoint_count(std::string_view utf8);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);

char32_t to_lower(char32_t cp);

// Lowercases and strips diacritics: 'Ã' -> 'a', 'ç' -> 'c'.
// Non-accented code points pass through lowercased.
char32_t fold_accent(char32_t cp);

// Lowercase, accents preserved ("NÃO" -> "não").
std::string normalize_lower(std::string_view utf8);

// Lowercase with accents folded; primary collation key.
std::string fold_key(std::string_view utf8);

}  // namespace dreamtext::uni
