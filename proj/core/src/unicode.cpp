#include "dreamtext/unicode.hpp"

#include "dreamtext/error.hpp"

namespace dreamtext::uni {

namespace {

constexpr bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw DecodeError("invalid UTF-8 lead byte", i);
    }
    if (i + len > bytes.size()) throw DecodeError("truncated UTF-8 sequence", i);
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if (!is_continuation(bk)) throw DecodeError("invalid UTF-8 continuation byte", i + k);
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000))
      throw DecodeError("overlong UTF-8 sequence", i);
    if (cp >= 0xD800 && cp <= 0xDFFF) throw DecodeError("UTF-8 encoded surrogate", i);
    if (cp > 0x10FFFF) throw DecodeError("code point out of range", i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

std::size_t codepoint_count(std::string_view utf8) {
  std::size_t n = 0;
  for (char c : utf8)
    if (!is_continuation(static_cast<unsigned char>(c))) ++n;
  return n;
}

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  // Latin-1 Supplement letters, minus multiplication/division signs.
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  // Latin Extended-A (Œ, š, ...), rare in the corpora but still letters.
  if (cp >= 0x100 && cp <= 0x17F) return true;
  return false;
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0xA0:  // no-break space
      return true;
    default:
      return false;
  }
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

char32_t fold_accent(char32_t cp) {
  cp = to_lower(cp);
  switch (cp) {
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
      return U'a';
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
      return U'e';
    case 0xEC: case 0xED: case 0xEE: case 0xEF:
      return U'i';
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6:
      return U'o';
    case 0xF9: case 0xFA: case 0xFB: case 0xFC:
      return U'u';
    case 0xE7:
      return U'c';
    case 0xF1:
      return U'n';
    case 0xFD: case 0xFF:
      return U'y';
    default:
      return cp;
  }
}

std::string normalize_lower(std::string_view utf8) {
  std::u32string cps = decode_utf8(utf8);
  std::string out;
  out.reserve(utf8.size());
  for (char32_t cp : cps) append_utf8(out, to_lower(cp));
  return out;
}

std::string fold_key(std::string_view utf8) {
  std::u32string cps = decode_utf8(utf8);
  std::string out;
  out.reserve(utf8.size());
  for (char32_t cp : cps) append_utf8(out, fold_accent(cp));
  return out;
}

}  // namespace dreamtext::uni
