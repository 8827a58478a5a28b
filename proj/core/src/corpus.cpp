#include "dreamtext/corpus.hpp"

#include <fstream>
#include <sstream>

#include "dreamtext/error.hpp"
#include "dreamtext/unicode.hpp"

namespace dreamtext {

namespace {

bool is_blank_line(std::u32string_view line) {
  for (char32_t cp : line)
    if (!uni::is_space(cp)) return false;
  return true;
}

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;  // …
}

bool is_word_joiner(char32_t cp) {
  // Hyphen plus straight and curly apostrophes; the corpus uses both.
  return cp == U'-' || cp == U'\'' || cp == 0x2019 || cp == 0x2018;
}

std::u32string trim(std::u32string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && uni::is_space(s[b])) ++b;
  while (e > b && uni::is_space(s[e - 1])) --e;
  return std::u32string(s.substr(b, e - b));
}

std::string normalize_newlines(std::string text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> split_paragraphs(std::string_view text) {
  std::u32string cps = uni::decode_utf8(text);
  std::vector<std::string> out;
  std::u32string current;
  bool has_content = false;

  auto flush = [&] {
    if (has_content) out.push_back(uni::encode_utf8(trim(current)));
    current.clear();
    has_content = false;
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    if (i == cps.size() || cps[i] == U'\n') {
      std::u32string_view line(cps.data() + start, i - start);
      if (is_blank_line(line)) {
        flush();
      } else {
        if (has_content) current.push_back(U'\n');
        current.append(line);
        has_content = true;
      }
      start = i + 1;
    }
  }
  flush();
  return out;
}

std::vector<std::pair<std::string, std::optional<char32_t>>> split_sentences(
    std::string_view paragraph) {
  std::u32string cps = uni::decode_utf8(paragraph);
  std::vector<std::pair<std::string, std::optional<char32_t>>> out;

  auto emit = [&](std::u32string_view fragment, std::optional<char32_t> term) {
    std::u32string trimmed = trim(fragment);
    if (!trimmed.empty()) out.emplace_back(uni::encode_utf8(trimmed), term);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (is_terminator(cps[i])) {
      std::size_t run_end = i;
      while (run_end < cps.size() && is_terminator(cps[run_end])) ++run_end;
      if (run_end == cps.size() || uni::is_space(cps[run_end])) {
        emit(std::u32string_view(cps.data() + start, i - start), cps[i]);
        start = run_end;
        i = run_end;
        continue;
      }
      i = run_end;  // "etc.x" — not a boundary
      continue;
    }
    ++i;
  }
  emit(std::u32string_view(cps.data() + start, cps.size() - start), std::nullopt);
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::u32string cps = uni::decode_utf8(sentence);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    if (uni::is_space(cp)) {
      ++i;
    } else if (uni::is_letter(cp)) {
      std::u32string word;
      word.push_back(cp);
      ++i;
      while (i < cps.size()) {
        if (uni::is_letter(cps[i])) {
          word.push_back(cps[i]);
          ++i;
        } else if (is_word_joiner(cps[i]) && i + 1 < cps.size() &&
                   uni::is_letter(cps[i + 1])) {
          word.push_back(cps[i]);
          word.push_back(cps[i + 1]);
          i += 2;
        } else {
          break;
        }
      }
      tokens.push_back(uni::encode_utf8(word));
    } else if (uni::is_digit(cp)) {
      std::u32string digits;
      while (i < cps.size() && uni::is_digit(cps[i])) digits.push_back(cps[i++]);
      tokens.push_back(uni::encode_utf8(digits));
    } else {
      tokens.push_back(uni::encode_utf8(std::u32string_view(&cp, 1)));
      ++i;
    }
  }
  return tokens;
}

Corpus load_corpus(std::string text, std::string name) {
  Corpus corpus;
  corpus.source_name = std::move(name);
  corpus.raw_text = normalize_newlines(std::move(text));

  for (const std::string& para_text : split_paragraphs(corpus.raw_text)) {
    Paragraph paragraph;
    for (const auto& [sentence_text, terminator] : split_sentences(para_text)) {
      Sentence sentence;
      sentence.tokens = tokenize(sentence_text);
      sentence.terminator = terminator;
      if (!sentence.tokens.empty()) paragraph.sentences.push_back(std::move(sentence));
    }
    if (!paragraph.sentences.empty()) corpus.paragraphs.push_back(std::move(paragraph));
  }
  return corpus;
}

Corpus load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_corpus(buffer.str(), path.filename().string());
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.characters = uni::codepoint_count(corpus.raw_text);
  stats.paragraphs = corpus.paragraphs.size();
  for (const Paragraph& p : corpus.paragraphs) {
    stats.sentences += p.sentences.size();
    for (const Sentence& s : p.sentences) stats.tokens += s.tokens.size();
  }
  return stats;
}

Corpus merge_corpora(std::vector<Corpus> parts, std::string name) {
  Corpus merged;
  merged.source_name = std::move(name);
  for (Corpus& part : parts) {
    if (!merged.raw_text.empty()) merged.raw_text += "\n\n";
    merged.raw_text += part.raw_text;
    for (Paragraph& p : part.paragraphs) merged.paragraphs.push_back(std::move(p));
  }
  return merged;
}

}  // namespace dreamtext
