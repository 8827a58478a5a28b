#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dreamtext {

// A sentence keeps its tokens in surface order. The terminator is the
// character that ended it ('.', '!', '?', '…'); a trailing fragment
// without one has no terminator. The terminator is not a token.
struct Sentence {
  std::vector<std::string> tokens;
  std::optional<char32_t> terminator;
};

struct Paragraph {
  std::vector<Sentence> sentences;
};

// Immutable after load_corpus; safe to share across threads.
struct Corpus {
  std::string source_name;
  std::string raw_text;  // decoded text, line endings normalized to '\n'
  std::vector<Paragraph> paragraphs;
};

struct CorpusStats {
  std::size_t characters = 0;  // Unicode code points, whitespace included
  std::size_t tokens = 0;
  std::size_t sentences = 0;
  std::size_t paragraphs = 0;

  bool operator==(const CorpusStats&) const = default;
};

// Paragraphs are maximal runs of non-blank lines; a line is blank when
// empty or whitespace-only.
std::vector<std::string> split_paragraphs(std::string_view text);

// Splits after '.', '!', '?', '…' followed by whitespace or end of text.
// A run of terminators ("?!", "...") is one boundary; its terminator is
// the first character of the run. Empty fragments are dropped; a final
// fragment without a terminator is kept with terminator = nullopt.
std::vector<std::pair<std::string, std::optional<char32_t>>> split_sentences(
    std::string_view paragraph);

// Word tokens are maximal letter runs, optionally with internal '-' or
// apostrophes between letters; digit runs are single tokens; every other
// non-whitespace character stands alone.
std::vector<std::string> tokenize(std::string_view sentence);

// Full segmentation. Throws DecodeError on invalid UTF-8. Empty input
// yields a corpus with zero paragraphs.
Corpus load_corpus(std::string text, std::string name);
Corpus load_corpus_file(const std::filesystem::path& path);

CorpusStats corpus_stats(const Corpus& corpus);

// Concatenates the paragraphs of several corpora, in order.
Corpus merge_corpora(std::vector<Corpus> parts, std::string name);

}  // namespace dreamtext
