#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dreamtext/corpus.hpp"

namespace dreamtext {

enum class TokenClass { Punctuation, Stopword, Meaningful, Number };

struct TokenPosition {
  std::size_t paragraph = 0;
  std::size_t sentence = 0;
  std::size_t token = 0;

  bool operator==(const TokenPosition&) const = default;
};

struct ClassifiedToken {
  std::string surface;
  std::string normalized;
  TokenClass token_class = TokenClass::Meaningful;
  TokenPosition position;
};

class StopwordList {
 public:
  // The Portuguese list shipped with the library (~200 function words).
  static const StopwordList& embedded();

  // One word per line, '#' starts a comment line, surrounding whitespace
  // stripped. Throws DataError when the result is empty.
  static StopwordList from_file(const std::filesystem::path& path);
  static StopwordList from_text(std::string_view text, std::string source_label);

  bool contains(std::string_view normalized_word) const;
  const std::set<std::string>& entries() const { return entries_; }
  const std::string& source_label() const { return source_label_; }

 private:
  StopwordList(std::set<std::string> entries, std::string source_label);

  std::set<std::string> entries_;
  std::string source_label_;
};

struct FrequencyTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t count_of(std::string_view word) const;
};

// Unicode lowercase, accents preserved ("NÃO" -> "não").
std::string normalize(std::string_view surface);

// True for single-character tokens drawn from the punctuation set
// (ASCII punctuation plus curly quotes, ellipsis, en/em dashes).
bool is_punctuation_token(std::string_view surface);

// Total and mutually exclusive over all tokens.
TokenClass classify(std::string_view surface, const StopwordList& stopwords);

std::vector<ClassifiedToken> classify_corpus(const Corpus& corpus,
                                             const StopwordList& stopwords);

// The corpus tokens that are neither punctuation, stopwords, nor numbers,
// in corpus order.
std::vector<ClassifiedToken> meaningful_words(const Corpus& corpus,
                                              const StopwordList& stopwords);

FrequencyTable build_frequency_table(const std::vector<std::string>& normalized_words);

}  // namespace dreamtext
