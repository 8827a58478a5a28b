#include "dreamtext/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "dreamtext/error.hpp"
#include "dreamtext/unicode.hpp"

namespace dreamtext {

extern const char* const kPortugueseStopwords[];
extern const std::size_t kPortugueseStopwordCount;

namespace {

bool is_punctuation_cp(char32_t cp) {
  // string.punctuation's 32 ASCII characters.
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    static const std::string ascii_punct = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
    return ascii_punct.find(c) != std::string::npos;
  }
  switch (cp) {
    case 0x2018:  // ‘
    case 0x2019:  // ’
    case 0x201C:  // “
    case 0x201D:  // ”
    case 0x2026:  // …
    case 0x2013:  // –
    case 0x2014:  // —
    case 0xAB:    // «
    case 0xBB:    // »
      return true;
    default:
      return false;
  }
}

}  // namespace

StopwordList::StopwordList(std::set<std::string> entries, std::string source_label)
    : entries_(std::move(entries)), source_label_(std::move(source_label)) {
  if (entries_.empty())
    throw DataError("stopword list '" + source_label_ + "' is empty");
}

const StopwordList& StopwordList::embedded() {
  static const StopwordList list = [] {
    std::set<std::string> entries;
    for (std::size_t i = 0; i < kPortugueseStopwordCount; ++i)
      entries.insert(kPortugueseStopwords[i]);
    return StopwordList(std::move(entries), "embedded:portuguese");
  }();
  return list;
}

StopwordList StopwordList::from_text(std::string_view text, std::string source_label) {
  std::set<std::string> entries;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.empty() || line[0] == '#') continue;
    entries.insert(uni::normalize_lower(line));
  }
  return StopwordList(std::move(entries), std::move(source_label));
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open stopword file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str(), path.string());
}

bool StopwordList::contains(std::string_view normalized_word) const {
  return entries_.count(std::string(normalized_word)) > 0;
}

std::uint64_t FrequencyTable::count_of(std::string_view word) const {
  auto it = counts.find(std::string(word));
  return it == counts.end() ? 0 : it->second;
}

std::string normalize(std::string_view surface) {
  return uni::normalize_lower(surface);
}

bool is_punctuation_token(std::string_view surface) {
  std::u32string cps = uni::decode_utf8(surface);
  return cps.size() == 1 && is_punctuation_cp(cps[0]);
}

TokenClass classify(std::string_view surface, const StopwordList& stopwords) {
  if (is_punctuation_token(surface)) return TokenClass::Punctuation;
  std::u32string cps = uni::decode_utf8(surface);
  bool all_digits = !cps.empty();
  for (char32_t cp : cps)
    if (!uni::is_digit(cp)) all_digits = false;
  if (all_digits) return TokenClass::Number;
  if (stopwords.contains(normalize(surface))) return TokenClass::Stopword;
  return TokenClass::Meaningful;
}

std::vector<ClassifiedToken> classify_corpus(const Corpus& corpus,
                                             const StopwordList& stopwords) {
  std::vector<ClassifiedToken> out;
  for (std::size_t p = 0; p < corpus.paragraphs.size(); ++p) {
    const Paragraph& paragraph = corpus.paragraphs[p];
    for (std::size_t s = 0; s < paragraph.sentences.size(); ++s) {
      const Sentence& sentence = paragraph.sentences[s];
      for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
        ClassifiedToken token;
        token.surface = sentence.tokens[t];
        token.token_class = classify(token.surface, stopwords);
        token.normalized = token.token_class == TokenClass::Punctuation
                               ? token.surface
                               : normalize(token.surface);
        token.position = {p, s, t};
        out.push_back(std::move(token));
      }
    }
  }
  return out;
}

std::vector<ClassifiedToken> meaningful_words(const Corpus& corpus,
                                              const StopwordList& stopwords) {
  std::vector<ClassifiedToken> out;
  for (ClassifiedToken& token : classify_corpus(corpus, stopwords))
    if (token.token_class == TokenClass::Meaningful) out.push_back(std::move(token));
  return out;
}

FrequencyTable build_frequency_table(const std::vector<std::string>& normalized_words) {
  FrequencyTable table;
  for (const std::string& word : normalized_words) {
    ++table.counts[word];
    ++table.total;
  }
  return table;
}

}  // namespace dreamtext
