#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dreamtext/corpus.hpp"
#include "dreamtext/error.hpp"
#include "dreamtext/unicode.hpp"

using namespace dreamtext;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(DREAMTEXT_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("split_paragraphs on blank lines") {
  CHECK(split_paragraphs("a\n\nb") == std::vector<std::string>{"a", "b"});
  CHECK(split_paragraphs("a\nb") == std::vector<std::string>{"a\nb"});
  CHECK(split_paragraphs("a\n \n\nb") == std::vector<std::string>{"a", "b"});
  CHECK(split_paragraphs("").empty());
  CHECK(split_paragraphs("\n  \n\t\n").empty());
}

TEST_CASE("split_sentences on terminators") {
  auto parts = split_sentences("Sonhei. Acordei.");
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == "Sonhei");
  CHECK(parts[0].second == U'.');
  CHECK(parts[1].first == "Acordei");
  CHECK(parts[1].second == U'.');

  parts = split_sentences("Não acabou");
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == "Não acabou");
  CHECK(!parts[0].second.has_value());

  // A run of terminators is one boundary; its terminator is the first char.
  parts = split_sentences("Fugi... Corri!");
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == "Fugi");
  CHECK(parts[0].second == U'.');
  CHECK(parts[1].first == "Corri");
  CHECK(parts[1].second == U'!');

  parts = split_sentences("Como?! Assim");
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == U'?');

  // Terminator not followed by whitespace is not a boundary.
  parts = split_sentences("fulano.com caiu");
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == "fulano.com caiu");
}

TEST_CASE("split_sentences handles the ellipsis character") {
  auto parts = split_sentences("Fugi… Corri");
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == char32_t(0x2026));
}

TEST_CASE("tokenize words, punctuation and digits") {
  CHECK(tokenize("Eu suada") == std::vector<std::string>{"Eu", "suada"});
  CHECK(tokenize("pessoas )") == std::vector<std::string>{"pessoas", ")"});
  CHECK(tokenize("guarda-chuva caiu") == std::vector<std::string>{"guarda-chuva", "caiu"});
  CHECK(tokenize("d'água") == std::vector<std::string>{"d'água"});
  CHECK(tokenize("d’água") == std::vector<std::string>{"d’água"});
  CHECK(tokenize("em 1984, sim") ==
        std::vector<std::string>{"em", "1984", ",", "sim"});
  CHECK(tokenize("disse “tudo”") ==
        std::vector<std::string>{"disse", "“", "tudo", "”"});
  // A trailing hyphen is not a joiner.
  CHECK(tokenize("meio-") == std::vector<std::string>{"meio", "-"});
  CHECK(tokenize("").empty());
}

TEST_CASE("load_corpus segmentation") {
  Corpus empty = load_corpus("", "empty");
  CHECK(empty.paragraphs.empty());

  Corpus one_line = load_corpus("Sonhei. Acordei.", "t");
  REQUIRE(one_line.paragraphs.size() == 1);
  CHECK(one_line.paragraphs[0].sentences.size() == 2);

  Corpus two_blocks = load_corpus("Primeiro sonho.\n\nSegundo sonho.", "t");
  CHECK(two_blocks.paragraphs.size() == 2);

  // Windows line endings are normalized before segmentation.
  Corpus crlf = load_corpus("Primeiro sonho.\r\n\r\nSegundo sonho.\r\n", "t");
  CHECK(crlf.paragraphs.size() == 2);
  CHECK(crlf.raw_text.find('\r') == std::string::npos);
}

TEST_CASE("load_corpus rejects invalid UTF-8 with a byte offset") {
  try {
    load_corpus(std::string("abc\xFFzz", 6), "bad");
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.byte_offset() == 3);
  }
}

TEST_CASE("corpus_stats on the hand-counted fixture") {
  CHECK(corpus_stats(load_corpus("", "e")) == CorpusStats{0, 0, 0, 0});

  // fixture_small.txt, counted by hand: 66 code points (newlines included),
  // 12 tokens, 3 sentences, 2 paragraphs.
  Corpus corpus = load_corpus(read_file(fixture_path("fixture_small.txt")), "small");
  CHECK(corpus_stats(corpus) == CorpusStats{66, 12, 3, 2});
}

TEST_CASE("stats additivity") {
  Corpus corpus = load_corpus(read_file(fixture_path("fixture_dreams.txt")), "dreams");
  CorpusStats stats = corpus_stats(corpus);
  std::size_t sentences = 0, tokens = 0;
  for (const Paragraph& p : corpus.paragraphs) {
    sentences += p.sentences.size();
    for (const Sentence& s : p.sentences) tokens += s.tokens.size();
  }
  CHECK(stats.sentences == sentences);
  CHECK(stats.tokens == tokens);
  CHECK(stats.paragraphs == corpus.paragraphs.size());
}

namespace {

std::string random_text(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "sonhei", "casa",  "não", "água", "d'água", "guarda-chuva", "123",
      ")",      "“",     ",",   "mar",  "É",      "coração"};
  std::uniform_int_distribution<int> n_paras(0, 4);
  std::uniform_int_distribution<int> n_sents(1, 4);
  std::uniform_int_distribution<int> n_words(1, 6);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> term(0, 3);
  static const char* terms[] = {". ", "! ", "? ", "... "};

  std::string text;
  int paras = n_paras(rng);
  for (int p = 0; p < paras; ++p) {
    int sents = n_sents(rng);
    for (int s = 0; s < sents; ++s) {
      int words = n_words(rng);
      for (int w = 0; w < words; ++w) {
        if (w) text += ' ';
        text += pieces[pick(rng)];
      }
      text += terms[term(rng)];
    }
    text += "\n\n";
  }
  return text;
}

std::string strip_whitespace(std::string_view utf8) {
  std::string out;
  for (char32_t cp : uni::decode_utf8(utf8))
    if (!uni::is_space(cp)) uni::append_utf8(out, cp);
  return out;
}

}  // namespace

TEST_CASE("tokenization is lossless for non-whitespace") {
  std::mt19937 rng(20170331);
  for (int round = 0; round < 50; ++round) {
    for (const std::string& paragraph : split_paragraphs(random_text(rng))) {
      for (const auto& [sentence, terminator] : split_sentences(paragraph)) {
        std::string rebuilt;
        for (const std::string& token : tokenize(sentence)) rebuilt += token;
        CHECK(strip_whitespace(sentence) == rebuilt);
      }
    }
  }
}

TEST_CASE("re-segmentation is idempotent") {
  std::mt19937 rng(42);
  for (int round = 0; round < 30; ++round) {
    Corpus first = load_corpus(random_text(rng), "r");
    // Rebuild a text from the segmented structure and segment it again.
    std::string rebuilt;
    for (const Paragraph& p : first.paragraphs) {
      for (const Sentence& s : p.sentences) {
        for (std::size_t t = 0; t < s.tokens.size(); ++t) {
          if (t) rebuilt += ' ';
          rebuilt += s.tokens[t];
        }
        if (s.terminator) uni::append_utf8(rebuilt, *s.terminator);
        rebuilt += ' ';
      }
      rebuilt += "\n\n";
    }
    Corpus second = load_corpus(rebuilt, "r2");
    REQUIRE(second.paragraphs.size() == first.paragraphs.size());
    for (std::size_t p = 0; p < first.paragraphs.size(); ++p) {
      REQUIRE(second.paragraphs[p].sentences.size() ==
              first.paragraphs[p].sentences.size());
      for (std::size_t s = 0; s < first.paragraphs[p].sentences.size(); ++s)
        CHECK(second.paragraphs[p].sentences[s].tokens ==
              first.paragraphs[p].sentences[s].tokens);
    }
  }
}

TEST_CASE("identical bytes give identical corpora") {
  std::string text = read_file(fixture_path("fixture_dreams.txt"));
  Corpus a = load_corpus(text, "a");
  Corpus b = load_corpus(text, "a");
  CHECK(a.raw_text == b.raw_text);
  CHECK(corpus_stats(a) == corpus_stats(b));
}
