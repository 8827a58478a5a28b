#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dreamtext/config.hpp"
#include "dreamtext/error.hpp"
#include "dreamtext/render.hpp"

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

TEST_CASE("parse_config minimal document") {
  RunConfig config = parse_config(R"({
    "corpora": ["corpus.txt"],
    "specs": [{"label": "freq", "source": "meaningful"}]
  })");
  REQUIRE(config.corpus_paths.size() == 1);
  CHECK(config.corpus_paths[0] == "corpus.txt");
  REQUIRE(config.specs.size() == 1);
  CHECK(config.specs[0].label == "freq");
  CHECK(config.specs[0].source == DerivationSource::MeaningfulWords);
  // Ordering defaults: incidence, descending, deduplicated.
  CHECK(config.specs[0].ordering ==
        OrderingSpec{OrderKey::Incidence, Direction::Descending,
                     Repetition::Deduplicated});
  CHECK(!config.stopword_path);
  CHECK(!config.output_path);
}

TEST_CASE("parse_config full document") {
  RunConfig config = parse_config(R"({
    "corpora": ["a.txt", "b.txt"],
    "stopwords": "sw.txt",
    "output": "out.txt",
    "specs": [
      {"label": "uma-vogal", "source": "meaningful",
       "filters": [{"kind": "single_vowel"},
                   {"kind": "length", "min": 3, "max": 8},
                   {"kind": "frequency", "min": 2},
                   {"kind": "consonant_class", "classes": ["plosive"],
                    "vowels": ["a", "e"], "extra": ["m"]}],
       "ordering": {"key": "alphabetic", "direction": "ascending",
                    "repetition": "with_repetitions"}},
      {"label": "pares", "source": "boundaries"},
      {"label": "pares-frequentes", "source": "collocations",
       "min_count": 3, "measure": "pmi"}
    ]
  })");
  CHECK(config.stopword_path == "sw.txt");
  CHECK(config.output_path == "out.txt");
  REQUIRE(config.specs.size() == 3);
  CHECK(config.specs[0].filters.size() == 4);
  CHECK(config.specs[1].source == DerivationSource::SentenceBoundaries);
  CHECK(config.specs[2].min_count == 3);
  CHECK(config.specs[2].measure == CollocationMeasure::PMI);
}

TEST_CASE("parse_config rejections carry the field path") {
  CHECK_THROWS_WITH_AS(parse_config("{"), doctest::Contains("not valid JSON"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"specs": []})"),
                       doctest::Contains("$.corpora"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"corpora": []})"),
                       doctest::Contains("$.corpora"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"corpora": ["a"], "surprise": 1})"),
      doctest::Contains("surprise"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config(
          R"({"corpora": ["a"], "specs": [{"label": "x", "source": "meaningful",
              "filters": [{"kind": "length", "min": 3, "max": 1}]}]})"),
      doctest::Contains("$.specs[0].filters[0]"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_config(
          R"({"corpora": ["a"], "specs": [{"label": "a", "source": "meaningful"},
                                          {"label": "a", "source": "boundaries"}]})"),
      doctest::Contains("duplicate labels"), ConfigError);
  // min_count does not belong to a meaningful-words spec.
  CHECK_THROWS_AS(
      parse_config(
          R"({"corpora": ["a"], "specs": [{"label": "x", "source": "meaningful",
              "min_count": 2}]})"),
      ConfigError);
}

TEST_CASE("parse of serialize is the identity") {
  RunConfig config;
  config.corpus_paths = {"a.txt", "b.txt"};
  config.stopword_path = "sw.txt";
  config.specs = default_specs();

  RunConfig round = parse_config(serialize_config(config));
  CHECK(round.corpus_paths == config.corpus_paths);
  CHECK(round.stopword_path == config.stopword_path);
  CHECK(round.output_path == config.output_path);
  REQUIRE(round.specs.size() == config.specs.size());
  for (std::size_t i = 0; i < config.specs.size(); ++i) {
    CHECK(round.specs[i].label == config.specs[i].label);
    CHECK(round.specs[i].source == config.specs[i].source);
    CHECK(round.specs[i].ordering == config.specs[i].ordering);
    CHECK(round.specs[i].min_count == config.specs[i].min_count);
    CHECK(round.specs[i].measure == config.specs[i].measure);
    CHECK(round.specs[i].filters.size() == config.specs[i].filters.size());
  }
  // Serialization itself is stable.
  CHECK(serialize_config(round) == serialize_config(config));
}

TEST_CASE("default spec set covers the built-in criteria") {
  auto specs = default_specs();
  std::set<std::string> labels;
  for (const DerivationSpec& spec : specs) labels.insert(spec.label);
  CHECK(labels.size() == specs.size());
  for (const char* label :
       {"incidence", "incidence-with-repetitions", "alphabetic",
        "alphabetic-with-repetitions", "length", "length-with-repetitions",
        "single-vowel", "fricatives", "plosives", "plosives-m-ae",
        "sentence-boundaries", "collocations"})
    CHECK(labels.count(label));
}

TEST_CASE("render_document format") {
  CHECK(render_document({}) == "");
  CHECK(render_document({{"pares", {"Eu suada"}}}) == "== pares ==\n\nEu suada\n");
  CHECK(render_document({{"a", {"x", "y"}}, {"b", {"z"}}}) ==
        "== a ==\n\nx\ny\n\n== b ==\n\nz\n");
  CHECK_THROWS_AS(render_document({{"a", {"x"}}, {"a", {"y"}}}), DataError);
}

TEST_CASE("render_document recovers every line") {
  std::vector<DerivedText> texts = {{"um", {"a", "b"}}, {"dois", {"c"}}};
  std::string doc = render_document(texts);
  for (const DerivedText& text : texts) {
    CHECK(doc.find("== " + text.label + " ==\n") != std::string::npos);
    for (const std::string& line : text.lines)
      CHECK(doc.find(line + "\n") != std::string::npos);
  }
}

TEST_CASE("render_stats") {
  CHECK(render_stats({}) == "file\tcharacters\ttokens\tsentences\tparagraphs\n");

  Corpus corpus = load_corpus(read_file(fixture_path("fixture_small.txt")), "small");
  StatsReport report;
  report.rows.emplace_back("fixture_small.txt", corpus_stats(corpus));
  CHECK(render_stats(report) ==
        "file\tcharacters\ttokens\tsentences\tparagraphs\n"
        "fixture_small.txt\t66\t12\t3\t2\n");
}
