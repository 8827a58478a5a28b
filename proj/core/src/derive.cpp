#include "dreamtext/derive.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dreamtext/error.hpp"

namespace dreamtext {

namespace {

// Per-sentence sequences of meaningful normalized words.
std::vector<std::vector<std::string>> meaningful_by_sentence(
    const Corpus& corpus, const StopwordList& stopwords) {
  std::vector<std::vector<std::string>> out;
  for (const Paragraph& paragraph : corpus.paragraphs) {
    for (const Sentence& sentence : paragraph.sentences) {
      std::vector<std::string> words;
      for (const std::string& token : sentence.tokens)
        if (classify(token, stopwords) == TokenClass::Meaningful)
          words.push_back(normalize(token));
      out.push_back(std::move(words));
    }
  }
  return out;
}

}  // namespace

DerivedText sentence_boundary_pairs(const Corpus& corpus, std::string label) {
  DerivedText text{std::move(label), {}};
  for (const Paragraph& paragraph : corpus.paragraphs) {
    for (const Sentence& sentence : paragraph.sentences) {
      if (sentence.tokens.empty()) continue;
      if (sentence.tokens.size() == 1)
        text.lines.push_back(sentence.tokens.front());
      else
        text.lines.push_back(sentence.tokens.front() + " " + sentence.tokens.back());
    }
  }
  return text;
}

std::vector<Collocation> collocations(const Corpus& corpus, const StopwordList& stopwords,
                                      std::uint64_t min_count,
                                      CollocationMeasure measure) {
  if (min_count < 1) throw DataError("collocation min_count must be >= 1");

  std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts;
  std::map<std::string, std::uint64_t> word_counts;
  std::uint64_t bigram_total = 0;
  for (const std::vector<std::string>& words : meaningful_by_sentence(corpus, stopwords)) {
    for (const std::string& word : words) ++word_counts[word];
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      ++pair_counts[{words[i], words[i + 1]}];
      ++bigram_total;
    }
  }

  std::vector<Collocation> out;
  for (const auto& [pair, count] : pair_counts) {
    if (count < min_count) continue;
    Collocation c{pair.first, pair.second, count, static_cast<double>(count)};
    if (measure == CollocationMeasure::PMI) {
      c.score = std::log2(static_cast<double>(count) * static_cast<double>(bigram_total) /
                          (static_cast<double>(word_counts[pair.first]) *
                           static_cast<double>(word_counts[pair.second])));
    }
    out.push_back(std::move(c));
  }

  std::sort(out.begin(), out.end(), [](const Collocation& a, const Collocation& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.count != b.count) return a.count > b.count;
    auto ka = std::make_pair(CollationKey::make(a.first), CollationKey::make(a.second));
    auto kb = std::make_pair(CollationKey::make(b.first), CollationKey::make(b.second));
    return ka < kb;
  });
  return out;
}

DerivedText run_derivation(const Corpus& corpus, const StopwordList& stopwords,
                           const FrequencyTable& table, const DerivationSpec& spec) {
  try {
    switch (spec.source) {
      case DerivationSource::SentenceBoundaries:
        return sentence_boundary_pairs(corpus, spec.label);
      case DerivationSource::Collocations: {
        DerivedText text{spec.label, {}};
        for (const Collocation& c :
             collocations(corpus, stopwords, spec.min_count, spec.measure))
          text.lines.push_back(c.first + " " + c.second);
        return text;
      }
      case DerivationSource::MeaningfulWords:
        break;
    }

    for (const FilterSpec& filter : spec.filters) validate_filter(filter);

    std::vector<std::string> words;
    for (const ClassifiedToken& token : meaningful_words(corpus, stopwords)) {
      bool keep = true;
      for (const FilterSpec& filter : spec.filters)
        if (!passes_filter(token.normalized, table, filter)) {
          keep = false;
          break;
        }
      if (keep) words.push_back(token.normalized);
    }

    DerivedText text{spec.label, order_words(words, table, spec.ordering)};
    return text;
  } catch (const DataError& e) {
    throw DataError("derivation '" + spec.label + "': " + e.what());
  }
}

std::vector<DerivedText> run_all(const Corpus& corpus, const StopwordList& stopwords,
                                 const std::vector<DerivationSpec>& specs) {
  std::set<std::string> labels;
  for (const DerivationSpec& spec : specs)
    if (!labels.insert(spec.label).second)
      throw DataError("duplicate derivation label: '" + spec.label + "'");

  std::vector<std::string> all_words;
  for (const ClassifiedToken& token : meaningful_words(corpus, stopwords))
    all_words.push_back(token.normalized);
  FrequencyTable table = build_frequency_table(all_words);

  std::vector<DerivedText> out;
  out.reserve(specs.size());
  for (const DerivationSpec& spec : specs)
    out.push_back(run_derivation(corpus, stopwords, table, spec));
  return out;
}

}  // namespace dreamtext
