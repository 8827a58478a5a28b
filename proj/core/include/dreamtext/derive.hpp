#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dreamtext/corpus.hpp"
#include "dreamtext/lexicon.hpp"
#include "dreamtext/ordering.hpp"
#include "dreamtext/phonofilter.hpp"

namespace dreamtext {

enum class CollocationMeasure { RawCount, PMI };

enum class DerivationSource { MeaningfulWords, SentenceBoundaries, Collocations };

struct DerivationSpec {
  std::string label;
  DerivationSource source = DerivationSource::MeaningfulWords;
  // MeaningfulWords only:
  std::vector<FilterSpec> filters;
  OrderingSpec ordering;
  // Collocations only:
  std::uint64_t min_count = 2;
  CollocationMeasure measure = CollocationMeasure::RawCount;
};

struct DerivedText {
  std::string label;
  std::vector<std::string> lines;
};

// An adjacent meaningful-word pair within one sentence.
struct Collocation {
  std::string first;
  std::string second;
  std::uint64_t count = 0;
  double score = 0.0;
};

// One line per sentence: "<first surface> <last surface>", taken from the
// raw token stream (punctuation included); a single-token sentence yields
// that token once.
DerivedText sentence_boundary_pairs(const Corpus& corpus, std::string label);

// Bigrams over the per-sentence sequences of meaningful normalized words;
// pairs never cross a sentence boundary. PMI score is
// log2(count * N / (count(first) * count(second))) with N the total
// bigram count and word counts taken over the meaningful-word stream.
// Sorted by score desc, count desc, then collation of (first, second).
std::vector<Collocation> collocations(const Corpus& corpus, const StopwordList& stopwords,
                                      std::uint64_t min_count, CollocationMeasure measure);

// Throws DataError with the spec label attached on invalid filters or
// ordering failures.
DerivedText run_derivation(const Corpus& corpus, const StopwordList& stopwords,
                           const FrequencyTable& table, const DerivationSpec& spec);

// Validates label uniqueness up front, builds the frequency table once,
// then runs every spec in order.
std::vector<DerivedText> run_all(const Corpus& corpus, const StopwordList& stopwords,
                                 const std::vector<DerivationSpec>& specs);

}  // namespace dreamtext
