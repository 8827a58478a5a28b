#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dreamtext/corpus.hpp"
#include "dreamtext/derive.hpp"

namespace dreamtext {

struct StatsReport {
  std::vector<std::pair<std::string, CorpusStats>> rows;  // input order
};

// "== <label> ==" sections separated by blank lines; the document ends
// with exactly one trailing newline (empty for no texts).
std::string render_document(const std::vector<DerivedText>& texts);

// TSV: "file\tcharacters\ttokens\tsentences\tparagraphs" plus one row
// per file.
std::string render_stats(const StatsReport& report);

}  // namespace dreamtext
