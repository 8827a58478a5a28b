#include "dreamtext/render.hpp"

#include <set>

#include "dreamtext/error.hpp"

namespace dreamtext {

std::string render_document(const std::vector<DerivedText>& texts) {
  std::set<std::string> labels;
  for (const DerivedText& text : texts)
    if (!labels.insert(text.label).second)
      throw DataError("duplicate section label: '" + text.label + "'");

  std::string out;
  for (const DerivedText& text : texts) {
    out += "== " + text.label + " ==\n\n";
    for (const std::string& line : text.lines) out += line + "\n";
    out += "\n";
  }
  // Exactly one trailing newline.
  while (!out.empty() && out.back() == '\n') out.pop_back();
  if (!out.empty()) out += "\n";
  return out;
}

std::string render_stats(const StatsReport& report) {
  std::string out = "file\tcharacters\ttokens\tsentences\tparagraphs\n";
  for (const auto& [name, stats] : report.rows) {
    out += name + "\t" + std::to_string(stats.characters) + "\t" +
           std::to_string(stats.tokens) + "\t" + std::to_string(stats.sentences) + "\t" +
           std::to_string(stats.paragraphs) + "\n";
  }
  return out;
}

}  // namespace dreamtext
