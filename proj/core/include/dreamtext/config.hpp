#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dreamtext/derive.hpp"

namespace dreamtext {

struct RunConfig {
  std::vector<std::string> corpus_paths;       // at least one
  std::optional<std::string> stopword_path;
  std::optional<std::string> output_path;      // default: standard output
  std::vector<DerivationSpec> specs;           // labels unique
};

// Strict JSON schema: unknown fields are rejected, errors carry the
// offending field path. See README for the schema.
RunConfig parse_config(std::string_view json_text);

std::string serialize_config(const RunConfig& config);

// The built-in derivation set: incidence / alphabetic / length orderings
// (deduplicated and with repetitions), single-vowel words, fricative-only
// and plosive-only words, plosives with 'm' and vowels a/e, sentence
// first/last pairs, and collocations.
std::vector<DerivationSpec> default_specs();

}  // namespace dreamtext
