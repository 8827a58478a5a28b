#include "dreamtext/config.hpp"

#include <json.hpp>

#include <map>
#include <set>

#include "dreamtext/error.hpp"

namespace dreamtext {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError("config: " + path + ": " + message);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) fail(path + "." + key, "unknown field");
}

std::string get_string(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) fail(path + "." + key, "missing required field");
  if (!obj[key].is_string()) fail(path + "." + key, "expected a string");
  return obj[key].get<std::string>();
}

std::uint64_t get_uint(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return value.get<std::uint64_t>();
}

Sound parse_sound(const std::string& name, const std::string& path) {
  static const std::map<std::string, Sound> names = {
      {"plosive", Sound::Plosive}, {"fricative", Sound::Fricative},
      {"nasal", Sound::Nasal},     {"lateral", Sound::Lateral},
      {"rhotic", Sound::Rhotic},   {"other", Sound::Other},
  };
  auto it = names.find(name);
  if (it == names.end()) fail(path, "unknown consonant class '" + name + "'");
  return it->second;
}

std::string sound_name(Sound sound) {
  switch (sound) {
    case Sound::Plosive: return "plosive";
    case Sound::Fricative: return "fricative";
    case Sound::Nasal: return "nasal";
    case Sound::Lateral: return "lateral";
    case Sound::Rhotic: return "rhotic";
    default: return "other";
  }
}

FilterSpec parse_filter(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  std::string kind = get_string(obj, path, "kind");
  if (kind == "single_vowel") {
    require_keys(obj, path, {"kind"});
    return SingleVowelFilter{};
  }
  if (kind == "consonant_class") {
    require_keys(obj, path, {"kind", "classes", "vowels", "extra"});
    ConsonantClassFilter filter;
    if (obj.contains("classes")) {
      if (!obj["classes"].is_array()) fail(path + ".classes", "expected an array");
      for (std::size_t i = 0; i < obj["classes"].size(); ++i) {
        const json& item = obj["classes"][i];
        std::string p = path + ".classes[" + std::to_string(i) + "]";
        if (!item.is_string()) fail(p, "expected a string");
        filter.allowed_classes.insert(parse_sound(item.get<std::string>(), p));
      }
    }
    if (obj.contains("vowels")) {
      if (!obj["vowels"].is_array()) fail(path + ".vowels", "expected an array");
      std::set<char> vowels;
      for (std::size_t i = 0; i < obj["vowels"].size(); ++i) {
        const json& item = obj["vowels"][i];
        std::string p = path + ".vowels[" + std::to_string(i) + "]";
        if (!item.is_string() || item.get<std::string>().size() != 1)
          fail(p, "expected a single vowel letter");
        char v = item.get<std::string>()[0];
        if (v != 'a' && v != 'e' && v != 'i' && v != 'o' && v != 'u')
          fail(p, "expected one of a, e, i, o, u");
        vowels.insert(v);
      }
      filter.allowed_vowels = std::move(vowels);
    }
    if (obj.contains("extra")) {
      if (!obj["extra"].is_array()) fail(path + ".extra", "expected an array");
      for (std::size_t i = 0; i < obj["extra"].size(); ++i) {
        const json& item = obj["extra"][i];
        std::string p = path + ".extra[" + std::to_string(i) + "]";
        if (!item.is_string() || item.get<std::string>().empty())
          fail(p, "expected a letter or digraph");
        filter.extra_letters.insert(item.get<std::string>());
      }
    }
    try {
      validate_filter(filter);
    } catch (const DataError& e) {
      fail(path, e.what());
    }
    return filter;
  }
  if (kind == "length") {
    require_keys(obj, path, {"kind", "min", "max"});
    LengthFilter filter;
    if (obj.contains("min")) filter.min = get_uint(obj["min"], path + ".min");
    if (obj.contains("max")) filter.max = get_uint(obj["max"], path + ".max");
    if (filter.min > filter.max) fail(path, "min exceeds max");
    return filter;
  }
  if (kind == "frequency") {
    require_keys(obj, path, {"kind", "min", "max"});
    FrequencyFilter filter;
    if (obj.contains("min")) filter.min = get_uint(obj["min"], path + ".min");
    if (obj.contains("max")) filter.max = get_uint(obj["max"], path + ".max");
    if (filter.min > filter.max) fail(path, "min exceeds max");
    return filter;
  }
  fail(path + ".kind", "unknown filter kind '" + kind + "'");
}

OrderingSpec parse_ordering(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  require_keys(obj, path, {"key", "direction", "repetition"});
  OrderingSpec spec;
  if (obj.contains("key")) {
    std::string key = get_string(obj, path, "key");
    if (key == "corpus") spec.key = OrderKey::Corpus;
    else if (key == "incidence") spec.key = OrderKey::Incidence;
    else if (key == "alphabetic") spec.key = OrderKey::Alphabetic;
    else if (key == "length") spec.key = OrderKey::Length;
    else fail(path + ".key", "unknown ordering key '" + key + "'");
  }
  if (obj.contains("direction")) {
    std::string direction = get_string(obj, path, "direction");
    if (direction == "ascending") spec.direction = Direction::Ascending;
    else if (direction == "descending") spec.direction = Direction::Descending;
    else fail(path + ".direction", "expected 'ascending' or 'descending'");
  }
  if (obj.contains("repetition")) {
    std::string repetition = get_string(obj, path, "repetition");
    if (repetition == "with_repetitions") spec.repetition = Repetition::WithRepetitions;
    else if (repetition == "deduplicated") spec.repetition = Repetition::Deduplicated;
    else fail(path + ".repetition", "expected 'with_repetitions' or 'deduplicated'");
  }
  return spec;
}

DerivationSpec parse_spec(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  require_keys(obj, path,
               {"label", "source", "filters", "ordering", "min_count", "measure"});
  DerivationSpec spec;
  spec.label = get_string(obj, path, "label");
  if (spec.label.empty()) fail(path + ".label", "label must be non-empty");
  std::string source = get_string(obj, path, "source");
  if (source == "meaningful") spec.source = DerivationSource::MeaningfulWords;
  else if (source == "boundaries") spec.source = DerivationSource::SentenceBoundaries;
  else if (source == "collocations") spec.source = DerivationSource::Collocations;
  else fail(path + ".source", "unknown source '" + source + "'");

  const bool meaningful = spec.source == DerivationSource::MeaningfulWords;
  const bool colloc = spec.source == DerivationSource::Collocations;
  if (!meaningful && (obj.contains("filters") || obj.contains("ordering")))
    fail(path, "filters/ordering are only valid with source 'meaningful'");
  if (!colloc && (obj.contains("min_count") || obj.contains("measure")))
    fail(path, "min_count/measure are only valid with source 'collocations'");

  if (obj.contains("filters")) {
    if (!obj["filters"].is_array()) fail(path + ".filters", "expected an array");
    for (std::size_t i = 0; i < obj["filters"].size(); ++i)
      spec.filters.push_back(
          parse_filter(obj["filters"][i], path + ".filters[" + std::to_string(i) + "]"));
  }
  if (obj.contains("ordering"))
    spec.ordering = parse_ordering(obj["ordering"], path + ".ordering");
  if (obj.contains("min_count")) {
    spec.min_count = get_uint(obj["min_count"], path + ".min_count");
    if (spec.min_count < 1) fail(path + ".min_count", "must be >= 1");
  }
  if (obj.contains("measure")) {
    std::string measure = get_string(obj, path, "measure");
    if (measure == "raw") spec.measure = CollocationMeasure::RawCount;
    else if (measure == "pmi") spec.measure = CollocationMeasure::PMI;
    else fail(path + ".measure", "expected 'raw' or 'pmi'");
  }
  return spec;
}

json filter_to_json(const FilterSpec& spec) {
  json obj;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SingleVowelFilter>) {
          obj["kind"] = "single_vowel";
        } else if constexpr (std::is_same_v<T, ConsonantClassFilter>) {
          obj["kind"] = "consonant_class";
          json classes = json::array();
          for (Sound sound : f.allowed_classes) classes.push_back(sound_name(sound));
          obj["classes"] = classes;
          if (f.allowed_vowels) {
            json vowels = json::array();
            for (char v : *f.allowed_vowels) vowels.push_back(std::string(1, v));
            obj["vowels"] = vowels;
          }
          if (!f.extra_letters.empty()) {
            json extra = json::array();
            for (const std::string& letter : f.extra_letters) extra.push_back(letter);
            obj["extra"] = extra;
          }
        } else if constexpr (std::is_same_v<T, LengthFilter>) {
          obj["kind"] = "length";
          if (f.min > 0) obj["min"] = f.min;
          if (f.max != SIZE_MAX) obj["max"] = f.max;
        } else {
          obj["kind"] = "frequency";
          if (f.min > 0) obj["min"] = f.min;
          if (f.max != UINT64_MAX) obj["max"] = f.max;
        }
      },
      spec);
  return obj;
}

json ordering_to_json(const OrderingSpec& spec) {
  json obj;
  switch (spec.key) {
    case OrderKey::Corpus: obj["key"] = "corpus"; break;
    case OrderKey::Incidence: obj["key"] = "incidence"; break;
    case OrderKey::Alphabetic: obj["key"] = "alphabetic"; break;
    case OrderKey::Length: obj["key"] = "length"; break;
  }
  obj["direction"] =
      spec.direction == Direction::Ascending ? "ascending" : "descending";
  obj["repetition"] = spec.repetition == Repetition::WithRepetitions
                          ? "with_repetitions"
                          : "deduplicated";
  return obj;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  require_keys(doc, "$", {"corpora", "stopwords", "output", "specs"});

  RunConfig config;
  if (!doc.contains("corpora")) fail("$.corpora", "missing required field");
  if (!doc["corpora"].is_array() || doc["corpora"].empty())
    fail("$.corpora", "expected a non-empty array of paths");
  for (std::size_t i = 0; i < doc["corpora"].size(); ++i) {
    const json& item = doc["corpora"][i];
    if (!item.is_string())
      fail("$.corpora[" + std::to_string(i) + "]", "expected a string");
    config.corpus_paths.push_back(item.get<std::string>());
  }
  if (doc.contains("stopwords"))
    config.stopword_path = get_string(doc, "$", "stopwords");
  if (doc.contains("output")) config.output_path = get_string(doc, "$", "output");

  if (doc.contains("specs")) {
    if (!doc["specs"].is_array()) fail("$.specs", "expected an array");
    for (std::size_t i = 0; i < doc["specs"].size(); ++i)
      config.specs.push_back(
          parse_spec(doc["specs"][i], "$.specs[" + std::to_string(i) + "]"));
  } else {
    config.specs = default_specs();
  }

  std::set<std::string> seen;
  std::vector<std::string> duplicates;
  for (const DerivationSpec& spec : config.specs)
    if (!seen.insert(spec.label).second) duplicates.push_back(spec.label);
  if (!duplicates.empty()) {
    std::string listed;
    for (const std::string& label : duplicates)
      listed += (listed.empty() ? "" : ", ") + ("'" + label + "'");
    fail("$.specs", "duplicate labels: " + listed);
  }
  return config;
}

std::string serialize_config(const RunConfig& config) {
  json doc;
  doc["corpora"] = config.corpus_paths;
  if (config.stopword_path) doc["stopwords"] = *config.stopword_path;
  if (config.output_path) doc["output"] = *config.output_path;
  json specs = json::array();
  for (const DerivationSpec& spec : config.specs) {
    json obj;
    obj["label"] = spec.label;
    switch (spec.source) {
      case DerivationSource::MeaningfulWords: {
        obj["source"] = "meaningful";
        json filters = json::array();
        for (const FilterSpec& filter : spec.filters)
          filters.push_back(filter_to_json(filter));
        obj["filters"] = filters;
        obj["ordering"] = ordering_to_json(spec.ordering);
        break;
      }
      case DerivationSource::SentenceBoundaries:
        obj["source"] = "boundaries";
        break;
      case DerivationSource::Collocations:
        obj["source"] = "collocations";
        obj["min_count"] = spec.min_count;
        obj["measure"] = spec.measure == CollocationMeasure::PMI ? "pmi" : "raw";
        break;
    }
    specs.push_back(obj);
  }
  doc["specs"] = specs;
  return doc.dump(2) + "\n";
}

std::vector<DerivationSpec> default_specs() {
  std::vector<DerivationSpec> specs;

  auto ordered = [&](std::string label, OrderKey key, Direction direction,
                     Repetition repetition) {
    DerivationSpec spec;
    spec.label = std::move(label);
    spec.source = DerivationSource::MeaningfulWords;
    spec.ordering = {key, direction, repetition};
    specs.push_back(std::move(spec));
  };
  ordered("incidence", OrderKey::Incidence, Direction::Descending,
          Repetition::Deduplicated);
  ordered("incidence-with-repetitions", OrderKey::Incidence, Direction::Descending,
          Repetition::WithRepetitions);
  ordered("alphabetic", OrderKey::Alphabetic, Direction::Ascending,
          Repetition::Deduplicated);
  ordered("alphabetic-with-repetitions", OrderKey::Alphabetic, Direction::Ascending,
          Repetition::WithRepetitions);
  ordered("length", OrderKey::Length, Direction::Ascending, Repetition::Deduplicated);
  ordered("length-with-repetitions", OrderKey::Length, Direction::Ascending,
          Repetition::WithRepetitions);

  auto filtered = [&](std::string label, FilterSpec filter) {
    DerivationSpec spec;
    spec.label = std::move(label);
    spec.source = DerivationSource::MeaningfulWords;
    spec.filters.push_back(std::move(filter));
    spec.ordering = {OrderKey::Corpus, Direction::Ascending, Repetition::Deduplicated};
    specs.push_back(std::move(spec));
  };
  filtered("single-vowel", SingleVowelFilter{});
  filtered("fricatives", ConsonantClassFilter{{Sound::Fricative}, std::nullopt, {}});
  filtered("plosives", ConsonantClassFilter{{Sound::Plosive}, std::nullopt, {}});
  filtered("plosives-m-ae",
           ConsonantClassFilter{{Sound::Plosive}, std::set<char>{'a', 'e'}, {"m"}});

  DerivationSpec boundaries;
  boundaries.label = "sentence-boundaries";
  boundaries.source = DerivationSource::SentenceBoundaries;
  specs.push_back(std::move(boundaries));

  DerivationSpec colloc;
  colloc.label = "collocations";
  colloc.source = DerivationSource::Collocations;
  colloc.min_count = 2;
  colloc.measure = CollocationMeasure::RawCount;
  specs.push_back(std::move(colloc));

  return specs;
}

}  // namespace dreamtext
