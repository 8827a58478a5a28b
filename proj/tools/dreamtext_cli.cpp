// Command-line front end: corpus statistics, derivations, resources.
//
//   dreamtext stats <files...>
//   dreamtext derive --config run.json
//   dreamtext derive --defaults <files...> [--stopwords FILE] [--output FILE]
//   dreamtext resources stopwords

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dreamtext/config.hpp"
#include "dreamtext/corpus.hpp"
#include "dreamtext/derive.hpp"
#include "dreamtext/error.hpp"
#include "dreamtext/lexicon.hpp"
#include "dreamtext/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dreamtext::DataError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw dreamtext::DataError("cannot write file: " + output_path);
  out << text;
}

int run_stats(const std::vector<std::string>& files) {
  dreamtext::StatsReport report;
  for (const std::string& path : files) {
    dreamtext::Corpus corpus = dreamtext::load_corpus(read_file(path), path);
    report.rows.emplace_back(path, dreamtext::corpus_stats(corpus));
  }
  std::cout << dreamtext::render_stats(report);
  return kExitOk;
}

int run_derive(const std::string& config_path, const std::vector<std::string>& files,
               const std::string& stopword_path, const std::string& output_path) {
  dreamtext::RunConfig config;
  if (!config_path.empty()) {
    config = dreamtext::parse_config(read_file(config_path));
  } else {
    config.corpus_paths = files;
    if (!stopword_path.empty()) config.stopword_path = stopword_path;
    if (!output_path.empty()) config.output_path = output_path;
    config.specs = dreamtext::default_specs();
  }

  std::vector<dreamtext::Corpus> parts;
  for (const std::string& path : config.corpus_paths)
    parts.push_back(dreamtext::load_corpus(read_file(path), path));
  dreamtext::Corpus corpus =
      dreamtext::merge_corpora(std::move(parts), "combined");

  const dreamtext::StopwordList stopwords =
      config.stopword_path ? dreamtext::StopwordList::from_file(*config.stopword_path)
                           : dreamtext::StopwordList::embedded();

  std::vector<dreamtext::DerivedText> texts =
      dreamtext::run_all(corpus, stopwords, config.specs);
  write_output(dreamtext::render_document(texts),
               config.output_path ? *config.output_path : "");
  return kExitOk;
}

int run_resources_stopwords() {
  for (const std::string& word : dreamtext::StopwordList::embedded().entries())
    std::cout << word << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus text mining: segmentation, word filtering, derived documents"};
  app.require_subcommand(1);

  std::vector<std::string> stats_files;
  CLI::App* stats = app.add_subcommand("stats", "Print corpus statistics as TSV");
  stats->add_option("files", stats_files, "UTF-8 text files")->required();

  std::string config_path;
  std::vector<std::string> derive_files;
  std::string stopword_path;
  std::string output_path;
  CLI::App* derive = app.add_subcommand("derive", "Run derivations and render the document");
  CLI::Option* config_opt =
      derive->add_option("--config", config_path, "JSON run configuration");
  CLI::Option* defaults_opt =
      derive->add_flag("--defaults", "Use the built-in derivation set");
  derive->add_option("files", derive_files, "Corpus files (with --defaults)");
  derive->add_option("--stopwords", stopword_path, "Stopword override file");
  derive->add_option("--output", output_path, "Output file (default: stdout)");
  config_opt->excludes(defaults_opt);

  CLI::App* resources = app.add_subcommand("resources", "Print embedded resources");
  CLI::App* stopwords_cmd =
      resources->add_subcommand("stopwords", "Print the embedded stopword list");
  resources->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats->parsed()) return run_stats(stats_files);
    if (derive->parsed()) {
      if (config_path.empty() && !*defaults_opt) {
        std::cerr << "derive: either --config or --defaults is required\n";
        return kExitUsage;
      }
      if (*defaults_opt && derive_files.empty()) {
        std::cerr << "derive --defaults: at least one corpus file is required\n";
        return kExitUsage;
      }
      return run_derive(config_path, derive_files, stopword_path, output_path);
    }
    if (stopwords_cmd->parsed()) return run_resources_stopwords();
  } catch (const dreamtext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
