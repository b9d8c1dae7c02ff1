#pragma once

// Analysis drivers shared by the command-line subcommands and the fixture
// pipeline. Each driver reads its inputs, writes its reports into a directory
// and returns a one-line summary.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "slanglex/embeddings.hpp"
#include "slanglex/openset.hpp"
#include "slanglex/report.hpp"
#include "slanglex/slangclass.hpp"
#include "slanglex/social.hpp"

namespace slanglex::pipeline {

namespace fs = std::filesystem;

/// `<analysis> key=value ...`, keys in insertion order.
class Summary {
 public:
  explicit Summary(std::string analysis) : analysis_(std::move(analysis)) {}

  Summary& add(std::string key, std::string value);
  Summary& add(std::string key, double value);
  Summary& add(std::string key, std::int64_t value);
  Summary& add(std::string key, std::size_t value) { return add(std::move(key), static_cast<std::int64_t>(value)); }
  Summary& add(std::string key, int value) { return add(std::move(key), static_cast<std::int64_t>(value)); }

  std::string line() const;

 private:
  std::string analysis_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Writes reports into one directory, each prefixed with the provenance line.
class ReportWriter {
 public:
  ReportWriter(fs::path dir, std::string tool_version, std::uint64_t seed);

  /// Provenance for a report over the given input files (digested by file name).
  report::Provenance provenance(std::span<const fs::path> inputs) const;
  void write(const std::string& name, std::span<const fs::path> inputs,
             const std::function<void(std::ostream&)>& body) const;
  const fs::path& dir() const { return dir_; }
  std::uint64_t seed() const { return seed_; }

 private:
  fs::path dir_;
  std::string version_;
  std::uint64_t seed_;
};

struct IngestOptions {
  fs::path input;
  corpus::LexiconFormat format = corpus::LexiconFormat::SlangJsonl;
  std::int64_t min_votes = 100;
  fs::path output;
};

/// Filters a slang lexicon by votes (standard lexicons pass through) and
/// persists it as JSONL or TSV respectively.
Summary ingest(const IngestOptions& options);

struct PhonologyOptions {
  fs::path slang;
  fs::path standard;
  fs::path pronouncing;
  fs::path rules;
  double smoothing = 1e-6;
  double alpha = 0.05;
};

/// phoneme_odds.csv, manners.csv (first and final manner proportions with
/// Bonferroni-corrected two-proportion z-tests) and pronunciations.tsv.
Summary phonology(const PhonologyOptions& options, const ReportWriter& writer);

struct MorphologyOptions {
  fs::path slang;
  morphology::SegmenterParams params;
  std::size_t top_k = 25;
};

/// segmenter.tsv, segmentations.tsv, prefixes.csv, suffixes.csv.
Summary morphology(const MorphologyOptions& options, const ReportWriter& writer);

struct ClassesTrainOptions {
  fs::path gold;
  slangclass::TrainOptions train;
  fs::path model;
  std::size_t top_k = 10;
};

/// Trains on the whole gold file; writes the model and top_features.csv.
Summary classes_train(const ClassesTrainOptions& options, const ReportWriter& writer);

struct ClassesPredictOptions {
  fs::path model;
  fs::path words;  // one word per line, or a gold TSV (first column)
  double delta = 0.5;
  openset::Score score = openset::Score::MaxProb;
};

/// predictions.csv: word,label,score.
Summary classes_predict(const ClassesPredictOptions& options, const ReportWriter& writer);

struct ClassesEvalOptions {
  fs::path gold;
  slangclass::TrainOptions train;
  double test_fraction = 0.10;
  double delta = 0.5;
  openset::Score score = openset::Score::MaxProb;
  std::size_t sweep_steps = 10;  // cross-class thresholds swept; 0 disables
  bool y_is_vowel = false;
};

/// Held-out comparison of char, morph and label-distribution models, the
/// cross-class open-set protocol (at `delta` and swept across the attainable
/// threshold range) and the rule-based pattern analyzers.
Summary classes_eval(const ClassesEvalOptions& options, const ReportWriter& writer);

struct EmbedOptions {
  fs::path slang;
  embeddings::TrainingConfig config;
  fs::path output;  // embedding table, text format
};

/// Trains SGNS over usage examples; writes the table and embed_loss.csv.
Summary embed(const EmbedOptions& options, const ReportWriter& writer);

struct SubjectOptions {
  fs::path slang;
  fs::path embeddings;
  std::size_t k = 5;
  social::Metric metric = social::Metric::Cosine;
  double test_fraction = 0.10;
  double delta = 0.5;
  openset::Score score = openset::Score::MaxProb;
};

/// KNN subject model: held-out metrics against the label-distribution
/// baseline, plus open-set predictions for unlabelled headwords.
Summary subjects(const SubjectOptions& options, const ReportWriter& writer);

struct BiasOptions {
  fs::path embeddings;
  fs::path lexicons;
  std::size_t permutations = 10000;
};

/// Gender direction, DirectBias over occupations, occupation_projections.csv.
Summary bias_gender(const BiasOptions& options, const ReportWriter& writer);
/// SEXPREJ for names in names.txt grouped by names_gender.csv; sexprej_names.csv.
Summary bias_sexprej(const BiasOptions& options, const ReportWriter& writer);
/// religion_raw.csv and religion_standardized.csv.
Summary bias_religion(const BiasOptions& options, const ReportWriter& writer);

struct FixtureOptions {
  fs::path data_dir;
  fs::path out_dir;
  std::uint64_t seed = 0;
  std::int64_t min_votes = 100;
  double delta = 0.5;
  openset::Score score = openset::Score::MaxProb;
  int dimension = 50;
  int epochs = 10;
  int min_count = 2;
  std::size_t k = 5;
};

/// Full chain over the bundled mini-corpus; returns every summary in order
/// and also writes them to summary.txt.
std::vector<Summary> run_fixtures(const FixtureOptions& options, const std::string& tool_version);

}  // namespace slanglex::pipeline
