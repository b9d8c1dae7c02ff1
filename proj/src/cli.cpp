#include "slanglex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "slanglex/error.hpp"
#include "slanglex/pipeline.hpp"
#include "slanglex/text.hpp"

#ifndef SLANGLEX_VERSION
#define SLANGLEX_VERSION "dev"
#endif
#ifndef SLANGLEX_DATA_DIR
#define SLANGLEX_DATA_DIR "data"
#endif

namespace slanglex::cli {

namespace {

namespace fs = std::filesystem;
namespace pl = slanglex::pipeline;

// Invalid parameter detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

void check_threshold(double delta, openset::Score score, std::size_t classes) {
  try {
    openset::validate_threshold(delta, score, classes);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

const std::map<std::string, openset::Score> kScores{{"maxprob", openset::Score::MaxProb},
                                                    {"negentropy", openset::Score::NegEntropy}};
const std::map<std::string, features::FeatureKind> kFeatures{{"char", features::FeatureKind::CharNgram},
                                                             {"morph", features::FeatureKind::MorphemeNgram}};
const std::map<std::string, social::Metric> kMetrics{{"cosine", social::Metric::Cosine},
                                                     {"euclidean", social::Metric::Euclidean}};
const std::map<std::string, corpus::LexiconFormat> kFormats{{"slang-jsonl", corpus::LexiconFormat::SlangJsonl},
                                                            {"standard-tsv", corpus::LexiconFormat::StandardTsv}};

template <typename T>
CLI::Option* add_enum(CLI::App* app, const std::string& name, T& target, const std::map<std::string, T>& values,
                      const std::string& help) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : values) keys.push_back(k);
  return app
      ->add_option_function<std::string>(
          name, [&target, &values](const std::string& s) { target = values.at(text::to_lower(s)); }, help)
      ->check(CLI::IsMember(keys, CLI::ignore_case));
}

// --seed and --config on every analysis subcommand. --config is consumed
// before parsing; registering it keeps CLI11 from rejecting it.
void add_common(CLI::App* app, std::uint64_t& seed) {
  app->add_option("--seed", seed, "Seed for every random draw")->capture_default_str();
  app->add_option("--config", "Flat key=value file; explicit flags take precedence");
}

// Flat `key = value` lines; `#` starts a comment line.
std::vector<std::pair<std::string, std::string>> read_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto t = text::trim(raw);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(line) + ": expected key=value");
    }
    auto key = text::trim(t.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.emplace_back(key, text::trim(t.substr(eq + 1)));
  }
  return out;
}

bool given(std::span<const std::string> args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

std::optional<std::string> config_path(std::span<const std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

// Splices config entries as `--key=value` right after the subcommand path so
// that flags on the command line win and unknown keys fail like unknown flags.
std::vector<std::string> apply_config(const CLI::App& app, std::span<const std::string> args) {
  std::vector<std::string> merged(args.begin(), args.end());
  const auto path = config_path(args);
  if (!path) return merged;

  std::size_t depth = 0;
  const CLI::App* node = &app;
  while (depth < args.size()) {
    const CLI::App* next = nullptr;
    for (const auto* sub : node->get_subcommands({})) {
      if (sub->check_name(args[depth])) next = sub;
    }
    if (!next) break;
    node = next;
    ++depth;
  }
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config(*path)) {
    if (key == "config") throw UsageError("config files cannot nest");
    if (!given(args, "--" + key)) extra.push_back("--" + key + "=" + value);
  }
  merged.insert(merged.begin() + static_cast<std::ptrdiff_t>(depth), extra.begin(), extra.end());
  return merged;
}

struct Context {
  std::uint64_t seed = 0;
  fs::path out_dir = "report";
  fs::path data_dir = SLANGLEX_DATA_DIR;

  pl::ReportWriter writer() const { return pl::ReportWriter(out_dir, SLANGLEX_VERSION, seed); }
};

void add_out(CLI::App* app, Context& ctx) {
  app->add_option("--out", ctx.out_dir, "Report directory")->capture_default_str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slang lexicon analysis toolkit", "slanglex"};
  app.set_version_flag("--version", SLANGLEX_VERSION);
  app.require_subcommand(1);
  app.fallthrough(false);

  Context ctx;
  std::function<std::vector<pl::Summary>()> action;

  // ingest
  pl::IngestOptions ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Filter a lexicon by votes and persist it");
  add_common(c_ingest, ctx.seed);
  add_enum(c_ingest, "--format", ingest.format, kFormats, "slang-jsonl or standard-tsv");
  c_ingest->add_option("--min-votes", ingest.min_votes, "Keep entries with at least this many votes")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  c_ingest->add_option("--out", ingest.output, "Output corpus file")->required();
  c_ingest->add_option("input", ingest.input, "Input lexicon")->required()->check(CLI::ExistingFile);
  c_ingest->callback([&] { action = [&] { return std::vector{pl::ingest(ingest)}; }; });

  // phonology
  pl::PhonologyOptions phon;
  phon.pronouncing = ctx.data_dir / "cmudict" / "cmudict.dict";
  phon.rules = ctx.data_dir / "g2p_rules.tsv";
  auto* c_phon = app.add_subcommand("phonology", "Phoneme odds ratios and articulation manners");
  add_common(c_phon, ctx.seed);
  add_out(c_phon, ctx);
  c_phon->add_option("--slang", phon.slang, "Slang corpus (JSONL)")->required()->check(CLI::ExistingFile);
  c_phon->add_option("--standard", phon.standard, "Standard lexicon (TSV)")->required()->check(CLI::ExistingFile);
  c_phon->add_option("--cmudict", phon.pronouncing, "Pronouncing dictionary")->check(CLI::ExistingFile);
  c_phon->add_option("--rules", phon.rules, "Grapheme rules")->check(CLI::ExistingFile);
  c_phon->add_option("--smoothing", phon.smoothing, "Odds-ratio smoothing")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_phon->add_option("--alpha", phon.alpha, "Family-wise significance level")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  c_phon->callback([&] { action = [&] { return std::vector{pl::phonology(phon, ctx.writer())}; }; });

  // morphology
  pl::MorphologyOptions morph;
  auto* c_morph = app.add_subcommand("morphology", "MDL segmentation and affix distributions");
  add_common(c_morph, ctx.seed);
  add_out(c_morph, ctx);
  c_morph->add_option("--slang", morph.slang, "Slang corpus (JSONL)")->required()->check(CLI::ExistingFile);
  c_morph->add_option("--split-penalty", morph.params.split_penalty, "Bits charged per morph boundary")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  c_morph->add_option("--max-iters", morph.params.max_iters, "Resegmentation passes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_morph->add_option("--top-k", morph.top_k, "Affixes reported")->capture_default_str()->check(CLI::PositiveNumber);
  c_morph->callback([&] {
    action = [&] {
      morph.params.seed = ctx.seed;
      return std::vector{pl::morphology(morph, ctx.writer())};
    };
  });

  // classes
  auto* c_classes = app.add_subcommand("classes", "Slang-class classifier");
  c_classes->require_subcommand(1);
  auto add_train_opts = [&](CLI::App* sub, slangclass::TrainOptions& t) {
    add_enum(sub, "--features", t.kind, kFeatures, "char or morph");
    sub->add_option("--cap", t.cap, "Vocabulary size")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--n-min", t.n_min, "Smallest n-gram")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--n-max", t.n_max, "Largest n-gram")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--l2", t.hyper.l2, "L2 regularization")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--max-epochs", t.hyper.max_epochs, "Gradient steps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  auto seed_train = [&](slangclass::TrainOptions& t) {
    require(t.n_min <= t.n_max, "--n-min must not exceed --n-max");
    t.hyper.seed = ctx.seed;
    t.segmenter.seed = ctx.seed;
  };

  pl::ClassesTrainOptions ctrain;
  auto* c_train = c_classes->add_subcommand("train", "Train on a gold file");
  add_common(c_train, ctx.seed);
  add_out(c_train, ctx);
  c_train->add_option("--gold", ctrain.gold, "Gold TSV")->required()->check(CLI::ExistingFile);
  c_train->add_option("--model", ctrain.model, "Output model file")->required();
  add_train_opts(c_train, ctrain.train);
  c_train->callback([&] {
    action = [&] {
      seed_train(ctrain.train);
      return std::vector{pl::classes_train(ctrain, ctx.writer())};
    };
  });

  pl::ClassesPredictOptions cpred;
  auto* c_pred = c_classes->add_subcommand("predict", "Open-set predictions");
  add_common(c_pred, ctx.seed);
  add_out(c_pred, ctx);
  c_pred->add_option("--model", cpred.model, "Model file");
  c_pred->add_option("--words", cpred.words, "Words: one per line, gold TSV or slang JSONL");
  c_pred->add_option("--delta", cpred.delta, "Rejection threshold")->required();
  add_enum(c_pred, "--score", cpred.score, kScores, "maxprob or negentropy");
  c_pred->callback([&] {
    action = [&] {
      check_threshold(cpred.delta, cpred.score, kSlangClasses.size());
      require(!cpred.model.empty(), "classes predict needs --model");
      require(!cpred.words.empty(), "classes predict needs --words");
      require(fs::is_regular_file(cpred.model), "model file not found: " + cpred.model.string());
      require(fs::is_regular_file(cpred.words), "word file not found: " + cpred.words.string());
      return std::vector{pl::classes_predict(cpred, ctx.writer())};
    };
  });

  pl::ClassesEvalOptions ceval;
  auto* c_eval = c_classes->add_subcommand("eval", "Held-out and cross-class evaluation");
  add_common(c_eval, ctx.seed);
  add_out(c_eval, ctx);
  c_eval->add_option("--gold", ceval.gold, "Gold TSV")->required()->check(CLI::ExistingFile);
  c_eval->add_option("--test-fraction", ceval.test_fraction, "Held-out share per class")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  c_eval->add_option("--delta", ceval.delta, "Rejection threshold for cross-class folds")->required();
  add_enum(c_eval, "--score", ceval.score, kScores, "maxprob or negentropy");
  c_eval->add_option("--sweep-steps", ceval.sweep_steps, "Cross-class threshold grid intervals; 0 disables")
      ->capture_default_str();
  c_eval->add_flag("--y-vowel", ceval.y_is_vowel, "Count 'y' as a vowel when typing reduplicatives");
  add_train_opts(c_eval, ceval.train);
  c_eval->callback([&] {
    action = [&] {
      check_threshold(ceval.delta, ceval.score, kSlangClasses.size() - 1);
      require(ceval.test_fraction > 0.0 && ceval.test_fraction < 1.0, "--test-fraction must lie in (0, 1)");
      seed_train(ceval.train);
      return std::vector{pl::classes_eval(ceval, ctx.writer())};
    };
  });

  // embed
  pl::EmbedOptions emb;
  auto* c_embed = app.add_subcommand("embed", "Train skip-gram embeddings on usage examples");
  add_common(c_embed, ctx.seed);
  add_out(c_embed, ctx);
  c_embed->add_option("--slang", emb.slang, "Slang corpus (JSONL)")->required()->check(CLI::ExistingFile);
  c_embed->add_option("--embeddings", emb.output, "Output table (text)")->required();
  c_embed->add_option("--dim", emb.config.dimension)->capture_default_str()->check(CLI::PositiveNumber);
  c_embed->add_option("--window", emb.config.window)->capture_default_str()->check(CLI::PositiveNumber);
  c_embed->add_option("--negatives", emb.config.negatives)->capture_default_str()->check(CLI::PositiveNumber);
  c_embed->add_option("--epochs", emb.config.epochs)->capture_default_str()->check(CLI::PositiveNumber);
  c_embed->add_option("--lr", emb.config.initial_lr)->capture_default_str()->check(CLI::PositiveNumber);
  c_embed->add_option("--min-count", emb.config.min_count)->capture_default_str()->check(CLI::PositiveNumber);
  c_embed->add_option("--subsample", emb.config.subsample_threshold, "Zero disables subsampling")
      ->capture_default_str();
  c_embed->callback([&] {
    action = [&] {
      emb.config.seed = ctx.seed;
      return std::vector{pl::embed(emb, ctx.writer())};
    };
  });

  // subjects
  pl::SubjectOptions subj;
  auto* c_subj = app.add_subcommand("subjects", "KNN subject classification");
  add_common(c_subj, ctx.seed);
  add_out(c_subj, ctx);
  c_subj->add_option("--slang", subj.slang, "Slang corpus (JSONL)")->required()->check(CLI::ExistingFile);
  c_subj->add_option("--embeddings", subj.embeddings, "Embedding table")->required()->check(CLI::ExistingFile);
  c_subj->add_option("--k", subj.k, "Neighbours")->capture_default_str()->check(CLI::PositiveNumber);
  add_enum(c_subj, "--metric", subj.metric, kMetrics, "cosine or euclidean");
  c_subj->add_option("--test-fraction", subj.test_fraction)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  c_subj->add_option("--delta", subj.delta, "Rejection threshold")->required();
  add_enum(c_subj, "--score", subj.score, kScores, "maxprob or negentropy");
  c_subj->callback([&] {
    action = [&] {
      check_threshold(subj.delta, subj.score, kSubjects.size());
      require(subj.test_fraction > 0.0 && subj.test_fraction < 1.0, "--test-fraction must lie in (0, 1)");
      return std::vector{pl::subjects(subj, ctx.writer())};
    };
  });

  // bias
  pl::BiasOptions bias;
  bias.lexicons = ctx.data_dir / "lexicons";
  auto* c_bias = app.add_subcommand("bias", "Gender, sexual and religious prejudice metrics");
  c_bias->require_subcommand(1);
  auto add_bias = [&](const std::string& name, const std::string& help,
                      pl::Summary (*fn)(const pl::BiasOptions&, const pl::ReportWriter&)) {
    auto* sub = c_bias->add_subcommand(name, help);
    add_common(sub, ctx.seed);
    add_out(sub, ctx);
    sub->add_option("--embeddings", bias.embeddings, "Embedding table")->required()->check(CLI::ExistingFile);
    sub->add_option("--lexicons", bias.lexicons, "Lexicon directory")->check(CLI::ExistingDirectory);
    if (name == "sexprej") {
      sub->add_option("--permutations", bias.permutations, "Permutation draws")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
    }
    sub->callback([&, fn] { action = [&, fn] { return std::vector{fn(bias, ctx.writer())}; }; });
  };
  add_bias("gender", "DirectBias and occupation projections", &pl::bias_gender);
  add_bias("sexprej", "Sexual prejudice of female vs male names", &pl::bias_sexprej);
  add_bias("religion", "Standardized religion-prejudice matrix", &pl::bias_religion);

  // pipeline
  pl::FixtureOptions fix;
  bool fixtures = false;
  fs::path data_dir;
  auto* c_pipe = app.add_subcommand("pipeline", "Run every analysis on a data directory");
  add_common(c_pipe, ctx.seed);
  c_pipe->add_flag("--fixtures", fixtures, "Use the bundled mini-corpus");
  c_pipe->add_option("--data-dir", data_dir, "Directory laid out like the bundled data")
      ->check(CLI::ExistingDirectory);
  c_pipe->add_option("--out", fix.out_dir, "Report directory")->default_val("slanglex-report");
  c_pipe->add_option("--min-votes", fix.min_votes)->capture_default_str()->check(CLI::NonNegativeNumber);
  c_pipe->add_option("--delta", fix.delta)->capture_default_str();
  add_enum(c_pipe, "--score", fix.score, kScores, "maxprob or negentropy");
  c_pipe->add_option("--dim", fix.dimension)->capture_default_str()->check(CLI::PositiveNumber);
  c_pipe->add_option("--epochs", fix.epochs)->capture_default_str()->check(CLI::PositiveNumber);
  c_pipe->add_option("--min-count", fix.min_count)->capture_default_str()->check(CLI::PositiveNumber);
  c_pipe->add_option("--k", fix.k)->capture_default_str()->check(CLI::PositiveNumber);
  c_pipe->callback([&] {
    action = [&] {
      require(fixtures != !data_dir.empty(), "pipeline needs exactly one of --fixtures or --data-dir");
      check_threshold(fix.delta, fix.score, kSlangClasses.size() - 1);
      fix.data_dir = fixtures ? ctx.data_dir : data_dir;
      fix.seed = ctx.seed;
      return pl::run_fixtures(fix, SLANGLEX_VERSION);
    };
  });

  try {
    auto merged = apply_config(app, args);
    std::reverse(merged.begin(), merged.end());
    app.parse(merged);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  } catch (const UsageError& e) {
    err << "slanglex: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    for (const auto& s : action()) out << s.line() << '\n';
  } catch (const UsageError& e) {
    err << "slanglex: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "slanglex: error: " << e.what() << '\n';
    return kAnalysisError;
  }
  return kOk;
}

}  // namespace slanglex::cli
