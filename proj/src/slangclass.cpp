#include "slanglex/slangclass.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "slanglex/error.hpp"

namespace slanglex::slangclass {

namespace {

std::vector<std::string> names(std::span<const SlangClass> classes) {
  std::vector<std::string> out;
  for (auto c : classes) out.emplace_back(to_string(c));
  return out;
}

// --- binary container helpers --------------------------------------------

constexpr char kMagic[8] = {'S', 'L', 'X', 'C', 'L', 'S', '\0', '\0'};
constexpr std::uint32_t kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}
void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}
void put_i64(std::ostream& out, std::int64_t v) { put_u64(out, static_cast<std::uint64_t>(v)); }
void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }
void put_str(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void need(std::istream& in, const char* what) {
  if (!in) throw Error(std::string("truncated model container while reading ") + what);
}
std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  need(in, "u64");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}
std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  need(in, "u32");
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}
std::int64_t get_i64(std::istream& in) { return static_cast<std::int64_t>(get_u64(in)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }
std::string get_str(std::istream& in) {
  const auto n = get_u32(in);
  std::string s(n, '\0');
  in.read(s.data(), n);
  need(in, "string");
  return s;
}

}  // namespace

ClassifierModel train_logreg(const features::FeatureVocabulary& vocab,
                             std::span<const features::FeatureMap> X, std::span<const SlangClass> y,
                             const logistic::Hyper& hyper) {
  if (X.size() != y.size()) throw Error("feature and label counts differ");
  if (X.empty()) throw Error("cannot train on an empty set");
  std::set<SlangClass> present(y.begin(), y.end());

  ClassifierModel model;
  model.vocab = vocab;
  model.classes.assign(present.begin(), present.end());
  model.regularization = hyper.l2;

  logistic::Problem problem;
  problem.features = vocab.size();
  problem.classes = model.classes.size();
  for (std::size_t i = 0; i < X.size(); ++i) {
    problem.rows.push_back(vocab.vectorize(X[i]));
    const auto k = std::find(model.classes.begin(), model.classes.end(), y[i]) - model.classes.begin();
    problem.labels.push_back(static_cast<std::size_t>(k));
  }
  model.weights = logistic::fit(problem, hyper).weights;
  return model;
}

features::FeatureMap featurize(const ClassifierModel& model, std::string_view word,
                               const morphology::SegmenterModel* segmenter) {
  const auto& v = model.vocab;
  if (v.kind() == features::FeatureKind::CharNgram) {
    return features::extract_char_ngrams(word, v.n_min(), v.n_max());
  }
  const morphology::SegmenterModel* seg = segmenter;
  if (!seg && model.segmenter) seg = &*model.segmenter;
  if (!seg) throw Error("morpheme-feature model needs a segmenter");
  return features::extract_morpheme_ngrams(morphology::segment(*seg, word), v.n_min(), v.n_max());
}

ClassifierModel train_classifier(std::span<const corpus::GoldClassRecord> train,
                                 const TrainOptions& options) {
  if (train.empty()) throw Error("cannot train a classifier on an empty set");
  std::optional<morphology::SegmenterModel> segmenter;
  if (options.kind == features::FeatureKind::MorphemeNgram) {
    std::vector<std::string> words;
    for (const auto& r : train) words.push_back(r.word);
    segmenter = morphology::train_segmenter(words, options.segmenter);
  }

  std::vector<features::FeatureMap> X;
  std::vector<SlangClass> y;
  for (const auto& r : train) {
    if (options.kind == features::FeatureKind::CharNgram) {
      X.push_back(features::extract_char_ngrams(r.word, options.n_min, options.n_max));
    } else {
      X.push_back(features::extract_morpheme_ngrams(morphology::segment(*segmenter, r.word),
                                                    options.n_min, options.n_max));
    }
    y.push_back(r.label);
  }
  auto vocab = features::FeatureVocabulary::fit(options.kind, options.n_min, options.n_max, X, options.cap);
  auto model = train_logreg(vocab, X, y, options.hyper);
  model.segmenter = std::move(segmenter);
  return model;
}

std::vector<double> predict_proba(const ClassifierModel& model, std::string_view word,
                                  const morphology::SegmenterModel* segmenter) {
  const auto row = model.vocab.vectorize(featurize(model, word, segmenter));
  return logistic::softmax(model.weights, model.classes.size(), model.vocab.size(), row);
}

std::vector<std::pair<std::string, double>> top_features(const ClassifierModel& model,
                                                         SlangClass cls, std::size_t k) {
  auto it = std::find(model.classes.begin(), model.classes.end(), cls);
  if (it == model.classes.end()) throw Error("class not in model");
  const auto row = static_cast<std::size_t>(it - model.classes.begin());
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t j = 0; j < model.vocab.size(); ++j) {
    out.emplace_back(model.vocab.features()[j], model.weight(row, j));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (out.size() > k) out.resize(k);
  return out;
}

void write_model(std::ostream& out, const ClassifierModel& model) {
  out.write(kMagic, sizeof kMagic);
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(model.vocab.kind()));
  put_u32(out, static_cast<std::uint32_t>(model.vocab.n_min()));
  put_u32(out, static_cast<std::uint32_t>(model.vocab.n_max()));
  put_f64(out, model.regularization);
  put_u32(out, static_cast<std::uint32_t>(model.vocab.size()));
  for (const auto& f : model.vocab.features()) put_str(out, f);
  put_u32(out, static_cast<std::uint32_t>(model.classes.size()));
  for (auto c : model.classes) put_u32(out, static_cast<std::uint32_t>(c));
  for (double w : model.weights) put_f64(out, w);
  put_u32(out, model.segmenter ? 1u : 0u);
  if (model.segmenter) {
    const auto& s = *model.segmenter;
    put_u32(out, static_cast<std::uint32_t>(s.alphabet_size()));
    put_f64(out, s.split_penalty());
    put_i64(out, s.boundaries());
    put_u32(out, static_cast<std::uint32_t>(s.morph_counts().size()));
    for (const auto& [m, c] : s.morph_counts()) {
      put_str(out, m);
      put_i64(out, c);
    }
  }
  if (!out) throw Error("failed writing model container");
}

ClassifierModel read_model(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof magic);
  need(in, "magic");
  if (std::memcmp(magic, kMagic, sizeof kMagic) != 0) throw Error("not a slang-class model container");
  const auto version = get_u32(in);
  if (version != kVersion) throw Error("unsupported model container version " + std::to_string(version));

  const auto kind = static_cast<features::FeatureKind>(get_u32(in));
  const auto n_min = static_cast<int>(get_u32(in));
  const auto n_max = static_cast<int>(get_u32(in));
  ClassifierModel model;
  model.regularization = get_f64(in);
  const auto n_features = get_u32(in);
  std::vector<std::string> feats;
  for (std::uint32_t i = 0; i < n_features; ++i) feats.push_back(get_str(in));
  model.vocab = features::FeatureVocabulary(kind, n_min, n_max, std::move(feats));
  const auto n_classes = get_u32(in);
  if (n_classes < 1 || n_classes > kSlangClasses.size()) throw Error("bad class count in model container");
  for (std::uint32_t i = 0; i < n_classes; ++i) {
    const auto c = get_u32(in);
    if (c >= kSlangClasses.size()) throw Error("bad class id in model container");
    model.classes.push_back(kSlangClasses[c]);
  }
  model.weights.resize(static_cast<std::size_t>(n_classes) * (n_features + 1));
  for (auto& w : model.weights) w = get_f64(in);
  if (get_u32(in) == 1) {
    const auto alphabet = static_cast<int>(get_u32(in));
    const double penalty = get_f64(in);
    const auto boundaries = get_i64(in);
    const auto n_morphs = get_u32(in);
    std::map<std::string, std::int64_t> counts;
    for (std::uint32_t i = 0; i < n_morphs; ++i) {
      auto m = get_str(in);
      counts[std::move(m)] = get_i64(in);
    }
    model.segmenter = morphology::SegmenterModel(std::move(counts), alphabet, penalty, boundaries);
  }
  return model;
}

void save_model(const std::filesystem::path& path, const ClassifierModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_model(out, model);
}

ClassifierModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_model(in);
}

LabelSampler random_baseline(std::span<const SlangClass> train_labels, std::uint64_t seed) {
  return LabelSampler(train_labels, seed);
}

stats::ClassificationReport evaluate(const ClassifierModel& model,
                                     std::span<const corpus::GoldClassRecord> test) {
  std::vector<std::string> truth, pred;
  for (const auto& r : test) {
    const auto p = predict_proba(model, r.word);
    truth.emplace_back(to_string(r.label));
    pred.emplace_back(to_string(model.classes[openset::argmax(p)]));
  }
  return stats::confusion_and_report(truth, pred, names(kSlangClasses));
}

ModelFactory logreg_factory(const TrainOptions& options) {
  return [options](std::span<const corpus::GoldClassRecord> train, std::span<const SlangClass>) {
    auto model = std::make_shared<ClassifierModel>(train_classifier(train, options));
    return ProbabilityFn([model](std::string_view word) { return predict_proba(*model, word); });
  };
}

CrossClassResult cross_class_validate(std::span<const corpus::GoldClassRecord> gold,
                                      const ModelFactory& factory, double delta,
                                      openset::Score score, std::uint64_t seed, double test_fraction) {
  if (std::isnan(delta)) throw Error("reject threshold is NaN");
  std::set<SlangClass> present;
  for (const auto& r : gold) present.insert(r.label);
  if (present.size() < 3) throw Error("cross-class validation needs at least three classes");

  const auto split = corpus::split_gold(gold, test_fraction, seed);
  CrossClassResult result;
  for (auto held_out : present) {
    std::vector<corpus::GoldClassRecord> train;
    for (const auto& r : split.train) {
      if (r.label != held_out) train.push_back(r);
    }
    std::vector<SlangClass> known;
    for (auto c : present) {
      if (c != held_out) known.push_back(c);
    }
    const auto model = factory(train, known);

    std::vector<std::string> words, truth, pred;
    for (const auto& r : split.test) {
      words.push_back(r.word);
      truth.push_back(r.label == held_out ? std::string(kRejectedName) : std::string(to_string(r.label)));
    }
    const auto labels = openset::predict_with_reject<SlangClass, std::string>(
        known, [&](const std::string& w) { return model(w); }, words, delta, score);
    for (const auto& l : labels) pred.push_back(to_string(l));

    auto label_names = names(kSlangClasses);
    label_names.emplace_back(kRejectedName);
    FoldResult fold;
    fold.held_out = held_out;
    fold.report = stats::confusion_and_report(truth, pred, label_names);
    fold.weighted_f1 = fold.report.weighted_f1;
    result.mean_f1 += fold.weighted_f1;
    result.folds.push_back(std::move(fold));
  }
  result.mean_f1 /= static_cast<double>(result.folds.size());
  return result;
}

}  // namespace slanglex::slangclass
