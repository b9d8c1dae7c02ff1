#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slanglex/corpus.hpp"
#include "slanglex/features.hpp"
#include "slanglex/labels.hpp"
#include "slanglex/logistic.hpp"
#include "slanglex/morphology.hpp"
#include "slanglex/openset.hpp"
#include "slanglex/patterns.hpp"
#include "slanglex/random.hpp"
#include "slanglex/stats.hpp"

namespace slanglex::slangclass {

struct ClassifierModel {
  features::FeatureVocabulary vocab;
  std::vector<SlangClass> classes;
  std::vector<double> weights;  // classes x (vocab.size() + 1), last column bias
  double regularization = 1.0;
  /// Present for morpheme-feature models.
  std::optional<morphology::SegmenterModel> segmenter;

  double weight(std::size_t cls, std::size_t col) const { return weights[cls * (vocab.size() + 1) + col]; }
};

/// Fits multinomial logistic regression on pre-extracted feature maps. The
/// class list is the labels present in `y`, in enum order.
ClassifierModel train_logreg(const features::FeatureVocabulary& vocab,
                             std::span<const features::FeatureMap> X, std::span<const SlangClass> y,
                             const logistic::Hyper& hyper = {});

struct TrainOptions {
  features::FeatureKind kind = features::FeatureKind::CharNgram;
  std::size_t cap = 200;
  int n_min = 1;
  int n_max = 5;
  logistic::Hyper hyper;
  morphology::SegmenterParams segmenter;
};

/// Segmenter (for morpheme features), vocabulary and weights, all fitted on
/// `train` only.
ClassifierModel train_classifier(std::span<const corpus::GoldClassRecord> train,
                                 const TrainOptions& options);

/// Feature map of a word as seen by the model. Morpheme models use
/// `segmenter` when given, else their own.
features::FeatureMap featurize(const ClassifierModel& model, std::string_view word,
                               const morphology::SegmenterModel* segmenter = nullptr);

/// Softmax distribution over model.classes; out-of-vocabulary features are ignored.
std::vector<double> predict_proba(const ClassifierModel& model, std::string_view word,
                                  const morphology::SegmenterModel* segmenter = nullptr);

/// Top-weighted features per class, for inspection.
std::vector<std::pair<std::string, double>> top_features(const ClassifierModel& model,
                                                         SlangClass cls, std::size_t k);

// Versioned little-endian binary container holding vocabulary, weights and
// (for morpheme models) the segmenter.
void write_model(std::ostream& out, const ClassifierModel& model);
ClassifierModel read_model(std::istream& in);
void save_model(const std::filesystem::path& path, const ClassifierModel& model);
ClassifierModel load_model(const std::filesystem::path& path);

using LabelSampler = EmpiricalSampler<SlangClass>;

/// Predicts by drawing from the training label distribution.
LabelSampler random_baseline(std::span<const SlangClass> train_labels, std::uint64_t seed);

/// Closed-set argmax evaluation on labelled records.
stats::ClassificationReport evaluate(const ClassifierModel& model,
                                     std::span<const corpus::GoldClassRecord> test);

using ProbabilityFn = std::function<std::vector<double>(std::string_view word)>;
using ModelFactory = std::function<ProbabilityFn(std::span<const corpus::GoldClassRecord> train,
                                                 std::span<const SlangClass> classes)>;

/// Factory training a logistic-regression model with `options`.
ModelFactory logreg_factory(const TrainOptions& options);

struct FoldResult {
  SlangClass held_out = SlangClass::Alphabetism;
  double weighted_f1 = 0.0;
  stats::ClassificationReport report;
};

struct CrossClassResult {
  std::vector<FoldResult> folds;
  double mean_f1 = 0.0;
};

/// Open-set protocol: split `gold` (stratified, `seed`); for each class c,
/// train on the training records of the other classes and label the whole
/// test split with predict_with_reject, where instances of c count as
/// Rejected. Needs at least three classes.
CrossClassResult cross_class_validate(std::span<const corpus::GoldClassRecord> gold,
                                      const ModelFactory& factory, double delta,
                                      openset::Score score, std::uint64_t seed,
                                      double test_fraction = 0.10);

}  // namespace slanglex::slangclass
