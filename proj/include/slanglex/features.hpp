#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slanglex/morphology.hpp"

namespace slanglex::features {

using FeatureMap = std::map<std::string, std::int64_t>;
using SparseRow = std::vector<std::pair<std::size_t, double>>;

/// Joins morphs inside a morpheme n-gram feature.
inline constexpr std::string_view kMorphSeparator = "+";

/// All contiguous byte substrings of length n_min..n_max, with multiplicity.
FeatureMap extract_char_ngrams(std::string_view word, int n_min = 1, int n_max = 5);

/// All contiguous morph subsequences of length n_min..n_max.
FeatureMap extract_morpheme_ngrams(const morphology::Segmentation& seg, int n_min = 1, int n_max = 5);

enum class FeatureKind { CharNgram, MorphemeNgram };

std::string_view to_string(FeatureKind k);

class FeatureVocabulary {
 public:
  FeatureVocabulary() = default;
  FeatureVocabulary(FeatureKind kind, int n_min, int n_max, std::vector<std::string> features);

  /// Keeps the `cap` features with the highest total count over `training`,
  /// ties broken lexicographically.
  static FeatureVocabulary fit(FeatureKind kind, int n_min, int n_max,
                               std::span<const FeatureMap> training, std::size_t cap = 200);

  FeatureKind kind() const { return kind_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  const std::vector<std::string>& features() const { return features_; }
  std::size_t size() const { return features_.size(); }
  std::optional<std::size_t> index(std::string_view feature) const;

  /// Column-sorted counts of in-vocabulary features; others are dropped.
  SparseRow vectorize(const FeatureMap& map) const;

 private:
  FeatureKind kind_ = FeatureKind::CharNgram;
  int n_min_ = 1;
  int n_max_ = 5;
  std::vector<std::string> features_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace slanglex::features
