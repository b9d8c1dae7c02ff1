#include "slanglex/features.hpp"

#include <algorithm>

#include "slanglex/error.hpp"

namespace slanglex::features {

namespace {

void check_range(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw Error("n-gram range must satisfy 1 <= n_min <= n_max");
}

}  // namespace

FeatureMap extract_char_ngrams(std::string_view word, int n_min, int n_max) {
  check_range(n_min, n_max);
  if (word.empty()) throw Error("cannot extract n-grams from an empty word");
  FeatureMap out;
  for (std::size_t n = static_cast<std::size_t>(n_min); n <= static_cast<std::size_t>(n_max); ++n) {
    for (std::size_t i = 0; i + n <= word.size(); ++i) ++out[std::string(word.substr(i, n))];
  }
  return out;
}

FeatureMap extract_morpheme_ngrams(const morphology::Segmentation& seg, int n_min, int n_max) {
  check_range(n_min, n_max);
  FeatureMap out;
  const auto& m = seg.morphs;
  for (std::size_t n = static_cast<std::size_t>(n_min); n <= static_cast<std::size_t>(n_max); ++n) {
    for (std::size_t i = 0; i + n <= m.size(); ++i) {
      std::string f = m[i];
      for (std::size_t j = i + 1; j < i + n; ++j) {
        f += kMorphSeparator;
        f += m[j];
      }
      ++out[f];
    }
  }
  return out;
}

std::string_view to_string(FeatureKind k) { return k == FeatureKind::CharNgram ? "char" : "morph"; }

FeatureVocabulary::FeatureVocabulary(FeatureKind kind, int n_min, int n_max,
                                     std::vector<std::string> features)
    : kind_(kind), n_min_(n_min), n_max_(n_max), features_(std::move(features)) {
  check_range(n_min, n_max);
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (!index_.emplace(features_[i], i).second) throw Error("duplicate feature '" + features_[i] + "'");
  }
}

FeatureVocabulary FeatureVocabulary::fit(FeatureKind kind, int n_min, int n_max,
                                         std::span<const FeatureMap> training, std::size_t cap) {
  FeatureMap totals;
  for (const auto& map : training) {
    for (const auto& [f, c] : map) totals[f] += c;
  }
  std::vector<std::pair<std::string, std::int64_t>> ranked(totals.begin(), totals.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > cap) ranked.resize(cap);
  std::vector<std::string> features;
  features.reserve(ranked.size());
  for (auto& [f, c] : ranked) features.push_back(std::move(f));
  return FeatureVocabulary(kind, n_min, n_max, std::move(features));
}

std::optional<std::size_t> FeatureVocabulary::index(std::string_view feature) const {
  auto it = index_.find(std::string(feature));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseRow FeatureVocabulary::vectorize(const FeatureMap& map) const {
  SparseRow row;
  for (const auto& [f, c] : map) {
    if (auto col = index(f)) row.emplace_back(*col, static_cast<double>(c));
  }
  std::sort(row.begin(), row.end());
  return row;
}

}  // namespace slanglex::features
