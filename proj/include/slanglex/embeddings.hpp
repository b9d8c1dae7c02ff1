#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slanglex/corpus.hpp"

namespace slanglex::embeddings {

using Sentence = std::vector<std::string>;

/// Lowercases and splits on anything but letters, digits, underscores,
/// non-ASCII bytes and word-internal apostrophes.
std::vector<std::string> tokenize(std::string_view text);

/// Tokenized usage examples. Known multiword headwords are joined greedily,
/// longest match first, into one underscore token ("med school" -> med_school).
std::vector<Sentence> build_usage_corpus(std::span<const corpus::LexiconEntry> entries);

/// Underscore-joined token for a headword ("dead presidents" -> dead_presidents).
std::string headword_token(std::string_view headword);

class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::span<const double> vector(std::size_t i) const;
  std::int64_t count(std::size_t i) const { return counts_[i]; }
  std::optional<std::size_t> find(std::string_view token) const;
  /// Exact lookup, then lowercase.
  std::optional<std::size_t> find_folded(std::string_view token) const;
  std::span<const double> at(std::string_view token) const;

  /// Throws on dimension mismatch, duplicate token or non-finite value.
  void add(std::string token, std::span<const double> values, std::int64_t count = 0);
  void scale(double factor);

  /// Text vector format: `<vocab> <dim>` then `token v1 ... vd` per line.
  void write_text(std::ostream& out) const;
  static EmbeddingTable read_text(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static EmbeddingTable load(const std::filesystem::path& path);

  bool operator==(const EmbeddingTable&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> tokens_;
  std::vector<std::int64_t> counts_;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct TrainingConfig {
  int dimension = 100;
  int window = 5;
  int negatives = 5;
  int epochs = 5;
  double initial_lr = 0.025;
  int min_count = 5;
  double subsample_threshold = 1e-3;  // <= 0 disables subsampling
  std::uint64_t seed = 1;
};

struct TrainingResult {
  EmbeddingTable table;  // input vectors
  std::vector<double> epoch_loss;  // mean per-pair SGNS loss
};

/// Skip-gram with negative sampling, single-threaded and deterministic per
/// seed. Negatives come from the unigram^0.75 distribution; the learning rate
/// decays linearly to 1e-4 of its initial value. Throws when no token reaches
/// min_count.
TrainingResult train_skipgram(std::span<const Sentence> corpus, const TrainingConfig& config);

// Per-pair objective for one (input, context) pair with sampled negatives:
//   L = -log s(u_pos . v) - sum_n log s(-u_n . v)
double sgns_pair_loss(std::span<const double> input, std::span<const double> positive,
                      std::span<const std::span<const double>> negatives);

struct PairGradient {
  std::vector<double> input;
  std::vector<double> positive;
  std::vector<std::vector<double>> negatives;
};

PairGradient sgns_pair_gradient(std::span<const double> input, std::span<const double> positive,
                                std::span<const std::span<const double>> negatives);

/// dot(u, v) / (|u| |v|). Throws on length mismatch or a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

/// Exact top-k by cosine, excluding the query; ties lexicographic.
std::vector<std::pair<std::string, double>> nearest(const EmbeddingTable& table,
                                                    std::string_view token, std::size_t k);

}  // namespace slanglex::embeddings
