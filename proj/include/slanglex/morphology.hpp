#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slanglex::morphology {

// Two-part code length of a morph lexicon, in bits.
//   model  = sum over morph types of (|m| + 1) * log2(A + 1) + gamma(count)
//   corpus = N log2 N - sum_m c_m log2 c_m     (unigram ML likelihood)
// where A is the alphabet size, N the number of morph tokens and gamma the
// Elias-gamma code length 2 floor(log2 c) + 1. An optional per-boundary
// penalty biases against splitting.
struct CodeLength {
  double model_bits = 0.0;
  double corpus_bits = 0.0;
  double penalty_bits = 0.0;
  double total() const { return model_bits + corpus_bits + penalty_bits; }
};

double morph_spelling_bits(std::size_t length, int alphabet_size);
double count_bits(std::int64_t count);

CodeLength code_length(const std::map<std::string, std::int64_t>& morph_counts, int alphabet_size,
                       double split_penalty = 0.0, std::int64_t boundaries = 0);

struct SegmenterParams {
  double split_penalty = 0.0;
  int max_iters = 20;
  std::uint64_t seed = 0;
};

class SegmenterModel {
 public:
  SegmenterModel() = default;
  SegmenterModel(std::map<std::string, std::int64_t> morph_counts, int alphabet_size,
                 double split_penalty, std::int64_t boundaries);

  const std::map<std::string, std::int64_t>& morph_counts() const { return counts_; }
  int alphabet_size() const { return alphabet_size_; }
  double split_penalty() const { return split_penalty_; }
  std::int64_t boundaries() const { return boundaries_; }
  std::int64_t token_count() const { return tokens_; }
  double total_code_length() const { return total_bits_; }

  /// Objective value after each training pass (first entry: unsplit corpus).
  const std::vector<double>& cost_history() const { return history_; }

  /// Cost in bits of emitting `morph` as one unit. Unseen morphs are spelled
  /// out character by character on top of the cost of a singleton.
  double morph_cost(std::string_view morph) const;

  /// `morph<TAB>count` lines behind a `#` header carrying the scalar fields.
  void write_tsv(std::ostream& out) const;
  static SegmenterModel read_tsv(std::istream& in);

 private:
  friend SegmenterModel train_segmenter(std::span<const std::string>, const SegmenterParams&);

  std::map<std::string, std::int64_t> counts_;
  int alphabet_size_ = 1;
  double split_penalty_ = 0.0;
  std::int64_t boundaries_ = 0;
  std::int64_t tokens_ = 0;
  double total_bits_ = 0.0;
  std::vector<double> history_;
};

/// Greedy recursive binary splitting over word types (repeats count as
/// frequency). A word's resegmentation is kept only if the objective does not
/// increase, so the cost history is non-increasing. Throws on empty input.
SegmenterModel train_segmenter(std::span<const std::string> words, const SegmenterParams& params = {});

struct Segmentation {
  std::string word;
  std::vector<std::string> morphs;  // concatenation == word

  bool operator==(const Segmentation&) const = default;
};

/// Minimum-cost segmentation by dynamic programming over split points. Costs
/// are computed on the lowercased word; returned morphs are slices of the
/// original spelling. Ties go to fewer morphs, then the longest first morph.
Segmentation segment(const SegmenterModel& model, std::string_view word);

enum class AffixSide { Prefix, Suffix };

struct AffixDistribution {
  AffixSide side = AffixSide::Prefix;
  std::vector<std::pair<std::string, double>> entries;  // descending, ties lexicographic
  std::vector<double> cumulative;                       // cumulative[i] = mass of top i+1

  /// Mass covered by the top-k entries (k clamped to the listed entries).
  double mass_at(std::size_t k) const;
};

/// Ranks `counts` as probabilities over `total` observations and keeps the top k.
AffixDistribution top_affixes(const std::map<std::string, std::int64_t>& counts, std::int64_t total,
                              AffixSide side, std::size_t k);

/// Prefix = first morph, suffix = last morph (lowercased), over all words.
AffixDistribution affix_distribution(std::span<const Segmentation> segmentations, AffixSide side,
                                     std::size_t k = 25);

/// CSV rows: rank,affix,probability,cumulative_mass
void write_affix_csv(std::ostream& out, const AffixDistribution& dist);

}  // namespace slanglex::morphology
