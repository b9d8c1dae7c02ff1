#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slanglex/embeddings.hpp"
#include "slanglex/labels.hpp"
#include "slanglex/stats.hpp"

namespace slanglex::social {

// ---------------------------------------------------------------------------
// Subject classification

enum class Metric { Cosine, Euclidean };

struct Reference {
  std::string token;
  std::vector<double> vector;
  SubjectLabel label;
};

struct KnnModel {
  std::size_t k = 5;
  std::vector<Reference> reference;
  Metric metric = Metric::Cosine;
};

using SubjectDistribution = std::array<double, kSubjects.size()>;

/// Vote fractions among the k nearest references (by cosine, or Euclidean
/// distance when so configured); similarity ties go to the lexicographically
/// smaller reference token.
SubjectDistribution knn_predict_proba(const KnnModel& model, std::span<const double> vector);

/// Reference set from labelled words present in the embedding table.
KnnModel build_knn(const embeddings::EmbeddingTable& table,
                   std::span<const std::pair<std::string, SubjectLabel>> labelled, std::size_t k = 5,
                   Metric metric = Metric::Cosine);

struct SubjectEvaluation {
  stats::ClassificationReport report;
  std::size_t evaluated = 0;
  std::size_t missing = 0;  // test words absent from the embedding table
};

/// Closed-set argmax evaluation; words missing from the table are counted and
/// skipped. Throws when nothing is evaluable.
SubjectEvaluation evaluate_subject_model(const KnnModel& model,
                                         std::span<const std::pair<std::string, SubjectLabel>> test,
                                         const embeddings::EmbeddingTable& table);

// ---------------------------------------------------------------------------
// Lexicons

enum class Gender { Male, Female, Unknown };

std::string_view to_string(Gender g);

/// Case-insensitive name -> gender map; absent names are Unknown.
class GenderLexicon {
 public:
  /// CSV `name,gender` with gender in {m, f, male, female} (any case).
  static GenderLexicon load(const std::filesystem::path& path);
  static GenderLexicon read(std::istream& in);

  void add(std::string_view name, Gender g);
  Gender lookup(std::string_view name) const;
  std::size_t size() const { return names_.size(); }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Gender> names_;
};

struct BiasLexicons {
  std::vector<std::string> prejudice_terms;
  std::vector<std::string> religious_terms;
  std::vector<std::string> religious_prejudices;
  std::vector<std::string> occupations;
  std::vector<std::pair<std::string, std::string>> gender_pairs;  // (male, female)

  /// Reads prejudice.txt, religions.txt, religious_prejudices.txt,
  /// occupations.txt (one term per line) and gender_pairs.txt (male and
  /// female word per line). Lists are deduplicated in file order.
  static BiasLexicons load(const std::filesystem::path& dir);
};

/// One term per line; `#` comments and blank lines skipped; duplicates dropped.
std::vector<std::string> read_term_list(const std::filesystem::path& path);

/// Prejudice terms used when no lexicon directory is supplied.
std::vector<std::string> default_prejudice_terms();

// ---------------------------------------------------------------------------
// Bias metrics

struct Direction {
  std::vector<double> unit;
  std::size_t pairs_used = 0;
  std::size_t pairs_missing = 0;
};

/// Mean of normalised (female - male) differences over in-vocabulary pairs,
/// renormalised. Throws when no pair is usable or the mean vanishes.
Direction gender_direction(const embeddings::EmbeddingTable& table,
                           std::span<const std::pair<std::string, std::string>> pairs);

struct DirectBias {
  double value = 0.0;
  std::size_t evaluated = 0;
  std::size_t missing = 0;
};

/// Mean of |cos(w, g)|^c over neutral words found in the table.
DirectBias direct_bias(const embeddings::EmbeddingTable& table,
                       std::span<const std::string> neutral_words, std::span<const double> g,
                       double c = 1.0);

/// Signed cosine onto g (positive = female pole), descending; ties lexicographic.
std::vector<std::pair<std::string, double>> occupation_projections(
    const embeddings::EmbeddingTable& table, std::span<const std::string> occupations,
    std::span<const double> g);

struct SexPrejudice {
  double value = 0.0;
  std::vector<std::string> used_terms;
  std::vector<std::string> missing_terms;
};

/// Mean cosine between w and the prejudice terms present in the table.
SexPrejudice sexprej(const embeddings::EmbeddingTable& table, std::string_view word,
                     std::span<const std::string> terms);

struct GroupScore {
  double mean = 0.0;
  std::size_t n = 0;
};

struct PermutationTest {
  double observed_difference = 0.0;  // mean(a) - mean(b)
  double p_value = 1.0;
  bool exact = false;        // every relabelling enumerated
  std::size_t resamples = 0; // relabellings scored
};

// Two-sided permutation test on the difference of group means. The p-value is
// the fraction of relabellings whose |difference| reaches the observed one;
// the observed labelling counts among them. With C(n_a + n_b, n_a) <=
// max_permutations every relabelling is enumerated, else max_permutations
// random ones are drawn and p = (1 + hits) / (1 + draws).
PermutationTest permutation_test(std::span<const double> a, std::span<const double> b,
                                 std::size_t max_permutations = 10000, std::uint64_t seed = 0);

struct NameComparison {
  GroupScore female;
  GroupScore male;
  PermutationTest test;
  std::size_t unknown_gender = 0;
  std::size_t missing = 0;
  std::vector<std::pair<std::string, double>> scores;  // per scored name
};

/// Mean SEXPREJ of female vs male names. Throws when a group has fewer than two names.
NameComparison name_prejudice_comparison(const embeddings::EmbeddingTable& table,
                                         std::span<const std::string> names,
                                         const GenderLexicon& genders,
                                         std::span<const std::string> terms,
                                         std::size_t permutations = 10000, std::uint64_t seed = 0);

struct ReligiousMatrix {
  std::vector<std::string> religions;   // rows, in-vocabulary only
  std::vector<std::string> prejudices;  // columns, in-vocabulary only
  std::vector<std::vector<double>> raw;
  std::vector<std::vector<double>> standardized;  // per column: mean 0, sample std 1
  double overall_mean = 0.0;                      // over raw scores
  std::vector<std::string> missing;
};

/// raw(r, p) = cos(r, p); each prejudice column standardized over religions.
/// Throws with fewer than two religions or a constant column.
ReligiousMatrix religious_prejudice_matrix(const embeddings::EmbeddingTable& table,
                                           std::span<const std::string> religions,
                                           std::span<const std::string> prejudices);

/// CSV: religion,<prejudice...>
void write_matrix_csv(std::ostream& out, const ReligiousMatrix& m, bool standardized);

}  // namespace slanglex::social
