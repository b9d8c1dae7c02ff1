#pragma once

// Reference computations written independently of the library, used to check
// its results. Each one favours the obvious brute-force formulation over speed.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slanglex/corpus.hpp"

namespace oracle {

// --- MDL ------------------------------------------------------------------

/// Every way to cut `word` into non-empty contiguous pieces (2^(n-1) of them).
std::vector<std::vector<std::string>> all_segmentations(const std::string& word);

/// Two-part code length of a whole-lexicon segmentation, from the formulas:
/// sum over morph types of (|m|+1) log2(A+1) + (2 floor(log2 c) + 1), plus
/// N log2 N - sum c log2 c, plus penalty per boundary.
double mdl_cost(const std::vector<std::vector<std::string>>& segmentation,
                const std::vector<std::int64_t>& word_counts, int alphabet_size, double penalty);

struct MdlOptimum {
  double cost = 0.0;
  std::vector<std::string> words;                               // distinct, lowercase
  std::vector<std::vector<std::vector<std::string>>> optima;    // every minimising assignment
};

/// Exhaustive search over the product of all per-word segmentations.
MdlOptimum mdl_exhaustive(const std::vector<std::string>& words, double penalty = 0.0);

// --- calculus ----------------------------------------------------------------

/// Central-difference gradient of f at x with step h.
std::vector<double> numeric_gradient(const std::function<double(const std::vector<double>&)>& f,
                                     std::vector<double> x, double h);

/// ||a - b|| / max(||a|| + ||b||, 1e-12).
double relative_error(const std::vector<double>& a, const std::vector<double>& b);

// --- classification metrics -------------------------------------------------

/// counts[i][j] = #{k : truth[k] == labels[i] && pred[k] == labels[j]}, by a full scan per cell.
std::vector<std::vector<std::int64_t>> confusion(const std::vector<std::string>& truth,
                                                 const std::vector<std::string>& pred,
                                                 const std::vector<std::string>& labels);

/// Support-weighted F1 from first principles (zero-support or zero-prediction F1 is 0).
double weighted_f1(const std::vector<std::string>& truth, const std::vector<std::string>& pred);

/// Standard normal CDF values at tabulated points (x, Phi(x)).
const std::vector<std::pair<double, double>>& normal_table();

// --- similarity --------------------------------------------------------------

double cosine(const std::vector<double>& u, const std::vector<double>& v);

/// Full scan: every other token ranked by cosine, ties by token.
std::vector<std::pair<std::string, double>> nearest(const std::vector<std::string>& tokens,
                                                    const std::vector<std::vector<double>>& vectors,
                                                    const std::string& query, std::size_t k);

// --- permutation test -------------------------------------------------------

/// Two-sided exact p-value by enumerating every subset of size |a| as group a
/// (bitmask walk); ties within 1e-12 of the observed |difference| count.
double exact_permutation_p(const std::vector<double>& a, const std::vector<double>& b);

// --- synthetic data ------------------------------------------------------------

/// Gold records with class-distinctive surfaces: dotted capitals
/// (Alphabetism), merges of two seed words (Blend), truncations of a seed word
/// (Clipping) and hyphenated echo pairs (Reduplicative).
std::vector<slanglex::corpus::GoldClassRecord> synthetic_gold(std::uint64_t seed, std::size_t per_class = 100);

/// Sentences where X and Y share contexts and Z lives in disjoint ones.
std::vector<std::vector<std::string>> identical_context_corpus(std::uint64_t seed, std::size_t sentences = 600);

}  // namespace oracle
