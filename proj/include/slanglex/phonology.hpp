#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace slanglex::phonology {

enum class Manner { Stop, Fricative, Vowel, Nasal, Liquid, Affricate, Aspirate, Semivowel };

inline constexpr std::array<Manner, 8> kManners = {
    Manner::Stop,   Manner::Fricative, Manner::Vowel,    Manner::Nasal,
    Manner::Liquid, Manner::Affricate, Manner::Aspirate, Manner::Semivowel};

std::string_view to_string(Manner m);

/// The 39 ARPAbet symbols, without stress digits.
std::span<const std::string_view> inventory();

/// Strips a trailing stress digit (AH0 -> AH).
std::string_view strip_stress(std::string_view symbol);

/// Articulation manner of an ARPAbet symbol. Throws Error for unknown symbols.
Manner manner_of(std::string_view symbol);

struct Phoneme {
  std::string symbol;
  Manner manner;

  bool operator==(const Phoneme&) const = default;
};

Phoneme make_phoneme(std::string_view symbol);

enum class Source { LexiconLookup, RuleFallback };

struct PhonemeSequence {
  std::string word;
  std::vector<Phoneme> phonemes;
  Source source = Source::LexiconLookup;

  /// Space-joined symbols, e.g. "W UH D IY".
  std::string symbols() const;
};

/// Word -> pronunciation table in the CMU dictionary file format. Lookup is
/// case-insensitive; alternate pronunciations `WORD(2)` are ignored.
class PronouncingTable {
 public:
  static PronouncingTable read(std::istream& in);
  static PronouncingTable load(const std::filesystem::path& path);

  void add(std::string_view word, std::vector<std::string> phonemes);
  const std::vector<std::string>* find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

/// Deterministic longest-match letter-cluster rules for out-of-table words.
class RuleTable {
 public:
  static RuleTable read(std::istream& in);
  static RuleTable load(const std::filesystem::path& path);

  void add(std::string cluster, bool token_final, std::vector<std::string> phonemes);
  /// Converts one token; non-letters are skipped. Empty when nothing converts.
  std::vector<std::string> apply(std::string_view token) const;
  std::size_t size() const { return rules_.size(); }

 private:
  struct Rule {
    std::string cluster;
    bool token_final;
    std::vector<std::string> phonemes;
  };
  std::vector<Rule> rules_;  // longest cluster first
};

/// Tokens are split on whitespace and hyphens, converted independently and
/// concatenated. The sequence is flagged RuleFallback if any token needed the
/// rules. Throws Error when the word has no alphabetic character.
PhonemeSequence to_phonemes(std::string_view word, const PronouncingTable& table,
                            const RuleTable& rules);

using Distribution = std::map<std::string, double>;

/// Phoneme token frequencies over the corpus, one count per phoneme occurrence
/// in each headword's pronunciation.
Distribution phoneme_distribution(std::span<const PhonemeSequence> corpus);

struct OddsRatioRow {
  std::string phoneme;
  double p_slang = 0.0;
  double p_std = 0.0;
  double ratio = 0.0;
  int rank = 0;
};

struct OddsRatioReport {
  std::vector<OddsRatioRow> rows;  // by rank
  double smoothing = 0.0;
};

/// ratio = (p_slang + s) / (p_std + s) over the union of both supports;
/// descending, ties alphabetical.
OddsRatioReport odds_ratio_ranking(const Distribution& p_slang, const Distribution& p_std,
                                   double smoothing = 1e-6);

enum class Position { First, Final };

struct MannerCounts {
  std::array<std::int64_t, 8> counts{};
  std::int64_t total = 0;
  std::int64_t operator[](Manner m) const { return counts[static_cast<std::size_t>(m)]; }
};

struct MannerDistribution {
  std::array<double, 8> probabilities{};
  std::int64_t sample_size = 0;
  double operator[](Manner m) const { return probabilities[static_cast<std::size_t>(m)]; }
};

MannerCounts positional_manner_counts(std::span<const PhonemeSequence> corpus, Position position);
MannerDistribution positional_manner_distribution(std::span<const PhonemeSequence> corpus,
                                                  Position position);

/// CSV rows: phoneme,p_slang,p_std,odds_ratio,rank
void write_odds_csv(std::ostream& out, const OddsRatioReport& report);

}  // namespace slanglex::phonology
