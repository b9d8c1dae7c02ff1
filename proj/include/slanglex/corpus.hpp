#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slanglex/labels.hpp"

namespace slanglex::corpus {

/// One slang headword with its definitions, usage examples and votes.
struct LexiconEntry {
  std::string headword;  // verbatim: case and punctuation carry alphabetism cues
  std::vector<std::string> definitions;
  std::vector<std::string> examples;
  std::int64_t upvotes = 0;
  std::int64_t downvotes = 0;
  std::optional<std::set<SubjectLabel>> subjects;
  std::optional<int> year_added;

  std::int64_t votes() const { return upvotes + downvotes; }
  /// Lowercase-folded headword used for joins.
  std::string key() const;

  bool operator==(const LexiconEntry&) const = default;
};

/// Throws Error when the entry violates its invariants.
void validate(const LexiconEntry& entry);

struct StandardLexicon {
  std::set<std::string> words;
  std::map<std::string, std::vector<std::string>> definitions;

  void add(const std::string& word, std::optional<std::string> definition = std::nullopt);
  bool operator==(const StandardLexicon&) const = default;
};

struct GoldClassRecord {
  std::string word;
  SlangClass label = SlangClass::Alphabetism;
  /// Source word(s) for blends and clippings; empty when not annotated.
  std::vector<std::string> components;

  bool operator==(const GoldClassRecord&) const = default;
};

struct DatasetSplit {
  std::vector<GoldClassRecord> train;
  std::vector<GoldClassRecord> test;
  std::uint64_t seed = 0;
};

enum class LexiconFormat { SlangJsonl, StandardTsv };

// Slang lexicon: JSON lines, one LexiconEntry per line. Field names are listed
// in docs/file-formats.md. Blank lines are skipped.
std::vector<LexiconEntry> read_slang_jsonl(std::istream& in);
std::vector<LexiconEntry> load_slang_jsonl(const std::filesystem::path& path);
void write_slang_jsonl(std::ostream& out, std::span<const LexiconEntry> entries);
void save_slang_jsonl(const std::filesystem::path& path, std::span<const LexiconEntry> entries);

// Standard lexicon: `word<TAB>definition`, repeated lines add definitions, a
// bare word adds the word alone.
StandardLexicon read_standard_tsv(std::istream& in);
StandardLexicon load_standard_tsv(const std::filesystem::path& path);

std::variant<std::vector<LexiconEntry>, StandardLexicon> load_lexicon(
    const std::filesystem::path& path, LexiconFormat format);

// Gold class records: `word<TAB>class[<TAB>component|component...]`.
std::vector<GoldClassRecord> read_gold_tsv(std::istream& in);
std::vector<GoldClassRecord> load_gold_tsv(const std::filesystem::path& path);
void write_gold_tsv(std::ostream& out, std::span<const GoldClassRecord> records);

/// Keeps entries whose upvotes + downvotes reach `min_votes` (inclusive), in order.
std::vector<LexiconEntry> filter_by_votes(std::span<const LexiconEntry> entries,
                                          std::int64_t min_votes = 100);

/// Stratified split: every class present contributes
/// max(1, round(n * test_fraction)) records to the test side, never all of them.
DatasetSplit split_gold(std::span<const GoldClassRecord> records, double test_fraction,
                        std::uint64_t seed);

}  // namespace slanglex::corpus
