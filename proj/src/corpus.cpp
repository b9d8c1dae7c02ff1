#include "slanglex/corpus.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slanglex/error.hpp"
#include "slanglex/random.hpp"
#include "slanglex/text.hpp"

namespace slanglex::corpus {

using nlohmann::json;

std::string LexiconEntry::key() const { return text::to_lower(text::trim(headword)); }

void validate(const LexiconEntry& entry) {
  if (text::trim(entry.headword).empty()) throw Error("headword is empty");
  if (entry.upvotes < 0) throw Error("upvotes is negative");
  if (entry.downvotes < 0) throw Error("downvotes is negative");
  for (const auto& ex : entry.examples) {
    if (ex.empty()) throw Error("empty usage example");
  }
}

void StandardLexicon::add(const std::string& word, std::optional<std::string> definition) {
  words.insert(word);
  if (definition) definitions[word].push_back(std::move(*definition));
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::vector<std::string> string_list(const json& obj, const char* field, std::size_t line) {
  std::vector<std::string> out;
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) throw SchemaError(line, field, "expected an array of strings");
  for (const auto& v : *it) {
    if (!v.is_string()) throw SchemaError(line, field, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::int64_t vote_count(const json& obj, const char* field, std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return 0;
  if (!it->is_number_integer()) throw SchemaError(line, field, "expected an integer");
  const auto v = it->get<std::int64_t>();
  if (v < 0) throw SchemaError(line, field, "must be non-negative, got " + std::to_string(v));
  return v;
}

LexiconEntry parse_entry(const std::string& raw, std::size_t line) {
  json obj;
  try {
    obj = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw SchemaError(line, "<json>", e.what());
  }
  if (!obj.is_object()) throw SchemaError(line, "<json>", "expected an object");

  LexiconEntry e;
  auto hw = obj.find("headword");
  if (hw == obj.end() || !hw->is_string()) throw SchemaError(line, "headword", "missing");
  e.headword = hw->get<std::string>();
  if (text::trim(e.headword).empty()) throw SchemaError(line, "headword", "empty after trimming");
  e.definitions = string_list(obj, "definitions", line);
  e.examples = string_list(obj, "examples", line);
  for (const auto& ex : e.examples) {
    if (ex.empty()) throw SchemaError(line, "examples", "empty usage example");
  }
  e.upvotes = vote_count(obj, "upvotes", line);
  e.downvotes = vote_count(obj, "downvotes", line);

  if (auto it = obj.find("subjects"); it != obj.end() && !it->is_null()) {
    std::set<SubjectLabel> subjects;
    for (const auto& s : string_list(obj, "subjects", line)) {
      auto label = parse_subject(s);
      if (!label) throw SchemaError(line, "subjects", "unknown subject '" + s + "'");
      subjects.insert(*label);
    }
    e.subjects = std::move(subjects);
  }
  if (auto it = obj.find("year_added"); it != obj.end() && !it->is_null()) {
    if (!it->is_number_integer()) throw SchemaError(line, "year_added", "expected an integer");
    e.year_added = it->get<int>();
  }
  return e;
}

}  // namespace

std::vector<LexiconEntry> read_slang_jsonl(std::istream& in) {
  std::vector<LexiconEntry> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (text::trim(raw).empty()) continue;
    out.push_back(parse_entry(raw, line));
  }
  return out;
}

std::vector<LexiconEntry> load_slang_jsonl(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_slang_jsonl(in);
}

void write_slang_jsonl(std::ostream& out, std::span<const LexiconEntry> entries) {
  for (const auto& e : entries) {
    json obj = {{"headword", e.headword},
                {"definitions", e.definitions},
                {"examples", e.examples},
                {"upvotes", e.upvotes},
                {"downvotes", e.downvotes}};
    if (e.subjects) {
      json subjects = json::array();
      for (auto s : *e.subjects) subjects.push_back(std::string(to_string(s)));
      obj["subjects"] = std::move(subjects);
    }
    if (e.year_added) obj["year_added"] = *e.year_added;
    out << obj.dump() << '\n';
  }
}

void save_slang_jsonl(const std::filesystem::path& path, std::span<const LexiconEntry> entries) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_slang_jsonl(out, entries);
}

StandardLexicon read_standard_tsv(std::istream& in) {
  StandardLexicon lex;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty() || raw.front() == '#') continue;
    const auto tab = raw.find('\t');
    const std::string word(text::trim(std::string_view(raw).substr(0, tab)));
    if (word.empty()) throw SchemaError(line, "word", "empty");
    if (tab == std::string::npos) {
      lex.add(word);
    } else {
      lex.add(word, std::string(text::trim(std::string_view(raw).substr(tab + 1))));
    }
  }
  return lex;
}

StandardLexicon load_standard_tsv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_standard_tsv(in);
}

std::variant<std::vector<LexiconEntry>, StandardLexicon> load_lexicon(
    const std::filesystem::path& path, LexiconFormat format) {
  if (format == LexiconFormat::SlangJsonl) return load_slang_jsonl(path);
  return load_standard_tsv(path);
}

std::vector<GoldClassRecord> read_gold_tsv(std::istream& in) {
  std::vector<GoldClassRecord> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty() || raw.front() == '#') continue;
    const auto cols = text::split_exact(raw, '\t');
    if (cols.size() < 2) throw SchemaError(line, "label", "missing class column");
    GoldClassRecord r;
    r.word = std::string(text::trim(cols[0]));
    if (r.word.empty()) throw SchemaError(line, "word", "empty");
    auto label = parse_slang_class(cols[1]);
    if (!label) throw SchemaError(line, "label", "unknown class '" + cols[1] + "'");
    r.label = *label;
    if (cols.size() > 2) {
      for (auto& c : text::split_exact(cols[2], '|')) {
        auto t = text::trim(c);
        if (!t.empty()) r.components.emplace_back(t);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GoldClassRecord> load_gold_tsv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_gold_tsv(in);
}

void write_gold_tsv(std::ostream& out, std::span<const GoldClassRecord> records) {
  for (const auto& r : records) {
    out << r.word << '\t' << to_string(r.label);
    if (!r.components.empty()) {
      out << '\t';
      for (std::size_t i = 0; i < r.components.size(); ++i) {
        if (i) out << '|';
        out << r.components[i];
      }
    }
    out << '\n';
  }
}

std::vector<LexiconEntry> filter_by_votes(std::span<const LexiconEntry> entries,
                                          std::int64_t min_votes) {
  if (min_votes < 0) throw Error("min_votes must be non-negative");
  std::vector<LexiconEntry> out;
  for (const auto& e : entries) {
    if (e.votes() >= min_votes) out.push_back(e);
  }
  return out;
}

DatasetSplit split_gold(std::span<const GoldClassRecord> records, double test_fraction,
                        std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("test_fraction must lie in (0, 1)");
  }
  std::array<std::vector<std::size_t>, kSlangClasses.size()> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) {
    by_class[static_cast<std::size_t>(records[i].label)].push_back(i);
  }

  DatasetSplit split;
  split.seed = seed;
  Rng rng(seed);
  std::vector<bool> is_test(records.size(), false);
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    auto& idx = by_class[c];
    if (idx.empty()) continue;
    if (idx.size() < 2) {
      throw Error("class " + std::string(to_string(kSlangClasses[c])) +
                  " has fewer than 2 records; cannot split");
    }
    auto n_test = static_cast<std::size_t>(std::llround(static_cast<double>(idx.size()) * test_fraction));
    n_test = std::clamp<std::size_t>(n_test, 1, idx.size() - 1);
    rng.shuffle(idx.begin(), idx.end());
    for (std::size_t k = 0; k < n_test; ++k) is_test[idx[k]] = true;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    (is_test[i] ? split.test : split.train).push_back(records[i]);
  }
  return split;
}

}  // namespace slanglex::corpus
