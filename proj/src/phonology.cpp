#include "slanglex/phonology.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "slanglex/error.hpp"
#include "slanglex/report.hpp"
#include "slanglex/text.hpp"

namespace slanglex::phonology {

namespace {

struct SymbolManner {
  std::string_view symbol;
  Manner manner;
};

// CMUDict manner classes.
constexpr std::array<SymbolManner, 39> kTable = {{
    {"B", Manner::Stop},       {"D", Manner::Stop},       {"G", Manner::Stop},
    {"K", Manner::Stop},       {"P", Manner::Stop},       {"T", Manner::Stop},
    {"DH", Manner::Fricative}, {"F", Manner::Fricative},  {"S", Manner::Fricative},
    {"SH", Manner::Fricative}, {"TH", Manner::Fricative}, {"V", Manner::Fricative},
    {"Z", Manner::Fricative},  {"ZH", Manner::Fricative}, {"AA", Manner::Vowel},
    {"AE", Manner::Vowel},     {"AH", Manner::Vowel},     {"AO", Manner::Vowel},
    {"AW", Manner::Vowel},     {"AY", Manner::Vowel},     {"EH", Manner::Vowel},
    {"ER", Manner::Vowel},     {"EY", Manner::Vowel},     {"IH", Manner::Vowel},
    {"IY", Manner::Vowel},     {"OW", Manner::Vowel},     {"OY", Manner::Vowel},
    {"UH", Manner::Vowel},     {"UW", Manner::Vowel},     {"M", Manner::Nasal},
    {"N", Manner::Nasal},      {"NG", Manner::Nasal},     {"L", Manner::Liquid},
    {"R", Manner::Liquid},     {"CH", Manner::Affricate}, {"JH", Manner::Affricate},
    {"HH", Manner::Aspirate},  {"W", Manner::Semivowel},  {"Y", Manner::Semivowel},
}};

constexpr std::array<std::string_view, 39> kInventory = [] {
  std::array<std::string_view, 39> out{};
  for (std::size_t i = 0; i < kTable.size(); ++i) out[i] = kTable[i].symbol;
  return out;
}();

constexpr std::array<std::string_view, 8> kMannerNames = {
    "Stop", "Fricative", "Vowel", "Nasal", "Liquid", "Affricate", "Aspirate", "Semivowel"};

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace

std::string_view to_string(Manner m) { return kMannerNames[static_cast<std::size_t>(m)]; }

std::span<const std::string_view> inventory() { return kInventory; }

std::string_view strip_stress(std::string_view symbol) {
  while (!symbol.empty() && symbol.back() >= '0' && symbol.back() <= '9') symbol.remove_suffix(1);
  return symbol;
}

Manner manner_of(std::string_view symbol) {
  const std::string key = upper(strip_stress(symbol));
  for (const auto& entry : kTable) {
    if (entry.symbol == key) return entry.manner;
  }
  throw Error("unknown ARPAbet symbol '" + std::string(symbol) + "'");
}

Phoneme make_phoneme(std::string_view symbol) {
  const std::string key = upper(strip_stress(symbol));
  return Phoneme{key, manner_of(key)};
}

std::string PhonemeSequence::symbols() const {
  std::string out;
  for (const auto& p : phonemes) {
    if (!out.empty()) out += ' ';
    out += p.symbol;
  }
  return out;
}

PronouncingTable PronouncingTable::read(std::istream& in) {
  PronouncingTable table;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.starts_with(";;;")) continue;
    if (auto hash = raw.find(" #"); hash != std::string::npos) raw.resize(hash);
    auto fields = text::split_any(raw, " \t\r");
    if (fields.empty()) continue;
    if (fields.size() < 2) throw SchemaError(line, "phonemes", "entry has no pronunciation");
    std::string word = fields[0];
    if (word.ends_with(')')) {
      if (auto paren = word.rfind('('); paren != std::string::npos && paren > 0) continue;
    }
    std::vector<std::string> phonemes;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        phonemes.push_back(make_phoneme(fields[i]).symbol);
      } catch (const Error& e) {
        throw SchemaError(line, "phonemes", e.what());
      }
    }
    table.add(word, std::move(phonemes));
  }
  return table;
}

PronouncingTable PronouncingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read(in);
}

void PronouncingTable::add(std::string_view word, std::vector<std::string> phonemes) {
  entries_.try_emplace(text::to_lower(word), std::move(phonemes));
}

const std::vector<std::string>* PronouncingTable::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

RuleTable RuleTable::read(std::istream& in) {
  RuleTable rules;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty() || raw.front() == '#') continue;
    const auto tab = raw.find('\t');
    if (tab == std::string::npos) throw SchemaError(line, "phonemes", "expected cluster<TAB>phonemes");
    std::string cluster = text::to_lower(text::trim(std::string_view(raw).substr(0, tab)));
    bool token_final = false;
    if (cluster.ends_with('$')) {
      token_final = true;
      cluster.pop_back();
    }
    if (cluster.empty()) throw SchemaError(line, "cluster", "empty");
    std::vector<std::string> phonemes;
    for (const auto& sym : text::split_any(std::string_view(raw).substr(tab + 1), " \t")) {
      try {
        phonemes.push_back(make_phoneme(sym).symbol);
      } catch (const Error& e) {
        throw SchemaError(line, "phonemes", e.what());
      }
    }
    if (phonemes.empty()) throw SchemaError(line, "phonemes", "rule has no phonemes");
    rules.add(std::move(cluster), token_final, std::move(phonemes));
  }
  return rules;
}

RuleTable RuleTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read(in);
}

void RuleTable::add(std::string cluster, bool token_final, std::vector<std::string> phonemes) {
  Rule rule{std::move(cluster), token_final, std::move(phonemes)};
  // Keep longest-first order; anchored rules precede unanchored ones of equal length.
  auto pos = std::find_if(rules_.begin(), rules_.end(), [&](const Rule& r) {
    if (r.cluster.size() != rule.cluster.size()) return r.cluster.size() < rule.cluster.size();
    return rule.token_final && !r.token_final;
  });
  rules_.insert(pos, std::move(rule));
}

std::vector<std::string> RuleTable::apply(std::string_view token) const {
  std::string letters;
  for (char c : token) {
    if (text::is_alpha(c)) letters += static_cast<char>(c | 0x20);
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < letters.size()) {
    const Rule* match = nullptr;
    for (const auto& r : rules_) {
      if (letters.compare(i, r.cluster.size(), r.cluster) != 0) continue;
      if (r.token_final && i + r.cluster.size() != letters.size()) continue;
      match = &r;
      break;
    }
    if (!match) {
      ++i;  // letter without a rule
      continue;
    }
    out.insert(out.end(), match->phonemes.begin(), match->phonemes.end());
    i += match->cluster.size();
  }
  return out;
}

PhonemeSequence to_phonemes(std::string_view word, const PronouncingTable& table,
                            const RuleTable& rules) {
  PhonemeSequence seq;
  seq.word = std::string(word);
  seq.source = Source::LexiconLookup;
  if (std::none_of(word.begin(), word.end(), text::is_alpha)) {
    throw Error("cannot convert '" + std::string(word) + "': no alphabetic characters");
  }
  for (const auto& token : text::split_any(word, " \t\r\n-")) {
    if (std::none_of(token.begin(), token.end(), text::is_alpha)) continue;
    if (const auto* hit = table.find(token)) {
      for (const auto& sym : *hit) seq.phonemes.push_back(make_phoneme(sym));
      continue;
    }
    seq.source = Source::RuleFallback;
    for (const auto& sym : rules.apply(token)) seq.phonemes.push_back(make_phoneme(sym));
  }
  if (seq.phonemes.empty()) {
    throw Error("cannot convert '" + std::string(word) + "': rules produced no phonemes");
  }
  return seq;
}

Distribution phoneme_distribution(std::span<const PhonemeSequence> corpus) {
  if (corpus.empty()) throw Error("phoneme distribution of an empty corpus");
  std::map<std::string, std::int64_t> counts;
  std::int64_t total = 0;
  for (const auto& seq : corpus) {
    for (const auto& p : seq.phonemes) {
      ++counts[p.symbol];
      ++total;
    }
  }
  if (total == 0) throw Error("phoneme distribution: corpus has no phonemes");
  Distribution out;
  for (const auto& [sym, n] : counts) out[sym] = static_cast<double>(n) / static_cast<double>(total);
  return out;
}

OddsRatioReport odds_ratio_ranking(const Distribution& p_slang, const Distribution& p_std,
                                   double smoothing) {
  if (!(smoothing > 0.0)) throw Error("odds ratio smoothing must be positive");
  std::map<std::string, std::pair<double, double>> joint;
  for (const auto& [sym, p] : p_slang) joint[sym].first = p;
  for (const auto& [sym, p] : p_std) joint[sym].second = p;

  OddsRatioReport report;
  report.smoothing = smoothing;
  for (const auto& [sym, pq] : joint) {
    report.rows.push_back({sym, pq.first, pq.second, (pq.first + smoothing) / (pq.second + smoothing), 0});
  }
  // joint is already alphabetical, so a stable sort keeps alphabetical ties.
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const OddsRatioRow& a, const OddsRatioRow& b) { return a.ratio > b.ratio; });
  for (std::size_t i = 0; i < report.rows.size(); ++i) report.rows[i].rank = static_cast<int>(i + 1);
  return report;
}

MannerCounts positional_manner_counts(std::span<const PhonemeSequence> corpus, Position position) {
  if (corpus.empty()) throw Error("positional manner distribution of an empty corpus");
  MannerCounts out;
  for (const auto& seq : corpus) {
    if (seq.phonemes.empty()) continue;
    const auto& ph = position == Position::First ? seq.phonemes.front() : seq.phonemes.back();
    ++out.counts[static_cast<std::size_t>(ph.manner)];
    ++out.total;
  }
  if (out.total == 0) throw Error("positional manner distribution: no pronunciations");
  return out;
}

MannerDistribution positional_manner_distribution(std::span<const PhonemeSequence> corpus,
                                                  Position position) {
  const auto counts = positional_manner_counts(corpus, position);
  MannerDistribution out;
  out.sample_size = counts.total;
  for (std::size_t i = 0; i < out.probabilities.size(); ++i) {
    out.probabilities[i] = static_cast<double>(counts.counts[i]) / static_cast<double>(counts.total);
  }
  return out;
}

void write_odds_csv(std::ostream& out, const OddsRatioReport& report) {
  out << "phoneme,p_slang,p_std,odds_ratio,rank\n";
  for (const auto& r : report.rows) {
    out << r.phoneme << ',' << report::format_number(r.p_slang) << ','
        << report::format_number(r.p_std) << ',' << report::format_number(r.ratio) << ','
        << r.rank << '\n';
  }
}

}  // namespace slanglex::phonology
