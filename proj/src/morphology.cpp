#include "slanglex/morphology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "slanglex/error.hpp"
#include "slanglex/random.hpp"
#include "slanglex/report.hpp"
#include "slanglex/text.hpp"

namespace slanglex::morphology {

namespace {

constexpr double kEps = 1e-9;

double xlog2x(std::int64_t c) {
  return c > 0 ? static_cast<double>(c) * std::log2(static_cast<double>(c)) : 0.0;
}

// Incrementally maintained objective for training.
class MdlState {
 public:
  MdlState(int alphabet_size, double split_penalty)
      : alphabet_size_(alphabet_size), split_penalty_(split_penalty) {}

  void add(const std::string& morph, std::int64_t delta) {
    auto& c = counts_[morph];
    retract(morph.size(), c);
    c += delta;
    tokens_ += delta;
    contribute(morph.size(), c);
    if (c == 0) counts_.erase(morph);
  }

  void add_all(const std::vector<std::string>& morphs, std::int64_t count) {
    for (const auto& m : morphs) add(m, count);
    boundaries_ += count * static_cast<std::int64_t>(morphs.size() - 1);
  }

  void remove_all(const std::vector<std::string>& morphs, std::int64_t count) {
    for (const auto& m : morphs) add(m, -count);
    boundaries_ -= count * static_cast<std::int64_t>(morphs.size() - 1);
  }

  double objective() const {
    return model_bits_ + (xlog2x(tokens_) - sum_xlogx_) +
           split_penalty_ * static_cast<double>(boundaries_);
  }

  // Adds `whole` (count occurrences), splitting recursively while a binary
  // split lowers the objective. Returns the resulting morphs.
  std::vector<std::string> split_recursive(const std::string& whole, std::int64_t count) {
    add(whole, count);
    double best = objective();
    std::size_t best_at = 0;
    add(whole, -count);
    for (std::size_t i = 1; i < whole.size(); ++i) {
      const std::string left = whole.substr(0, i), right = whole.substr(i);
      add(left, count);
      add(right, count);
      boundaries_ += count;
      const double cost = objective();
      boundaries_ -= count;
      add(right, -count);
      add(left, -count);
      if (cost < best - kEps) {
        best = cost;
        best_at = i;
      }
    }
    if (best_at == 0) {
      add(whole, count);
      return {whole};
    }
    const std::string left = whole.substr(0, best_at), right = whole.substr(best_at);
    boundaries_ += count;
    add(right, count);
    auto out = split_recursive(left, count);
    add(right, -count);
    auto tail = split_recursive(right, count);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }

  std::map<std::string, std::int64_t> counts() const {
    return {counts_.begin(), counts_.end()};
  }
  std::int64_t boundaries() const { return boundaries_; }

 private:
  void retract(std::size_t len, std::int64_t c) {
    if (c <= 0) return;
    model_bits_ -= morph_spelling_bits(len, alphabet_size_) + count_bits(c);
    sum_xlogx_ -= xlog2x(c);
  }
  void contribute(std::size_t len, std::int64_t c) {
    if (c <= 0) return;
    model_bits_ += morph_spelling_bits(len, alphabet_size_) + count_bits(c);
    sum_xlogx_ += xlog2x(c);
  }

  int alphabet_size_;
  double split_penalty_;
  std::unordered_map<std::string, std::int64_t> counts_;
  std::int64_t tokens_ = 0;
  std::int64_t boundaries_ = 0;
  double model_bits_ = 0.0;
  double sum_xlogx_ = 0.0;
};

}  // namespace

double morph_spelling_bits(std::size_t length, int alphabet_size) {
  return static_cast<double>(length + 1) * std::log2(static_cast<double>(alphabet_size) + 1.0);
}

double count_bits(std::int64_t count) {
  if (count < 1) throw Error("count code needs a positive count");
  const auto width = std::bit_width(static_cast<std::uint64_t>(count));
  return static_cast<double>(2 * width - 1);
}

CodeLength code_length(const std::map<std::string, std::int64_t>& morph_counts, int alphabet_size,
                       double split_penalty, std::int64_t boundaries) {
  CodeLength out;
  std::int64_t tokens = 0;
  double sum = 0.0;
  for (const auto& [m, c] : morph_counts) {
    if (c < 1) throw Error("morph '" + m + "' has non-positive count");
    out.model_bits += morph_spelling_bits(m.size(), alphabet_size) + count_bits(c);
    tokens += c;
    sum += xlog2x(c);
  }
  out.corpus_bits = xlog2x(tokens) - sum;
  out.penalty_bits = split_penalty * static_cast<double>(boundaries);
  return out;
}

SegmenterModel::SegmenterModel(std::map<std::string, std::int64_t> morph_counts, int alphabet_size,
                               double split_penalty, std::int64_t boundaries)
    : counts_(std::move(morph_counts)),
      alphabet_size_(alphabet_size),
      split_penalty_(split_penalty),
      boundaries_(boundaries) {
  if (alphabet_size_ < 1) throw Error("alphabet size must be positive");
  for (const auto& [m, c] : counts_) tokens_ += c;
  total_bits_ = code_length(counts_, alphabet_size_, split_penalty_, boundaries_).total();
}

double SegmenterModel::morph_cost(std::string_view morph) const {
  const double log_n = std::log2(static_cast<double>(std::max<std::int64_t>(tokens_, 1)));
  auto it = counts_.find(std::string(morph));
  if (it != counts_.end()) return log_n - std::log2(static_cast<double>(it->second));
  return log_n + morph_spelling_bits(morph.size(), alphabet_size_);
}

void SegmenterModel::write_tsv(std::ostream& out) const {
  out << "# alphabet_size " << alphabet_size_ << '\n';
  out << "# split_penalty " << report::format_number(split_penalty_) << '\n';
  out << "# boundaries " << boundaries_ << '\n';
  for (const auto& [m, c] : counts_) out << m << '\t' << c << '\n';
}

SegmenterModel SegmenterModel::read_tsv(std::istream& in) {
  std::map<std::string, std::int64_t> counts;
  int alphabet = 0;
  double penalty = 0.0;
  std::int64_t boundaries = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw.front() == '#') {
      std::istringstream hdr(raw.substr(1));
      std::string key;
      hdr >> key;
      if (key == "alphabet_size") hdr >> alphabet;
      else if (key == "split_penalty") hdr >> penalty;
      else if (key == "boundaries") hdr >> boundaries;
      continue;
    }
    const auto tab = raw.rfind('\t');
    if (tab == std::string::npos) throw SchemaError(line, "count", "expected morph<TAB>count");
    std::int64_t c = 0;
    try {
      c = std::stoll(raw.substr(tab + 1));
    } catch (const std::exception&) {
      throw SchemaError(line, "count", "not an integer");
    }
    if (c < 1) throw SchemaError(line, "count", "must be positive");
    counts[raw.substr(0, tab)] = c;
  }
  if (alphabet < 1) throw SchemaError(line, "alphabet_size", "missing header");
  return SegmenterModel(std::move(counts), alphabet, penalty, boundaries);
}

SegmenterModel train_segmenter(std::span<const std::string> words, const SegmenterParams& params) {
  std::map<std::string, std::int64_t> word_counts;
  std::set<char> alphabet;
  for (const auto& w : words) {
    if (w.empty()) continue;
    auto lower = text::to_lower(w);
    alphabet.insert(lower.begin(), lower.end());
    ++word_counts[std::move(lower)];
  }
  if (word_counts.empty()) throw Error("cannot train a segmenter on an empty word list");
  if (params.max_iters < 0) throw Error("max_iters must be non-negative");

  const int alphabet_size = static_cast<int>(alphabet.size());
  MdlState state(alphabet_size, params.split_penalty);
  std::vector<std::pair<std::string, std::int64_t>> types(word_counts.begin(), word_counts.end());
  std::vector<std::vector<std::string>> segs;
  for (const auto& [w, c] : types) {
    segs.push_back({w});
    state.add_all(segs.back(), c);
  }

  SegmenterModel model;
  model.history_.push_back(state.objective());
  Rng rng(params.seed);
  std::vector<std::size_t> order(types.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int iter = 0; iter < params.max_iters; ++iter) {
    rng.shuffle(order.begin(), order.end());
    bool changed = false;
    for (auto i : order) {
      const auto& [w, c] = types[i];
      const double before = state.objective();
      state.remove_all(segs[i], c);
      auto fresh = state.split_recursive(w, c);
      const double after = state.objective();
      if (after > before + kEps) {
        state.remove_all(fresh, c);
        state.add_all(segs[i], c);
      } else if (fresh != segs[i]) {
        changed = changed || after < before - kEps;
        segs[i] = std::move(fresh);
      }
    }
    model.history_.push_back(state.objective());
    if (!changed) break;
  }

  model.counts_ = state.counts();
  model.alphabet_size_ = alphabet_size;
  model.split_penalty_ = params.split_penalty;
  model.boundaries_ = state.boundaries();
  model.tokens_ = 0;
  for (const auto& [m, c] : model.counts_) model.tokens_ += c;
  model.total_bits_ =
      code_length(model.counts_, alphabet_size, params.split_penalty, model.boundaries_).total();
  return model;
}

Segmentation segment(const SegmenterModel& model, std::string_view word) {
  Segmentation out;
  out.word = std::string(word);
  if (word.empty()) return out;
  const std::string lower = text::to_lower(word);
  const std::size_t n = lower.size();

  struct Cell {
    double cost = 0.0;
    std::size_t morphs = 0;
    std::size_t next = 0;
  };
  std::vector<Cell> best(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    bool have = false;
    for (std::size_t j = n; j > i; --j) {
      double cost = model.morph_cost(std::string_view(lower).substr(i, j - i)) + best[j].cost;
      if (j < n) cost += model.split_penalty();
      const std::size_t morphs = 1 + best[j].morphs;
      const bool better = !have || cost < best[i].cost - kEps ||
                          (cost <= best[i].cost + kEps && morphs < best[i].morphs);
      if (better) {
        best[i] = {cost, morphs, j};
        have = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; i = best[i].next) {
    out.morphs.emplace_back(word.substr(i, best[i].next - i));
  }
  return out;
}

double AffixDistribution::mass_at(std::size_t k) const {
  if (cumulative.empty() || k == 0) return 0.0;
  return cumulative[std::min(k, cumulative.size()) - 1];
}

AffixDistribution top_affixes(const std::map<std::string, std::int64_t>& counts, std::int64_t total,
                              AffixSide side, std::size_t k) {
  if (k < 1) throw Error("k must be at least 1");
  if (total < 1) throw Error("affix distribution needs at least one observation");
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  AffixDistribution out;
  out.side = side;
  double acc = 0.0;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) {
    const double p = static_cast<double>(ranked[i].second) / static_cast<double>(total);
    acc += p;
    out.entries.emplace_back(ranked[i].first, p);
    out.cumulative.push_back(acc);
  }
  return out;
}

AffixDistribution affix_distribution(std::span<const Segmentation> segmentations, AffixSide side,
                                     std::size_t k) {
  if (segmentations.empty()) throw Error("affix distribution of an empty segmentation list");
  std::map<std::string, std::int64_t> counts;
  std::int64_t total = 0;
  for (const auto& s : segmentations) {
    if (s.morphs.empty()) continue;
    ++counts[text::to_lower(side == AffixSide::Prefix ? s.morphs.front() : s.morphs.back())];
    ++total;
  }
  return top_affixes(counts, total, side, k);
}

void write_affix_csv(std::ostream& out, const AffixDistribution& dist) {
  out << "rank,affix,probability,cumulative_mass\n";
  for (std::size_t i = 0; i < dist.entries.size(); ++i) {
    out << (i + 1) << ',' << report::csv_field(dist.entries[i].first) << ','
        << report::format_number(dist.entries[i].second) << ','
        << report::format_number(dist.cumulative[i]) << '\n';
  }
}

}  // namespace slanglex::morphology
