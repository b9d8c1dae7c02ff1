#include "slanglex/embeddings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "slanglex/error.hpp"
#include "slanglex/random.hpp"
#include "slanglex/report.hpp"
#include "slanglex/text.hpp"

namespace slanglex::embeddings {

namespace {

bool is_token_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c >= 0x80;
}

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(sigmoid(x)) without overflow
double log_sigmoid(double x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); }

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    while (!cur.empty() && cur.back() == '\'') cur.pop_back();
    if (!cur.empty()) out.push_back(text::to_lower(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (is_token_char(c)) {
      cur += static_cast<char>(c);
    } else if (c == '\'' && !cur.empty()) {
      cur += '\'';  // trailing apostrophes are trimmed in flush
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::string headword_token(std::string_view headword) {
  std::string out;
  for (const auto& t : tokenize(headword)) {
    if (!out.empty()) out += '_';
    out += t;
  }
  return out;
}

std::vector<Sentence> build_usage_corpus(std::span<const corpus::LexiconEntry> entries) {
  // first token -> multiword headword token sequences, longest first
  std::map<std::string, std::vector<std::vector<std::string>>> multiword;
  for (const auto& e : entries) {
    auto toks = tokenize(e.headword);
    if (toks.size() < 2) continue;
    auto& bucket = multiword[toks.front()];
    if (std::find(bucket.begin(), bucket.end(), toks) == bucket.end()) bucket.push_back(std::move(toks));
  }
  for (auto& [first, bucket] : multiword) {
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }

  std::vector<Sentence> out;
  for (const auto& e : entries) {
    for (const auto& example : e.examples) {
      const auto toks = tokenize(example);
      Sentence s;
      for (std::size_t i = 0; i < toks.size();) {
        std::size_t matched = 0;
        if (auto it = multiword.find(toks[i]); it != multiword.end()) {
          for (const auto& cand : it->second) {
            if (i + cand.size() <= toks.size() &&
                std::equal(cand.begin(), cand.end(), toks.begin() + static_cast<std::ptrdiff_t>(i))) {
              matched = cand.size();
              break;
            }
          }
        }
        if (matched) {
          std::string joined = toks[i];
          for (std::size_t j = i + 1; j < i + matched; ++j) joined += '_' + toks[j];
          s.push_back(std::move(joined));
          i += matched;
        } else {
          s.push_back(toks[i]);
          ++i;
        }
      }
      if (!s.empty()) out.push_back(std::move(s));
    }
  }
  return out;
}

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw Error("embedding dimension must be at least 1");
}

std::span<const double> EmbeddingTable::vector(std::size_t i) const {
  return std::span<const double>(values_).subspan(i * dimension_, dimension_);
}

std::optional<std::size_t> EmbeddingTable::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EmbeddingTable::find_folded(std::string_view token) const {
  if (auto i = find(token)) return i;
  return find(text::to_lower(token));
}

std::span<const double> EmbeddingTable::at(std::string_view token) const {
  auto i = find(token);
  if (!i) throw Error("token '" + std::string(token) + "' is not in the embedding vocabulary");
  return vector(*i);
}

void EmbeddingTable::add(std::string token, std::span<const double> values, std::int64_t count) {
  if (dimension_ == 0) throw Error("embedding table has no dimension");
  if (values.size() != dimension_) throw Error("vector for '" + token + "' has the wrong dimension");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error("non-finite value in vector for '" + token + "'");
  }
  if (!index_.emplace(token, tokens_.size()).second) throw Error("duplicate token '" + token + "'");
  tokens_.push_back(std::move(token));
  counts_.push_back(count);
  values_.insert(values_.end(), values.begin(), values.end());
}

void EmbeddingTable::scale(double factor) {
  for (auto& v : values_) v *= factor;
}

void EmbeddingTable::write_text(std::ostream& out) const {
  out << tokens_.size() << ' ' << dimension_ << '\n';
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    out << tokens_[i];
    for (double v : vector(i)) out << ' ' << report::format_number(v);
    out << '\n';
  }
}

EmbeddingTable EmbeddingTable::read_text(std::istream& in) {
  std::string raw;
  if (!std::getline(in, raw)) throw SchemaError(1, "header", "missing `<vocab> <dim>` line");
  std::istringstream hdr(raw);
  std::size_t vocab = 0, dim = 0;
  if (!(hdr >> vocab >> dim) || dim == 0) throw SchemaError(1, "header", "expected `<vocab> <dim>`");
  EmbeddingTable table(dim);
  std::size_t line = 1;
  std::vector<double> values(dim);
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty()) continue;
    const auto fields = text::split_any(raw, " \t");
    if (fields.size() != dim + 1) {
      throw SchemaError(line, "vector", "expected " + std::to_string(dim) + " values, got " +
                                            std::to_string(fields.size() - 1));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& f = fields[j + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), values[j]);
      if (ec != std::errc() || ptr != f.data() + f.size()) throw SchemaError(line, "vector", "bad number '" + f + "'");
    }
    try {
      table.add(fields[0], values);
    } catch (const Error& e) {
      throw SchemaError(line, "token", e.what());
    }
  }
  if (table.size() != vocab) {
    throw SchemaError(line, "header", "declared " + std::to_string(vocab) + " vectors, found " +
                                          std::to_string(table.size()));
  }
  return table;
}

void EmbeddingTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_text(out);
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_text(in);
}

double sgns_pair_loss(std::span<const double> input, std::span<const double> positive,
                      std::span<const std::span<const double>> negatives) {
  double loss = -log_sigmoid(dot(input, positive));
  for (const auto& n : negatives) loss -= log_sigmoid(-dot(input, n));
  return loss;
}

PairGradient sgns_pair_gradient(std::span<const double> input, std::span<const double> positive,
                                std::span<const std::span<const double>> negatives) {
  const std::size_t d = input.size();
  PairGradient g;
  g.input.assign(d, 0.0);
  // dL/ds for s = u.v: label 1 -> s(s) - 1, label 0 -> s(s)
  const double gp = sigmoid(dot(input, positive)) - 1.0;
  g.positive.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    g.positive[j] = gp * input[j];
    g.input[j] += gp * positive[j];
  }
  for (const auto& n : negatives) {
    const double gn = sigmoid(dot(input, n));
    std::vector<double> gu(d);
    for (std::size_t j = 0; j < d; ++j) {
      gu[j] = gn * input[j];
      g.input[j] += gn * n[j];
    }
    g.negatives.push_back(std::move(gu));
  }
  return g;
}

TrainingResult train_skipgram(std::span<const Sentence> corpus, const TrainingConfig& config) {
  if (config.dimension < 1) throw Error("dimension must be at least 1");
  if (config.window < 1) throw Error("window must be at least 1");
  if (config.negatives < 1) throw Error("negatives must be at least 1");
  if (config.epochs < 1) throw Error("epochs must be at least 1");
  if (!(config.initial_lr > 0.0)) throw Error("initial learning rate must be positive");

  std::map<std::string, std::int64_t> raw_counts;
  for (const auto& s : corpus) {
    for (const auto& t : s) ++raw_counts[t];
  }
  std::vector<std::pair<std::string, std::int64_t>> vocab;
  for (const auto& [t, c] : raw_counts) {
    if (c >= config.min_count) vocab.emplace_back(t, c);
  }
  if (vocab.empty()) throw Error("no token reaches min_count; effective vocabulary is empty");
  std::stable_sort(vocab.begin(), vocab.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i].first, i);
  std::vector<std::vector<std::size_t>> sentences;
  std::int64_t train_words = 0;
  for (const auto& s : corpus) {
    std::vector<std::size_t> ids;
    for (const auto& t : s) {
      if (auto it = index.find(t); it != index.end()) ids.push_back(it->second);
    }
    train_words += static_cast<std::int64_t>(ids.size());
    if (!ids.empty()) sentences.push_back(std::move(ids));
  }

  // unigram^0.75 cumulative table for negatives
  std::vector<double> noise_cdf(vocab.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    acc += std::pow(static_cast<double>(vocab[i].second), 0.75);
    noise_cdf[i] = acc;
  }
  for (auto& v : noise_cdf) v /= acc;
  noise_cdf.back() = 1.0;

  std::vector<double> keep_prob(vocab.size(), 1.0);
  if (config.subsample_threshold > 0.0) {
    const double t = config.subsample_threshold * static_cast<double>(train_words);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      const double f = static_cast<double>(vocab[i].second);
      keep_prob[i] = std::min(1.0, (std::sqrt(f / t) + 1.0) * t / f);
    }
  }

  const auto d = static_cast<std::size_t>(config.dimension);
  Rng rng(config.seed);
  std::vector<double> in(vocab.size() * d), out(vocab.size() * d, 0.0);
  for (auto& v : in) v = (rng.uniform() - 0.5) / static_cast<double>(d);

  auto row = [d](std::vector<double>& m, std::size_t i) { return std::span<double>(m).subspan(i * d, d); };
  auto sample_negative = [&]() {
    auto it = std::upper_bound(noise_cdf.begin(), noise_cdf.end(), rng.uniform());
    if (it == noise_cdf.end()) --it;
    return static_cast<std::size_t>(it - noise_cdf.begin());
  };

  TrainingResult result;
  const double total = static_cast<double>(config.epochs) * static_cast<double>(train_words) + 1.0;
  double processed = 0.0;
  std::vector<double> grad_in(d);
  std::vector<std::size_t> targets;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    double loss_sum = 0.0;
    std::int64_t pairs = 0;
    for (const auto& sentence : sentences) {
      std::vector<std::size_t> kept;
      for (auto id : sentence) {
        if (keep_prob[id] >= 1.0 || rng.uniform() < keep_prob[id]) kept.push_back(id);
      }
      for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        const double lr = config.initial_lr * std::max(1e-4, 1.0 - processed / total);
        processed += 1.0;
        const auto reduced = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(config.window)));
        const std::size_t span = static_cast<std::size_t>(config.window) - reduced;
        const std::size_t lo = pos >= span ? pos - span : 0;
        const std::size_t hi = std::min(kept.size() - 1, pos + span);
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          const auto center = kept[pos], context = kept[c];
          auto v = row(in, center);
          std::fill(grad_in.begin(), grad_in.end(), 0.0);
          targets.assign(1, context);
          for (int n = 0; n < config.negatives; ++n) {
            const auto neg = sample_negative();
            if (neg != context) targets.push_back(neg);
          }
          double pair_loss = 0.0;
          for (std::size_t t = 0; t < targets.size(); ++t) {
            auto u = row(out, targets[t]);
            const double s = dot(v, u);
            const bool positive = t == 0;
            pair_loss -= positive ? log_sigmoid(s) : log_sigmoid(-s);
            const double g = (positive ? sigmoid(s) - 1.0 : sigmoid(s)) * lr;
            for (std::size_t j = 0; j < d; ++j) {
              grad_in[j] += g * u[j];
              u[j] -= g * v[j];
            }
          }
          for (std::size_t j = 0; j < d; ++j) v[j] -= grad_in[j];
          loss_sum += pair_loss;
          ++pairs;
        }
      }
    }
    const double mean = pairs ? loss_sum / static_cast<double>(pairs) : 0.0;
    if (!std::isfinite(mean)) throw Error("non-finite loss at epoch " + std::to_string(epoch + 1));
    result.epoch_loss.push_back(mean);
  }

  result.table = EmbeddingTable(d);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    result.table.add(vocab[i].first, std::span<const double>(in).subspan(i * d, d), vocab[i].second);
  }
  return result;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw Error("cosine of vectors with different lengths");
  const double nu = std::sqrt(dot(u, u)), nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) throw Error("cosine with a zero vector");
  return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

std::vector<std::pair<std::string, double>> nearest(const EmbeddingTable& table,
                                                    std::string_view token, std::size_t k) {
  if (k < 1) throw Error("k must be at least 1");
  const auto q = table.find(token);
  if (!q) throw Error("token '" + std::string(token) + "' is not in the embedding vocabulary");
  std::vector<std::pair<std::string, double>> all;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == *q) continue;
    all.emplace_back(table.tokens()[i], cosine(table.vector(*q), table.vector(i)));
  }
  auto order = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  const auto keep = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(), order);
  all.resize(keep);
  return all;
}

}  // namespace slanglex::embeddings
