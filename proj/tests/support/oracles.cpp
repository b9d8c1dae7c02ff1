#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace oracle {

std::vector<std::vector<std::string>> all_segmentations(const std::string& word) {
  std::vector<std::vector<std::string>> out;
  const std::size_t cuts = word.size() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cuts); ++mask) {
    std::vector<std::string> pieces;
    std::size_t start = 0;
    for (std::size_t i = 0; i < cuts; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        pieces.push_back(word.substr(start, i + 1 - start));
        start = i + 1;
      }
    }
    pieces.push_back(word.substr(start));
    out.push_back(std::move(pieces));
  }
  return out;
}

double mdl_cost(const std::vector<std::vector<std::string>>& segmentation,
                const std::vector<std::int64_t>& word_counts, int alphabet_size, double penalty) {
  std::map<std::string, std::int64_t> morphs;
  std::int64_t boundaries = 0;
  for (std::size_t w = 0; w < segmentation.size(); ++w) {
    for (const auto& m : segmentation[w]) morphs[m] += word_counts[w];
    boundaries += word_counts[w] * static_cast<std::int64_t>(segmentation[w].size() - 1);
  }
  double model = 0.0, corpus = 0.0;
  std::int64_t n = 0;
  for (const auto& [m, c] : morphs) {
    model += static_cast<double>(m.size() + 1) * std::log2(alphabet_size + 1.0);
    model += 2.0 * std::floor(std::log2(static_cast<double>(c))) + 1.0;
    corpus -= static_cast<double>(c) * std::log2(static_cast<double>(c));
    n += c;
  }
  corpus += static_cast<double>(n) * std::log2(static_cast<double>(n));
  return model + corpus + penalty * static_cast<double>(boundaries);
}

MdlOptimum mdl_exhaustive(const std::vector<std::string>& words, double penalty) {
  std::map<std::string, std::int64_t> counts;
  std::set<char> alphabet;
  for (auto w : words) {
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    alphabet.insert(w.begin(), w.end());
    ++counts[w];
  }
  MdlOptimum best;
  std::vector<std::int64_t> wc;
  std::vector<std::vector<std::vector<std::string>>> options;
  for (const auto& [w, c] : counts) {
    best.words.push_back(w);
    wc.push_back(c);
    options.push_back(all_segmentations(w));
  }
  best.cost = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(options.size(), 0);
  for (;;) {
    std::vector<std::vector<std::string>> assignment;
    for (std::size_t i = 0; i < pick.size(); ++i) assignment.push_back(options[i][pick[i]]);
    const double cost = mdl_cost(assignment, wc, static_cast<int>(alphabet.size()), penalty);
    if (cost < best.cost - 1e-9) {
      best.cost = cost;
      best.optima.clear();
    }
    if (std::abs(cost - best.cost) <= 1e-9) best.optima.push_back(assignment);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return best;
}

std::vector<double> numeric_gradient(const std::function<double(const std::vector<double>&)>& f,
                                     std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double keep = x[i];
    x[i] = keep + h;
    const double up = f(x);
    x[i] = keep - h;
    const double down = f(x);
    x[i] = keep;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

double relative_error(const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] - b[i]) * (a[i] - b[i]);
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return std::sqrt(diff) / std::max(std::sqrt(na) + std::sqrt(nb), 1e-12);
}

std::vector<std::vector<std::int64_t>> confusion(const std::vector<std::string>& truth,
                                                 const std::vector<std::string>& pred,
                                                 const std::vector<std::string>& labels) {
  std::vector<std::vector<std::int64_t>> out(labels.size(), std::vector<std::int64_t>(labels.size(), 0));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      for (std::size_t k = 0; k < truth.size(); ++k) {
        out[i][j] += truth[k] == labels[i] && pred[k] == labels[j];
      }
    }
  }
  return out;
}

double weighted_f1(const std::vector<std::string>& truth, const std::vector<std::string>& pred) {
  std::set<std::string> labels(truth.begin(), truth.end());
  double total = 0.0;
  for (const auto& l : labels) {
    double tp = 0, fp = 0, fn = 0, support = 0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
      tp += truth[k] == l && pred[k] == l;
      fp += truth[k] != l && pred[k] == l;
      fn += truth[k] == l && pred[k] != l;
      support += truth[k] == l;
    }
    const double f1 = tp == 0 ? 0.0 : 2 * tp / (2 * tp + fp + fn);
    total += support * f1;
  }
  return total / static_cast<double>(truth.size());
}

const std::vector<std::pair<double, double>>& normal_table() {
  static const std::vector<std::pair<double, double>> table{
      {0.0, 0.5},
      {0.5, 0.6914624612740131},
      {1.0, 0.8413447460685429},
      {1.645, 0.9500150944608786},
      {1.96, 0.9750021048517795},
      {2.326, 0.9899907246591323},
      {2.576, 0.995002467684265},
      {3.0, 0.9986501019683699},
      {-1.0, 0.15865525393145707},
      {-2.5, 0.006209665325776132},
  };
  return table;
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
  double dot = 0, nu = 0, nv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  return dot / std::sqrt(nu * nv);
}

std::vector<std::pair<std::string, double>> nearest(const std::vector<std::string>& tokens,
                                                    const std::vector<std::vector<double>>& vectors,
                                                    const std::string& query, std::size_t k) {
  std::size_t q = 0;
  while (tokens[q] != query) ++q;
  std::vector<std::pair<std::string, double>> all;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != q) all.emplace_back(tokens[i], cosine(vectors[q], vectors[i]));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

double exact_permutation_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t n = pooled.size();
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const double observed = std::abs(mean(a) - mean(b));
  std::size_t hits = 0, total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a.size()) continue;
    std::vector<double> ga, gb;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? ga : gb).push_back(pooled[i]);
    ++total;
    if (std::abs(mean(ga) - mean(gb)) >= observed - 1e-12) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

namespace {

const std::vector<std::string>& seed_lexicon() {
  static const std::vector<std::string> words{
      "professor", "laboratory", "gymnasium", "examination", "hippopotamus", "influenza", "refrigerator",
      "veterinarian", "advertisement", "mathematics", "application", "limousine", "champagne",
      "delicatessen", "alligator", "telephone", "cockroach", "situation", "information", "celebrity",
      "dormitory", "condominium", "memorandum", "photograph", "promotion", "detective", "breakfast",
      "smoke", "motel", "hotel", "spoon", "fork", "television", "broadcast", "electric", "execution",
      "internet", "etiquette", "documentary", "drama", "comedy", "romance", "channel", "chocolate",
      "vegetable", "burger", "potato", "tomato", "cucumber", "sandwich", "banana", "pineapple",
      "computer", "keyboard", "monitor", "elevator", "umbrella", "tornado", "hurricane", "volcano"};
  return words;
}

}  // namespace

std::vector<slanglex::corpus::GoldClassRecord> synthetic_gold(std::uint64_t seed, std::size_t per_class) {
  using slanglex::SlangClass;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto& lex = seed_lexicon();
  std::set<std::string> seen;
  std::vector<slanglex::corpus::GoldClassRecord> out;
  auto emit = [&](std::string word, SlangClass label, std::vector<std::string> comps) {
    if (!seen.insert(word).second) return false;
    out.push_back({std::move(word), label, std::move(comps)});
    return true;
  };

  for (std::size_t made = 0; made < per_class;) {
    const std::size_t letters = 2 + pick(4);
    std::string w;
    for (std::size_t i = 0; i < letters; ++i) {
      w += static_cast<char>('A' + pick(26));
      if (i + 1 < letters || pick(2)) w += '.';
    }
    made += emit(w, SlangClass::Alphabetism, {});
  }
  for (std::size_t made = 0; made < per_class;) {
    const auto& a = lex[pick(lex.size())];
    const auto& b = lex[pick(lex.size())];
    if (a == b) continue;
    const std::size_t cut_a = 2 + pick(a.size() - 3);
    const std::size_t cut_b = 1 + pick(b.size() - 3);
    made += emit(a.substr(0, cut_a) + b.substr(cut_b), SlangClass::Blend, {a, b});
  }
  for (std::size_t made = 0; made < per_class;) {
    const auto& src = lex[pick(lex.size())];
    const std::size_t n = 3 + pick(std::min<std::size_t>(3, src.size() - 3));
    const bool back = pick(10) < 7;
    made += emit(back ? src.substr(0, n) : src.substr(src.size() - n), SlangClass::Clipping, {src});
  }
  const std::string onsets = "bdfghjklmnprstvwz";
  const std::string vowels = "aeiou";
  for (std::size_t made = 0; made < per_class;) {
    std::string base;
    base += onsets[pick(onsets.size())];
    base += vowels[pick(vowels.size())];
    base += onsets[pick(onsets.size())];
    if (pick(2)) base += "y";
    std::string second = base;
    switch (pick(3)) {
      case 0:
        break;
      case 1:
        second[1] = vowels[(vowels.find(base[1]) + 1 + pick(4)) % vowels.size()];
        break;
      default:
        second[0] = onsets[(onsets.find(base[0]) + 1 + pick(onsets.size() - 1)) % onsets.size()];
        break;
    }
    made += emit(base + "-" + second, SlangClass::Reduplicative, {});
  }
  return out;
}

std::vector<std::vector<std::string>> identical_context_corpus(std::uint64_t seed, std::size_t sentences) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> shared{"alpha", "beta", "gamma", "delta", "epsilon"};
  const std::vector<std::string> other{"north", "south", "east", "west", "center"};
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < sentences; ++i) {
    std::vector<std::string> s;
    const auto& ctx = i % 3 == 2 ? other : shared;
    const std::string target = i % 3 == 0 ? "x" : (i % 3 == 1 ? "y" : "z");
    for (int j = 0; j < 2; ++j) s.push_back(ctx[rng() % ctx.size()]);
    s.push_back(target);
    for (int j = 0; j < 2; ++j) s.push_back(ctx[rng() % ctx.size()]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace oracle
