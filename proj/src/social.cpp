#include "slanglex/social.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>

#include "slanglex/error.hpp"
#include "slanglex/random.hpp"
#include "slanglex/report.hpp"
#include "slanglex/text.hpp"

namespace slanglex::social {

namespace {

std::vector<std::string> subject_names() {
  std::vector<std::string> out;
  for (auto s : kSubjects) out.emplace_back(to_string(s));
  return out;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<std::string> dedupe(std::vector<std::string> in) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& s : in) {
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

SubjectDistribution knn_predict_proba(const KnnModel& model, std::span<const double> vector) {
  if (model.k < 1) throw Error("k must be at least 1");
  if (model.reference.empty()) throw Error("KNN model has no reference points");

  struct Scored {
    double similarity;
    const Reference* ref;
  };
  std::vector<Scored> scored;
  scored.reserve(model.reference.size());
  for (const auto& r : model.reference) {
    if (r.vector.size() != vector.size()) {
      throw Error("dimension mismatch: query has " + std::to_string(vector.size()) +
                  ", reference has " + std::to_string(r.vector.size()));
    }
    const double sim = model.metric == Metric::Cosine ? embeddings::cosine(vector, r.vector)
                                                      : -euclidean(vector, r.vector);
    scored.push_back({sim, &r});
  }
  const auto keep = std::min(model.k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end(),
                    [](const Scored& a, const Scored& b) {
                      return a.similarity != b.similarity ? a.similarity > b.similarity
                                                          : a.ref->token < b.ref->token;
                    });
  SubjectDistribution p{};
  for (std::size_t i = 0; i < keep; ++i) p[static_cast<std::size_t>(scored[i].ref->label)] += 1.0;
  for (auto& v : p) v /= static_cast<double>(keep);
  return p;
}

KnnModel build_knn(const embeddings::EmbeddingTable& table,
                   std::span<const std::pair<std::string, SubjectLabel>> labelled, std::size_t k,
                   Metric metric) {
  KnnModel model;
  model.k = k;
  model.metric = metric;
  for (const auto& [word, label] : labelled) {
    const auto token = embeddings::headword_token(word);
    auto i = table.find_folded(token);
    if (!i) continue;
    const auto v = table.vector(*i);
    model.reference.push_back({table.tokens()[*i], std::vector<double>(v.begin(), v.end()), label});
  }
  if (model.reference.empty()) throw Error("no labelled word is in the embedding vocabulary");
  return model;
}

SubjectEvaluation evaluate_subject_model(const KnnModel& model,
                                         std::span<const std::pair<std::string, SubjectLabel>> test,
                                         const embeddings::EmbeddingTable& table) {
  SubjectEvaluation out;
  std::vector<std::string> truth, pred;
  for (const auto& [word, label] : test) {
    auto i = table.find_folded(embeddings::headword_token(word));
    if (!i) {
      ++out.missing;
      continue;
    }
    const auto p = knn_predict_proba(model, table.vector(*i));
    const auto best = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
    truth.emplace_back(to_string(label));
    pred.emplace_back(to_string(kSubjects[best]));
  }
  if (truth.empty()) throw Error("no test word is in the embedding vocabulary");
  out.evaluated = truth.size();
  out.report = stats::confusion_and_report(truth, pred, subject_names());
  return out;
}

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Male:
      return "male";
    case Gender::Female:
      return "female";
    default:
      return "unknown";
  }
}

GenderLexicon GenderLexicon::read(std::istream& in) {
  GenderLexicon lex;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (text::trim(raw).empty() || raw.front() == '#') continue;
    const auto cols = text::split_exact(raw, ',');
    if (cols.size() != 2) throw SchemaError(line, "gender", "expected name,gender");
    const auto g = text::to_lower(text::trim(cols[1]));
    if (line == 1 && g == "gender") continue;  // header
    if (g == "m" || g == "male") {
      lex.add(text::trim(cols[0]), Gender::Male);
    } else if (g == "f" || g == "female") {
      lex.add(text::trim(cols[0]), Gender::Female);
    } else if (g == "u" || g == "unknown" || g.empty()) {
      lex.add(text::trim(cols[0]), Gender::Unknown);
    } else {
      throw SchemaError(line, "gender", "unknown gender '" + g + "'");
    }
  }
  return lex;
}

GenderLexicon GenderLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read(in);
}

void GenderLexicon::add(std::string_view name, Gender g) { names_[text::to_lower(name)] = g; }

Gender GenderLexicon::lookup(std::string_view name) const {
  auto it = names_.find(text::to_lower(name));
  return it == names_.end() ? Gender::Unknown : it->second;
}

std::vector<std::string> GenderLexicon::names() const {
  std::vector<std::string> out;
  for (const auto& [n, g] : names_) out.push_back(n);
  return out;
}

std::vector<std::string> read_term_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::string> out;
  std::string raw;
  while (std::getline(in, raw)) {
    auto t = text::trim(raw);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  out = dedupe(std::move(out));
  if (out.empty()) throw Error("term list " + path.string() + " is empty");
  return out;
}

std::vector<std::string> default_prejudice_terms() {
  return {"slut", "whore", "shrew", "bitch", "faggot", "sexy", "fuck", "fucked", "nude", "porn", "cocksucker"};
}

BiasLexicons BiasLexicons::load(const std::filesystem::path& dir) {
  BiasLexicons lex;
  lex.prejudice_terms = read_term_list(dir / "prejudice.txt");
  lex.religious_terms = read_term_list(dir / "religions.txt");
  lex.religious_prejudices = read_term_list(dir / "religious_prejudices.txt");
  lex.occupations = read_term_list(dir / "occupations.txt");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& line : read_term_list(dir / "gender_pairs.txt")) {
    const auto parts = text::split_any(line, " \t,");
    if (parts.size() != 2) throw Error("gender pair line must hold two words: '" + line + "'");
    if (seen.emplace(parts[0], parts[1]).second) lex.gender_pairs.emplace_back(parts[0], parts[1]);
  }
  return lex;
}

Direction gender_direction(const embeddings::EmbeddingTable& table,
                           std::span<const std::pair<std::string, std::string>> pairs) {
  Direction out;
  std::vector<double> sum(table.dimension(), 0.0);
  for (const auto& [male, female] : pairs) {
    auto m = table.find_folded(male), f = table.find_folded(female);
    if (!m || !f) {
      ++out.pairs_missing;
      continue;
    }
    const auto vm = table.vector(*m), vf = table.vector(*f);
    std::vector<double> diff(vm.size());
    double norm = 0.0;
    for (std::size_t j = 0; j < diff.size(); ++j) {
      diff[j] = vf[j] - vm[j];
      norm += diff[j] * diff[j];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) throw Error("gender pair (" + male + ", " + female + ") has identical vectors");
    for (std::size_t j = 0; j < diff.size(); ++j) sum[j] += diff[j] / norm;
    ++out.pairs_used;
  }
  if (out.pairs_used == 0) throw Error("no gender pair is in the embedding vocabulary");
  double norm = 0.0;
  for (double v : sum) norm += v * v;
  norm = std::sqrt(norm);
  if (norm < 1e-12) throw Error("gender pair differences cancel out; direction undefined");
  out.unit.resize(sum.size());
  for (std::size_t j = 0; j < sum.size(); ++j) out.unit[j] = sum[j] / norm;
  return out;
}

DirectBias direct_bias(const embeddings::EmbeddingTable& table,
                       std::span<const std::string> neutral_words, std::span<const double> g,
                       double c) {
  DirectBias out;
  double acc = 0.0;
  for (const auto& w : neutral_words) {
    auto i = table.find_folded(w);
    if (!i) {
      ++out.missing;
      continue;
    }
    acc += std::pow(std::abs(embeddings::cosine(table.vector(*i), g)), c);
    ++out.evaluated;
  }
  if (out.evaluated == 0) throw Error("no neutral word is in the embedding vocabulary");
  out.value = acc / static_cast<double>(out.evaluated);
  return out;
}

std::vector<std::pair<std::string, double>> occupation_projections(
    const embeddings::EmbeddingTable& table, std::span<const std::string> occupations,
    std::span<const double> g) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& w : occupations) {
    if (auto i = table.find_folded(w)) out.emplace_back(w, embeddings::cosine(table.vector(*i), g));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

SexPrejudice sexprej(const embeddings::EmbeddingTable& table, std::string_view word,
                     std::span<const std::string> terms) {
  auto w = table.find_folded(word);
  if (!w) throw Error("word '" + std::string(word) + "' is not in the embedding vocabulary");
  SexPrejudice out;
  double acc = 0.0;
  for (const auto& t : terms) {
    auto i = table.find_folded(t);
    if (!i) {
      out.missing_terms.push_back(t);
      continue;
    }
    acc += embeddings::cosine(table.vector(*w), table.vector(*i));
    out.used_terms.push_back(t);
  }
  if (out.used_terms.empty()) throw Error("no prejudice term is in the embedding vocabulary");
  out.value = acc / static_cast<double>(out.used_terms.size());
  return out;
}

PermutationTest permutation_test(std::span<const double> a, std::span<const double> b,
                                 std::size_t max_permutations, std::uint64_t seed) {
  if (a.empty() || b.empty()) throw Error("permutation test needs two non-empty groups");
  PermutationTest out;
  out.observed_difference = mean_of(a) - mean_of(b);
  const double observed = std::abs(out.observed_difference);
  const double tol = 1e-12 * std::max(1.0, observed);

  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t n = pooled.size(), na = a.size();
  const double total = std::accumulate(pooled.begin(), pooled.end(), 0.0);
  auto diff_for = [&](double sum_a) {
    return sum_a / static_cast<double>(na) - (total - sum_a) / static_cast<double>(n - na);
  };

  double combos = 1.0;
  for (std::size_t i = 1; i <= na; ++i) {
    combos = combos * static_cast<double>(n - na + i) / static_cast<double>(i);
  }

  std::size_t hits = 0;
  if (combos <= static_cast<double>(max_permutations)) {
    out.exact = true;
    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      double sum_a = 0.0;
      for (auto i : idx) sum_a += pooled[i];
      if (std::abs(diff_for(sum_a)) >= observed - tol) ++hits;
      ++out.resamples;
      // next combination in lexicographic order
      std::size_t pos = na;
      while (pos > 0 && idx[pos - 1] == n - na + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < na; ++j) idx[j] = idx[j - 1] + 1;
    }
    out.p_value = static_cast<double>(hits) / static_cast<double>(out.resamples);
    return out;
  }

  Rng rng(seed);
  std::vector<double> work = pooled;
  for (std::size_t r = 0; r < max_permutations; ++r) {
    rng.shuffle(work.begin(), work.end());
    const double sum_a = std::accumulate(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(na), 0.0);
    if (std::abs(diff_for(sum_a)) >= observed - tol) ++hits;
    ++out.resamples;
  }
  out.p_value = static_cast<double>(hits + 1) / static_cast<double>(out.resamples + 1);
  return out;
}

NameComparison name_prejudice_comparison(const embeddings::EmbeddingTable& table,
                                         std::span<const std::string> names,
                                         const GenderLexicon& genders,
                                         std::span<const std::string> terms,
                                         std::size_t permutations, std::uint64_t seed) {
  NameComparison out;
  std::vector<double> female, male;
  for (const auto& name : names) {
    const auto g = genders.lookup(name);
    if (g == Gender::Unknown) {
      ++out.unknown_gender;
      continue;
    }
    if (!table.find_folded(name)) {
      ++out.missing;
      continue;
    }
    const double s = sexprej(table, name, terms).value;
    (g == Gender::Female ? female : male).push_back(s);
    out.scores.emplace_back(name, s);
  }
  if (female.size() < 2 || male.size() < 2) {
    throw Error("name comparison needs at least two scored names per group (female " +
                std::to_string(female.size()) + ", male " + std::to_string(male.size()) + ")");
  }
  out.female = {mean_of(female), female.size()};
  out.male = {mean_of(male), male.size()};
  out.test = permutation_test(female, male, permutations, seed);
  return out;
}

ReligiousMatrix religious_prejudice_matrix(const embeddings::EmbeddingTable& table,
                                           std::span<const std::string> religions,
                                           std::span<const std::string> prejudices) {
  ReligiousMatrix m;
  std::vector<std::size_t> rows, cols;
  for (const auto& r : religions) {
    if (auto i = table.find_folded(r)) {
      m.religions.push_back(r);
      rows.push_back(*i);
    } else {
      m.missing.push_back(r);
    }
  }
  for (const auto& p : prejudices) {
    if (auto i = table.find_folded(p)) {
      m.prejudices.push_back(p);
      cols.push_back(*i);
    } else {
      m.missing.push_back(p);
    }
  }
  if (rows.size() < 2) throw Error("standardizing needs at least two religious terms in the vocabulary");
  if (cols.empty()) throw Error("no prejudice term is in the embedding vocabulary");

  m.raw.assign(rows.size(), std::vector<double>(cols.size()));
  m.standardized = m.raw;
  double total = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      m.raw[r][c] = embeddings::cosine(table.vector(rows[r]), table.vector(cols[c]));
      total += m.raw[r][c];
    }
  }
  m.overall_mean = total / static_cast<double>(rows.size() * cols.size());

  const auto n = static_cast<double>(rows.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) mean += m.raw[r][c];
    mean /= n;
    double var = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) var += (m.raw[r][c] - mean) * (m.raw[r][c] - mean);
    const double sd = std::sqrt(var / (n - 1.0));
    if (sd == 0.0) throw Error("prejudice '" + m.prejudices[c] + "' scores every religion equally");
    for (std::size_t r = 0; r < rows.size(); ++r) m.standardized[r][c] = (m.raw[r][c] - mean) / sd;
  }
  return m;
}

void write_matrix_csv(std::ostream& out, const ReligiousMatrix& m, bool standardized) {
  out << "religion";
  for (const auto& p : m.prejudices) out << ',' << report::csv_field(p);
  out << '\n';
  const auto& values = standardized ? m.standardized : m.raw;
  for (std::size_t r = 0; r < m.religions.size(); ++r) {
    out << report::csv_field(m.religions[r]);
    for (double v : values[r]) out << ',' << report::format_number(v);
    out << '\n';
  }
}

}  // namespace slanglex::social
