#include "slanglex/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "slanglex/error.hpp"
#include "slanglex/report.hpp"

namespace slanglex::stats {

namespace {

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

void check_lengths(std::span<const std::string> truth, std::span<const std::string> pred) {
  if (truth.size() != pred.size()) {
    throw Error("truth and prediction lengths differ (" + std::to_string(truth.size()) + " vs " +
                std::to_string(pred.size()) + ")");
  }
  if (truth.empty()) throw Error("no instances to evaluate");
}

}  // namespace

std::int64_t ConfusionMatrix::total() const {
  std::int64_t t = 0;
  for (const auto& row : counts) t += std::accumulate(row.begin(), row.end(), std::int64_t{0});
  return t;
}

std::int64_t ConfusionMatrix::row_sum(std::size_t row) const {
  return std::accumulate(counts[row].begin(), counts[row].end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::col_sum(std::size_t col) const {
  std::int64_t t = 0;
  for (const auto& row : counts) t += row[col];
  return t;
}

ClassificationReport confusion_and_report(std::span<const std::string> truth,
                                          std::span<const std::string> pred,
                                          std::span<const std::string> labels) {
  check_lengths(truth, pred);
  std::map<std::string, std::size_t> index;
  for (const auto& l : labels) {
    if (!index.emplace(l, index.size()).second) throw Error("duplicate label '" + l + "'");
  }
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error("label '" + l + "' is not in the label list");
    return it->second;
  };

  ClassificationReport rep;
  rep.confusion.labels.assign(labels.begin(), labels.end());
  rep.confusion.counts.assign(labels.size(), std::vector<std::int64_t>(labels.size(), 0));
  for (std::size_t i = 0; i < truth.size(); ++i) ++rep.confusion.counts[lookup(truth[i])][lookup(pred[i])];

  const auto n = static_cast<double>(truth.size());
  std::int64_t correct = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto tp = rep.confusion.counts[k][k];
    const auto support = rep.confusion.row_sum(k);
    const auto predicted = rep.confusion.col_sum(k);
    ClassMetrics m;
    m.label = labels[k];
    m.support = support;
    m.precision = safe_ratio(static_cast<double>(tp), static_cast<double>(predicted));
    m.recall = safe_ratio(static_cast<double>(tp), static_cast<double>(support));
    m.f1 = safe_ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
    rep.weighted_f1 += m.f1 * static_cast<double>(support) / n;
    correct += tp;
    rep.classes.push_back(std::move(m));
  }
  rep.accuracy = static_cast<double>(correct) / n;
  return rep;
}

double weighted_f1(std::span<const std::string> truth, std::span<const std::string> pred) {
  check_lengths(truth, pred);
  std::set<std::string> all(truth.begin(), truth.end());
  all.insert(pred.begin(), pred.end());
  const std::vector<std::string> labels(all.begin(), all.end());
  return confusion_and_report(truth, pred, labels).weighted_f1;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

ProportionTestResult two_proportion_ztest(std::int64_t x1, std::int64_t n1, std::int64_t x2,
                                          std::int64_t n2, double alpha, int m) {
  if (n1 < 1 || n2 < 1) throw Error("z-test needs positive sample sizes");
  if (x1 < 0 || x1 > n1 || x2 < 0 || x2 > n2) throw Error("z-test counts must lie in [0, n]");
  if (m < 1) throw Error("Bonferroni test count must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
  const double pooled = static_cast<double>(x1 + x2) / static_cast<double>(n1 + n2);
  if (pooled <= 0.0 || pooled >= 1.0) throw Error("pooled proportion is 0 or 1; z is undefined");

  const double p1 = static_cast<double>(x1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(x2) / static_cast<double>(n2);
  const double se = std::sqrt(pooled * (1.0 - pooled) *
                              (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)));
  ProportionTestResult r;
  r.z = (p1 - p2) / se;
  r.p_value = std::min(1.0, 2.0 * normal_cdf(-std::abs(r.z)));
  r.adjusted_alpha = alpha / static_cast<double>(m);
  r.significant = r.p_value < r.adjusted_alpha;
  return r;
}

void write_confusion_csv(std::ostream& out, const ConfusionMatrix& cm) {
  out << "truth\\pred";
  for (const auto& l : cm.labels) out << ',' << report::csv_field(l);
  out << '\n';
  for (std::size_t r = 0; r < cm.labels.size(); ++r) {
    out << report::csv_field(cm.labels[r]);
    for (auto c : cm.counts[r]) out << ',' << c;
    out << '\n';
  }
}

void write_metrics_csv(std::ostream& out, const ClassificationReport& report) {
  out << "label,precision,recall,f1,support\n";
  for (const auto& m : report.classes) {
    out << report::csv_field(m.label) << ',' << report::format_number(m.precision) << ','
        << report::format_number(m.recall) << ',' << report::format_number(m.f1) << ','
        << m.support << '\n';
  }
  out << "weighted," << ",," << report::format_number(report.weighted_f1) << ','
      << report.confusion.total() << '\n';
}

}  // namespace slanglex::stats
