#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace slanglex::stats {

/// Per-class F1 weighted by true-class support. A class with no true
/// positives scores F1 = 0. Throws on length mismatch or empty input.
double weighted_f1(std::span<const std::string> truth, std::span<const std::string> pred);

struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::int64_t>> counts;  // rows = truth, columns = prediction

  std::int64_t total() const;
  std::int64_t row_sum(std::size_t row) const;
  std::int64_t col_sum(std::size_t col) const;
};

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

struct ClassificationReport {
  ConfusionMatrix confusion;
  std::vector<ClassMetrics> classes;
  double accuracy = 0.0;
  double weighted_f1 = 0.0;
};

/// Throws when a value in truth or pred is missing from `labels`.
ClassificationReport confusion_and_report(std::span<const std::string> truth,
                                          std::span<const std::string> pred,
                                          std::span<const std::string> labels);

/// Standard normal CDF, via the complementary error function.
double normal_cdf(double x);

struct ProportionTestResult {
  double z = 0.0;
  double p_value = 1.0;
  double adjusted_alpha = 0.0;
  bool significant = false;
};

/// Pooled two-proportion z-test, two-sided, Bonferroni-adjusted for m tests.
ProportionTestResult two_proportion_ztest(std::int64_t x1, std::int64_t n1, std::int64_t x2,
                                          std::int64_t n2, double alpha = 0.05, int m = 1);

/// CSV: header `truth\pred,<labels...>` then one row per true label.
void write_confusion_csv(std::ostream& out, const ConfusionMatrix& cm);
/// CSV: label,precision,recall,f1,support
void write_metrics_csv(std::ostream& out, const ClassificationReport& report);

}  // namespace slanglex::stats
