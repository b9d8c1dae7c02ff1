#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "slanglex/error.hpp"
#include "slanglex/stats.hpp"

using namespace slanglex;
using namespace slanglex::stats;

using Labels = std::vector<std::string>;

TEST_CASE("weighted F1 fixed points") {
  const Labels truth{"A", "B", "A", "B"};
  CHECK(weighted_f1(truth, truth) == 1.0);
  CHECK(weighted_f1(truth, Labels{"B", "A", "B", "A"}) == 0.0);
  CHECK(weighted_f1(Labels{"A", "A", "B"}, Labels{"A", "B", "B"}) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(weighted_f1(truth, Labels{"A"}), Error);
}

TEST_CASE("weighted F1 and confusion match brute force") {
  std::mt19937_64 rng(21);
  const Labels labels{"a", "b", "c", "d", "e"};
  for (int t = 0; t < 50; ++t) {
    Labels truth, pred;
    for (int i = 0; i < 20; ++i) {
      truth.push_back(labels[rng() % 5]);
      pred.push_back(labels[rng() % 5]);
    }
    const auto r = confusion_and_report(truth, pred, labels);
    CHECK(r.confusion.counts == oracle::confusion(truth, pred, labels));
    CHECK(r.weighted_f1 == doctest::Approx(oracle::weighted_f1(truth, pred)));
    CHECK(r.confusion.total() == 20);
  }
}

TEST_CASE("confusion shapes") {
  const Labels labels{"x", "y", "z"};
  const Labels truth{"x", "y", "z", "x"};
  const auto perfect = confusion_and_report(truth, truth, labels);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(perfect.confusion.counts[i][j] == 0);
    }
  }
  const auto one_off = confusion_and_report(truth, Labels{"x", "y", "z", "y"}, labels);
  CHECK(one_off.confusion.counts[0][1] == 1);
  std::int64_t off = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) off += i != j ? one_off.confusion.counts[i][j] : 0;
  }
  CHECK(off == 1);
  CHECK_THROWS_AS(confusion_and_report(truth, Labels{"x", "y", "w", "x"}, labels), Error);
}

TEST_CASE("two-proportion z-test") {
  const auto equal = two_proportion_ztest(30, 100, 30, 100);
  CHECK(equal.z == 0.0);
  CHECK(equal.p_value == doctest::Approx(1.0));
  CHECK_FALSE(equal.significant);

  // Pooled p = 0.4 over 200 trials.
  const auto r = two_proportion_ztest(50, 100, 30, 100);
  CHECK(r.z == doctest::Approx(0.2 / std::sqrt(0.4 * 0.6 * 0.02)).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.003892417122778628).epsilon(1e-9));
  CHECK(r.significant);

  CHECK(two_proportion_ztest(50, 100, 30, 100, 0.05, 8).adjusted_alpha == doctest::Approx(0.00625));
  CHECK_THROWS_AS(two_proportion_ztest(0, 10, 0, 10), Error);
  CHECK_THROWS_AS(two_proportion_ztest(10, 10, 5, 5), Error);
}

TEST_CASE("normal CDF agrees with tabulated values") {
  for (const auto& [x, phi] : oracle::normal_table()) CHECK(std::abs(normal_cdf(x) - phi) < 1e-7);
}

TEST_CASE("report CSVs") {
  const auto r = confusion_and_report(Labels{"a", "b"}, Labels{"a", "a"}, Labels{"a", "b"});
  std::ostringstream cm, metrics;
  write_confusion_csv(cm, r.confusion);
  CHECK(cm.str() == "truth\\pred,a,b\na,1,0\nb,1,0\n");
  write_metrics_csv(metrics, r);
  CHECK(metrics.str().rfind("label,precision,recall,f1,support\n", 0) == 0);
}
