#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "slanglex/error.hpp"
#include "slanglex/labels.hpp"
#include "slanglex/openset.hpp"

using namespace slanglex;
using namespace slanglex::openset;

namespace {

std::vector<OpenSetLabel<SlangClass>> label_all(const std::vector<std::vector<double>>& rows, double delta,
                                                Score type) {
  std::vector<int> idx(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) idx[i] = static_cast<int>(i);
  return predict_with_reject<SlangClass, int>(std::span<const SlangClass>(kSlangClasses),
                                              [&](int i) { return rows[static_cast<std::size_t>(i)]; },
                                              std::span<const int>(idx), delta, type);
}

const std::vector<std::vector<double>> kRows{
    {0.7, 0.1, 0.1, 0.1}, {0.25, 0.25, 0.25, 0.25}, {0.1, 0.2, 0.3, 0.4}, {1.0, 0.0, 0.0, 0.0}};

}  // namespace

TEST_CASE("MaxProb below the minimum achievable rejects nothing") {
  for (const auto& l : label_all(kRows, 0.2, Score::MaxProb)) CHECK_FALSE(l.is_rejected());
}

TEST_CASE("MaxProb at one rejects everything") {
  for (const auto& l : label_all(kRows, 1.0, Score::MaxProb)) CHECK(l.is_rejected());
}

TEST_CASE("uniform distribution is rejected at 0.5") {
  const auto out = label_all(kRows, 0.5, Score::MaxProb);
  CHECK(out[0] == OpenSetLabel<SlangClass>(SlangClass::Alphabetism));
  CHECK(out[1].is_rejected());
  CHECK(out[2].is_rejected());
  CHECK(to_string(out[1]) == "Rejected");
}

TEST_CASE("negative entropy scores") {
  const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25};
  CHECK(score(uniform, Score::NegEntropy) == doctest::Approx(-std::log(4.0)));
  CHECK(score(std::vector<double>{1.0, 0.0}, Score::NegEntropy) == 0.0);
  CHECK(decide(uniform, -std::log(4.0) - 1e-9, Score::NegEntropy) == 0u);
  CHECK_FALSE(decide(uniform, -std::log(4.0), Score::NegEntropy).has_value());
}

TEST_CASE("argmax takes the first maximum") {
  CHECK(argmax(std::vector<double>{0.4, 0.4, 0.2}) == 0u);
  CHECK(argmax(std::vector<double>{0.1, 0.5, 0.4}) == 1u);
}

TEST_CASE("invalid thresholds") {
  const std::vector<double> p{0.5, 0.5};
  CHECK_THROWS_AS(decide(p, std::numeric_limits<double>::quiet_NaN(), Score::MaxProb), Error);
  CHECK_THROWS_AS(decide(std::vector<double>{}, 0.5, Score::MaxProb), Error);
  CHECK_THROWS_AS(validate_threshold(2.0, Score::MaxProb, 4), Error);
  CHECK_THROWS_AS(validate_threshold(0.1, Score::NegEntropy, 4), Error);
  CHECK_THROWS_AS(validate_threshold(-2.0, Score::NegEntropy, 4), Error);
  CHECK_NOTHROW(validate_threshold(-1.0, Score::NegEntropy, 4));
  CHECK_NOTHROW(validate_threshold(1.0, Score::MaxProb, 4));
  CHECK(parse_score("MAXPROB") == Score::MaxProb);
  CHECK(parse_score("negentropy") == Score::NegEntropy);
  CHECK_FALSE(parse_score("entropy").has_value());
}
