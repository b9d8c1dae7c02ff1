#include "doctest.h"

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "slanglex/error.hpp"
#include "slanglex/morphology.hpp"

using namespace slanglex;
using namespace slanglex::morphology;

namespace {

std::string joined(const Segmentation& s) {
  std::string out;
  for (const auto& m : s.morphs) out += m;
  return out;
}

}  // namespace

TEST_CASE("a hapax stays whole") {
  const std::vector<std::string> words{"cat"};
  const auto model = train_segmenter(words);
  CHECK(segment(model, "cat").morphs == std::vector<std::string>{"cat"});
}

TEST_CASE("dogcat splits into the exhaustive optimum") {
  const std::vector<std::string> words{"dogcat", "catdog", "dog", "cat"};
  const auto model = train_segmenter(words);
  CHECK(segment(model, "dogcat").morphs == std::vector<std::string>{"dog", "cat"});
  CHECK(segment(model, "catdog").morphs == std::vector<std::string>{"cat", "dog"});
  const auto best = oracle::mdl_exhaustive(words);
  CHECK(model.total_code_length() == doctest::Approx(best.cost).epsilon(1e-12));
}

TEST_CASE("code length matches the independent formula") {
  const std::map<std::string, std::int64_t> counts{{"dog", 3}, {"cat", 3}};
  const auto cl = code_length(counts, 6, 0.0, 2);
  const std::vector<std::vector<std::string>> seg{{"dog", "cat"}, {"cat", "dog"}, {"dog"}, {"cat"}};
  CHECK(cl.total() == doctest::Approx(oracle::mdl_cost(seg, {1, 1, 1, 1}, 6, 0.0)));
}

TEST_CASE("segmentation invariants") {
  const std::vector<std::string> words{"dogcat", "catdog", "dog", "cat", "hotdog", "hotcat"};
  const auto model = train_segmenter(words);
  for (const char* w : {"x", "DogCat", "unseenword", "a-b c", "dogdogdog"}) {
    const auto s = segment(model, w);
    CHECK(joined(s) == w);
    CHECK_FALSE(s.morphs.empty());
  }
  CHECK(segment(model, "q").morphs.size() == 1);
  CHECK(segment(model, "DogCat").morphs == std::vector<std::string>{"Dog", "Cat"});
}

TEST_CASE("training is deterministic and rejects empty input") {
  const std::vector<std::string> words{"dogcat", "catdog", "dog", "cat", "hotdog"};
  std::ostringstream a, b;
  train_segmenter(words).write_tsv(a);
  train_segmenter(words).write_tsv(b);
  CHECK(a.str() == b.str());
  CHECK_THROWS_AS(train_segmenter(std::vector<std::string>{}), Error);
}

TEST_CASE("segmenter TSV round-trips") {
  const std::vector<std::string> words{"dogcat", "catdog", "dog", "cat"};
  const auto model = train_segmenter(words);
  std::ostringstream out;
  model.write_tsv(out);
  std::istringstream in(out.str());
  const auto back = SegmenterModel::read_tsv(in);
  CHECK(segment(back, "dogcat").morphs == segment(model, "dogcat").morphs);
  CHECK(back.total_code_length() == doctest::Approx(model.total_code_length()));
}

TEST_CASE("affix distributions") {
  const std::vector<Segmentation> segs{{"ab", {"a", "b"}}, {"ac", {"a", "c"}}};
  const auto pre = affix_distribution(segs, AffixSide::Prefix);
  REQUIRE(pre.entries.size() == 1);
  CHECK(pre.entries[0].first == "a");
  CHECK(pre.entries[0].second == 1.0);
  CHECK(pre.mass_at(1) == 1.0);

  const auto suf = affix_distribution(segs, AffixSide::Suffix);
  REQUIRE(suf.entries.size() == 2);
  CHECK(suf.entries[0] == std::pair<std::string, double>{"b", 0.5});
  CHECK(suf.entries[1] == std::pair<std::string, double>{"c", 0.5});
  CHECK(suf.mass_at(1) == 0.5);
  CHECK(suf.mass_at(10) == 1.0);
}
