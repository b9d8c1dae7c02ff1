#include "doctest.h"

#include "slanglex/error.hpp"
#include "slanglex/features.hpp"

using namespace slanglex;
using namespace slanglex::features;

TEST_CASE("character n-grams") {
  CHECK(extract_char_ngrams("ab", 1, 2) == FeatureMap{{"a", 1}, {"b", 1}, {"ab", 1}});
  CHECK(extract_char_ngrams("boo", 1, 2) == FeatureMap{{"b", 1}, {"o", 2}, {"bo", 1}, {"oo", 1}});
  CHECK(extract_char_ngrams("ab", 1, 5).size() == 3);
  CHECK(extract_char_ngrams("L.O.L.", 1, 5).count("L.") == 1);
  CHECK_THROWS_AS(extract_char_ngrams("", 1, 5), Error);
}

TEST_CASE("morpheme n-grams") {
  const morphology::Segmentation dogcat{"dogcat", {"dog", "cat"}};
  CHECK(extract_morpheme_ngrams(dogcat) == FeatureMap{{"dog", 1}, {"cat", 1}, {"dog+cat", 1}});
  CHECK(extract_morpheme_ngrams({"cat", {"cat"}}) == FeatureMap{{"cat", 1}});
  const auto abc = extract_morpheme_ngrams({"abc", {"a", "b", "c"}});
  CHECK(abc.size() == 6);
  CHECK(abc.count("a+b+c") == 1);
}

TEST_CASE("vocabulary keeps the most frequent features up to the cap") {
  const std::vector<FeatureMap> training{{{"a", 3}, {"b", 1}}, {{"b", 1}, {"c", 2}}, {{"d", 2}}};
  const auto vocab = FeatureVocabulary::fit(FeatureKind::CharNgram, 1, 5, training, 3);
  // a:3, b:2, c:2, d:2 -> a, then b and c by lexicographic tie-break.
  CHECK(vocab.features() == std::vector<std::string>{"a", "b", "c"});
  CHECK(vocab.index("c") == 2u);
  CHECK_FALSE(vocab.index("d").has_value());
  const SparseRow row = vocab.vectorize({{"c", 4}, {"a", 1}, {"zz", 9}});
  CHECK(row == SparseRow{{0, 1.0}, {2, 4.0}});
}
