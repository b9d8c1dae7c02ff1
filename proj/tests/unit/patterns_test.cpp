#include "doctest.h"

#include "slanglex/error.hpp"
#include "slanglex/patterns.hpp"

using namespace slanglex;
using namespace slanglex::slangclass;

TEST_CASE("clipping types") {
  CHECK(classify_clipping("nigg", "nigger") == ClippingType::Back);
  CHECK(classify_clipping("roach", "cockroach") == ClippingType::Fore);
  CHECK(classify_clipping("slowmo", "slow motion") == ClippingType::Compound);
  CHECK(classify_clipping("Prof", "professor") == ClippingType::Back);
  CHECK(classify_clipping("flu", "influenza") == ClippingType::Unknown);
  CHECK(to_string(ClippingType::Fore) == "Fore");
}

TEST_CASE("reduplicative types") {
  CHECK(classify_reduplicative("boo boo") == ReduplicativeType::Duplication);
  CHECK(classify_reduplicative("flip-flop") == ReduplicativeType::ExchangeVowel);
  CHECK(classify_reduplicative("bitsy-witsy") == ReduplicativeType::ExchangeConsonant);
  CHECK(classify_reduplicative("moodle-schmoodle") == ReduplicativeType::Shm);
  CHECK(classify_reduplicative("fancy-shmancy") == ReduplicativeType::Shm);
  CHECK(classify_reduplicative("teenie-weenie") == ReduplicativeType::ExchangeConsonant);
  // Mixed vowel and consonant differences.
  CHECK(classify_reduplicative("hodge-podgy") == ReduplicativeType::Unknown);
  CHECK(classify_reduplicative("willy-nilly") == ReduplicativeType::ExchangeConsonant);
  CHECK_THROWS_AS(classify_reduplicative("boo"), Error);
  CHECK_THROWS_AS(classify_reduplicative("a b c"), Error);
}

TEST_CASE("letter substitutions") {
  const std::vector<std::pair<std::string, std::string>> bing{{"bing", "bang"}};
  const auto s = substitution_stats(bing);
  CHECK(s.replacements.at('i').at('a') == 1.0);
  CHECK(s.replacements.size() == 1);

  const std::vector<std::pair<std::string, std::string>> teenie{{"teenie", "weenie"}};
  CHECK(substitution_stats(teenie).replacements.at('t').at('w') == 1.0);

  // Hand tally: t->w twice, t->b once; i->a once; one pair skipped.
  const std::vector<std::pair<std::string, std::string>> mixed{
      {"teenie", "weenie"}, {"tiny", "winy"}, {"tee", "bee"}, {"bing", "bang"}, {"ab", "abc"}};
  const auto m = substitution_stats(mixed);
  CHECK(m.replacements.at('t').at('w') == doctest::Approx(2.0 / 3.0));
  CHECK(m.replacements.at('t').at('b') == doctest::Approx(1.0 / 3.0));
  CHECK(m.source_counts.at('t') == 3);
  CHECK(m.replacements.at('i').at('a') == 1.0);
  CHECK(m.skipped_unequal == 1);
}

TEST_CASE("blend suffixes") {
  CHECK(blend_suffix("sextini", "martini") == "tini");
  const std::vector<corpus::GoldClassRecord> one{{"sextini", SlangClass::Blend, {"sex", "martini"}}};
  const auto s = blend_suffix_stats(one);
  REQUIRE(s.distribution.entries.size() == 1);
  CHECK(s.distribution.entries[0].first == "tini");
  CHECK(s.distribution.entries[0].second == 1.0);

  const std::vector<corpus::GoldClassRecord> mixed{{"sextini", SlangClass::Blend, {"sex", "martini"}},
                                                   {"brunch", SlangClass::Blend, {"breakfast", "lunch"}},
                                                   {"smog", SlangClass::Blend, {}},
                                                   {"LOL", SlangClass::Alphabetism, {}}};
  const auto m = blend_suffix_stats(mixed);
  CHECK(m.used == 2);
  CHECK(m.skipped_no_components == 1);
}
