#include "doctest.h"

#include "slanglex/text.hpp"

using namespace slanglex::text;

TEST_CASE("to_lower folds ASCII only and keeps byte length") {
  CHECK(to_lower("LoL") == "lol");
  const std::string accented = "Caf\xc3\xa9";
  CHECK(to_lower(accented).size() == accented.size());
  CHECK(to_lower(accented).substr(0, 3) == "caf");
}

TEST_CASE("trim strips surrounding whitespace") {
  CHECK(trim("  boo \t\n") == "boo");
  CHECK(trim("   ").empty());
  CHECK(trim("") == "");
}

TEST_CASE("vowels and letters") {
  CHECK(is_vowel('a'));
  CHECK(is_vowel('U'));
  CHECK_FALSE(is_vowel('y'));
  CHECK(is_vowel('y', true));
  CHECK(is_alpha('Z'));
  CHECK_FALSE(is_alpha('-'));
}

TEST_CASE("split_any drops empty pieces, split_exact keeps them") {
  CHECK(split_any("flip-flop  boo", " -") == std::vector<std::string>{"flip", "flop", "boo"});
  CHECK(split_any("", ",").empty());
  CHECK(split_exact("a\t\tb", '\t') == std::vector<std::string>{"a", "", "b"});
  CHECK(split_exact("", '\t') == std::vector<std::string>{""});
}
