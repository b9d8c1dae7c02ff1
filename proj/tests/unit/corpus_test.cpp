#include "doctest.h"

#include <map>
#include <set>
#include <sstream>

#include "slanglex/corpus.hpp"
#include "slanglex/error.hpp"

using namespace slanglex;
using namespace slanglex::corpus;

namespace {

std::vector<GoldClassRecord> records(SlangClass label, int n, const std::string& stem) {
  std::vector<GoldClassRecord> out;
  for (int i = 0; i < n; ++i) out.push_back({stem + std::to_string(i), label, {}});
  return out;
}

LexiconEntry entry(std::int64_t up, std::int64_t down) {
  LexiconEntry e;
  e.headword = "thizz";
  e.upvotes = up;
  e.downvotes = down;
  return e;
}

}  // namespace

TEST_CASE("empty JSONL reads as an empty lexicon") {
  std::istringstream in("");
  CHECK(read_slang_jsonl(in).empty());
}

TEST_CASE("one JSONL line round-trips with its examples") {
  std::istringstream in(
      R"({"headword":"thizz","definitions":["ecstasy"],"examples":["thizz is NOT pure extacy","got thizz"],)"
      R"("upvotes":120,"downvotes":7,"subjects":["Drugs"],"year_added":2004})"
      "\n");
  const auto entries = read_slang_jsonl(in);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].headword == "thizz");
  CHECK(entries[0].examples.size() == 2);
  CHECK(entries[0].votes() == 127);
  REQUIRE(entries[0].subjects.has_value());
  CHECK(entries[0].subjects->count(SubjectLabel::Drugs) == 1);

  std::ostringstream out;
  write_slang_jsonl(out, entries);
  std::istringstream back(out.str());
  CHECK(read_slang_jsonl(back) == entries);
}

TEST_CASE("schema errors name the line and the field") {
  std::istringstream in(
      R"({"headword":"ok","upvotes":1,"downvotes":1})"
      "\n"
      R"({"headword":"bad","upvotes":-3,"downvotes":0})"
      "\n");
  try {
    read_slang_jsonl(in);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 2);
    CHECK(e.field() == "upvotes");
  }

  std::istringstream blank_headword(R"({"headword":"   ","upvotes":1,"downvotes":1})");
  CHECK_THROWS_AS(read_slang_jsonl(blank_headword), SchemaError);
  std::istringstream missing(R"({"upvotes":1,"downvotes":1})");
  CHECK_THROWS_AS(read_slang_jsonl(missing), SchemaError);
  std::istringstream empty_example(R"({"headword":"x","examples":[""],"upvotes":1,"downvotes":1})");
  CHECK_THROWS_AS(read_slang_jsonl(empty_example), SchemaError);
}

TEST_CASE("vote filter is inclusive at the threshold") {
  const std::vector<LexiconEntry> entries{entry(60, 40), entry(50, 49)};
  const auto kept = filter_by_votes(entries, 100);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].votes() == 100);
  CHECK(filter_by_votes(std::vector<LexiconEntry>{}, 100).empty());
}

TEST_CASE("standard TSV collects words and repeated definitions") {
  std::istringstream in("cat\ta small feline\ncat\ta jazz musician\ndog\nDog\tcanine\n");
  const auto lex = read_standard_tsv(in);
  CHECK(lex.words.count("cat") == 1);
  CHECK(lex.definitions.at("cat").size() == 2);
  CHECK(lex.words.size() >= 2);
}

TEST_CASE("gold TSV round-trips and rejects unknown classes") {
  std::istringstream in("# word\tclass\tcomponents\nsextini\tBlend\tsex|martini\nLOL\tALP\n");
  const auto gold = read_gold_tsv(in);
  REQUIRE(gold.size() == 2);
  CHECK(gold[0].label == SlangClass::Blend);
  CHECK(gold[0].components == std::vector<std::string>{"sex", "martini"});
  CHECK(gold[1].label == SlangClass::Alphabetism);
  std::ostringstream out;
  write_gold_tsv(out, gold);
  std::istringstream back(out.str());
  CHECK(read_gold_tsv(back) == gold);

  std::istringstream bad("word\tNonsense\n");
  CHECK_THROWS_AS(read_gold_tsv(bad), Error);
}

TEST_CASE("split_gold sizes") {
  const auto one = records(SlangClass::Clipping, 100, "c");
  CHECK(split_gold(one, 0.10, 3).test.size() == 10);

  std::vector<GoldClassRecord> four;
  for (auto c : kSlangClasses) {
    const auto part = records(c, 25, std::string(to_string(c)));
    four.insert(four.end(), part.begin(), part.end());
  }
  const auto split = split_gold(four, 0.10, 11);
  std::map<SlangClass, int> per_class;
  for (const auto& r : split.test) ++per_class[r.label];
  for (auto c : kSlangClasses) {
    CHECK(per_class[c] >= 2);
    CHECK(per_class[c] <= 3);
  }
  CHECK(split.test.size() + split.train.size() == four.size());
  std::set<std::string> train_words;
  for (const auto& r : split.train) train_words.insert(r.word);
  for (const auto& r : split.test) CHECK(train_words.count(r.word) == 0);
}

TEST_CASE("split_gold is deterministic per seed") {
  const auto data = records(SlangClass::Blend, 40, "b");
  CHECK(split_gold(data, 0.2, 5).test == split_gold(data, 0.2, 5).test);
  CHECK(split_gold(data, 0.2, 5).test != split_gold(data, 0.2, 6).test);
}

TEST_CASE("split_gold rejects a class with fewer than two records") {
  auto data = records(SlangClass::Blend, 10, "b");
  data.push_back({"lol", SlangClass::Alphabetism, {}});
  CHECK_THROWS_AS(split_gold(data, 0.1, 1), Error);
}
