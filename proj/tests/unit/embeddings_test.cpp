#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "slanglex/embeddings.hpp"
#include "slanglex/error.hpp"

using namespace slanglex;
using namespace slanglex::embeddings;

namespace {

EmbeddingTable random_table(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  EmbeddingTable t(dim);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(dim);
    for (auto& x : v) x = g(rng);
    t.add("w" + std::to_string(i), v, static_cast<std::int64_t>(i + 1));
  }
  return t;
}

}  // namespace

TEST_CASE("usage corpus tokenization") {
  corpus::LexiconEntry thizz;
  thizz.headword = "thizz";
  thizz.examples = {"thizz is NOT pure extacy"};
  const std::vector<corpus::LexiconEntry> one{thizz};
  const auto c = build_usage_corpus(one);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Sentence{"thizz", "is", "not", "pure", "extacy"});
}

TEST_CASE("known multiword headwords become one token") {
  corpus::LexiconEntry med;
  med.headword = "med school";
  med.examples = {"she is in Med School now"};
  corpus::LexiconEntry other;
  other.headword = "cram";
  other.examples = {"cram before med school exams"};
  const std::vector<corpus::LexiconEntry> entries{med, other};
  const auto c = build_usage_corpus(entries);
  CHECK(c[0] == Sentence{"she", "is", "in", "med_school", "now"});
  CHECK(c[1] == Sentence{"cram", "before", "med_school", "exams"});
  CHECK(headword_token("dead presidents") == "dead_presidents");
}

TEST_CASE("cosine") {
  const std::vector<double> x{1, 0}, y{0, 3}, z{-2, 0};
  CHECK(cosine(x, y) == 0.0);
  CHECK(cosine(x, x) == doctest::Approx(1.0));
  CHECK(cosine(x, z) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(cosine(x, std::vector<double>{0, 0}), Error);
  CHECK_THROWS_AS(cosine(x, std::vector<double>{1, 0, 0}), Error);
}

TEST_CASE("nearest neighbours match a full scan") {
  const auto t = random_table(30, 6, 4);
  std::vector<std::vector<double>> vectors;
  for (std::size_t i = 0; i < t.size(); ++i) vectors.emplace_back(t.vector(i).begin(), t.vector(i).end());
  for (std::size_t k : {1u, 5u, 29u, 100u}) {
    const auto got = nearest(t, "w3", k);
    const auto want = oracle::nearest(t.tokens(), vectors, "w3", k);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].first == want[i].first);
      CHECK(got[i].second == doctest::Approx(want[i].second));
    }
  }
  CHECK(nearest(t, "w3", 100).size() == 29);
  const auto two = random_table(2, 3, 1);
  CHECK(nearest(two, "w0", 1)[0].first == "w1");
  CHECK_THROWS_AS(nearest(t, "nope", 3), Error);
}

TEST_CASE("text format round-trips") {
  const auto t = random_table(5, 4, 2);
  std::stringstream buf;
  t.write_text(buf);
  const auto back = EmbeddingTable::read_text(buf);
  CHECK(back.tokens() == t.tokens());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t d = 0; d < 4; ++d) CHECK(back.vector(i)[d] == t.vector(i)[d]);
  }
}

TEST_CASE("table rejects bad rows") {
  EmbeddingTable t(2);
  t.add("a", std::vector<double>{1, 2});
  CHECK_THROWS_AS(t.add("a", std::vector<double>{1, 2}), Error);
  CHECK_THROWS_AS(t.add("b", std::vector<double>{1}), Error);
  CHECK_THROWS_AS(t.add("c", std::vector<double>{NAN, 1}), Error);
  CHECK(t.find_folded("A") == 0u);
}

TEST_CASE("training is bit-identical per seed and fails on an empty vocabulary") {
  const auto corpus = oracle::identical_context_corpus(3, 200);
  TrainingConfig cfg;
  cfg.dimension = 8;
  cfg.epochs = 2;
  cfg.min_count = 1;
  const auto a = train_skipgram(corpus, cfg);
  const auto b = train_skipgram(corpus, cfg);
  CHECK(a.table == b.table);
  CHECK(a.epoch_loss == b.epoch_loss);
  cfg.seed = 2;
  CHECK_FALSE(train_skipgram(corpus, cfg).table == a.table);
  cfg.min_count = 1000000;
  CHECK_THROWS_AS(train_skipgram(corpus, cfg), Error);
}

TEST_CASE("pair gradient matches central differences") {
  const std::vector<double> in{0.3, -0.2, 0.5}, pos{0.1, 0.4, -0.3}, n1{-0.5, 0.2, 0.1}, n2{0.2, 0.2, 0.2};
  const std::vector<std::span<const double>> negs{n1, n2};
  const auto g = sgns_pair_gradient(in, pos, negs);
  const auto numeric = oracle::numeric_gradient(
      [&](const std::vector<double>& x) { return sgns_pair_loss(x, pos, negs); }, in, 1e-6);
  CHECK(oracle::relative_error(g.input, numeric) < 1e-7);
}
