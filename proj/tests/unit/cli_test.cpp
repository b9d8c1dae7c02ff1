#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "slanglex/cli.hpp"
#include "slanglex/corpus.hpp"
#include "slanglex/error.hpp"
#include "slanglex/phonology.hpp"

namespace fs = std::filesystem;
using namespace slanglex;

namespace {

const fs::path kData = SLANGLEX_DATA_DIR;
const std::string kSlang = (kData / "fixtures" / "slang.jsonl").string();
const std::string kStandard = (kData / "fixtures" / "standard.tsv").string();

fs::path work_dir(const std::string& name) {
  const char* env = std::getenv("SLANGLEX_TEST_WORK");
  const fs::path dir = fs::path(env ? env : fs::temp_directory_path() / "slanglex_cli_test") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

// Report body without the provenance line.
std::string body(const fs::path& p) {
  const auto text = read_file(p);
  REQUIRE(text.rfind("# slanglex ", 0) == 0);
  return text.substr(text.find('\n') + 1);
}

std::string library_odds(double smoothing) {
  const auto table = phonology::PronouncingTable::load(kData / "cmudict" / "cmudict.dict");
  const auto rules = phonology::RuleTable::load(kData / "g2p_rules.tsv");
  std::vector<phonology::PhonemeSequence> slang, standard;
  for (const auto& e : corpus::load_slang_jsonl(kSlang)) {
    try {
      slang.push_back(phonology::to_phonemes(e.headword, table, rules));
    } catch (const Error&) {
    }
  }
  for (const auto& w : corpus::load_standard_tsv(kStandard).words) {
    try {
      standard.push_back(phonology::to_phonemes(w, table, rules));
    } catch (const Error&) {
    }
  }
  std::ostringstream o;
  phonology::write_odds_csv(o, phonology::odds_ratio_ranking(phonology::phoneme_distribution(slang),
                                                             phonology::phoneme_distribution(standard), smoothing));
  return o.str();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == cli::kUsageError);
  CHECK(run({"frobnicate"}).status == cli::kUsageError);
  CHECK(run({"phonology", "--slang", kSlang, "--standard", kStandard, "--bogus"}).status == cli::kUsageError);
  CHECK(run({"phonology", "--slang", "missing.jsonl", "--standard", kStandard}).status == cli::kUsageError);
  CHECK(run({"classes", "predict", "--delta", "2.0", "--score", "maxprob"}).status == cli::kUsageError);
  CHECK(run({"classes", "predict", "--delta", "0.1", "--score", "negentropy"}).status == cli::kUsageError);
  CHECK(run({"classes", "predict", "--delta", "0.5", "--score", "sometimes"}).status == cli::kUsageError);
  CHECK(run({"pipeline"}).status == cli::kUsageError);
  CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("analysis failures exit 1") {
  const auto dir = work_dir("analysis_error");
  std::ofstream(dir / "broken.jsonl") << "{\"headword\":\"x\",\"upvotes\":-3,\"downvotes\":0}\n";
  const auto r = run({"ingest", "--out", (dir / "out.jsonl").string(), (dir / "broken.jsonl").string()});
  CHECK(r.status == cli::kAnalysisError);
  CHECK(r.err.find("line 1") != std::string::npos);
}

TEST_CASE("phonology CSV rows equal direct library output") {
  const auto dir = work_dir("phonology");
  const auto r = run({"phonology", "--slang", kSlang, "--standard", kStandard, "--out", dir.string()});
  REQUIRE(r.status == cli::kOk);
  CHECK(r.out.rfind("phonology ", 0) == 0);
  CHECK(body(dir / "phoneme_odds.csv") == library_odds(1e-6));
  CHECK(fs::exists(dir / "manners.csv"));
  CHECK(fs::exists(dir / "pronunciations.tsv"));
}

TEST_CASE("flags override the config file, which overrides defaults") {
  const auto dir = work_dir("config");
  const auto config = dir / "phon.conf";
  std::ofstream(config) << "# smoothing for sparse phonemes\nsmoothing = 0.5\n\n";

  const auto from_config = dir / "from_config";
  REQUIRE(run({"phonology", "--config", config.string(), "--slang", kSlang, "--standard", kStandard, "--out",
               from_config.string()})
              .status == cli::kOk);
  CHECK(body(from_config / "phoneme_odds.csv") == library_odds(0.5));

  const auto from_flag = dir / "from_flag";
  REQUIRE(run({"phonology", "--config", config.string(), "--smoothing", "0.001", "--slang", kSlang, "--standard",
               kStandard, "--out", from_flag.string()})
              .status == cli::kOk);
  CHECK(body(from_flag / "phoneme_odds.csv") == library_odds(0.001));

  const auto bad = dir / "bad.conf";
  std::ofstream(bad) << "no-such-option=1\n";
  CHECK(run({"phonology", "--config", bad.string(), "--slang", kSlang, "--standard", kStandard, "--out",
             (dir / "bad").string()})
            .status == cli::kUsageError);
  CHECK(run({"phonology", "--config", (dir / "absent.conf").string(), "--slang", kSlang, "--standard", kStandard})
            .status == cli::kUsageError);
}

TEST_CASE("ingest filters by votes") {
  const auto dir = work_dir("ingest");
  const auto out = dir / "corpus.jsonl";
  REQUIRE(run({"ingest", "--min-votes", "100", "--out", out.string(), kSlang}).status == cli::kOk);
  const auto kept = corpus::load_slang_jsonl(out);
  CHECK_FALSE(kept.empty());
  for (const auto& e : kept) CHECK(e.votes() >= 100);
  CHECK(kept.size() <= corpus::load_slang_jsonl(kSlang).size());
}

TEST_CASE("classifier train, predict and reject through the CLI") {
  const auto dir = work_dir("classes");
  const auto gold = (kData / "fixtures" / "gold.tsv").string();
  const auto model = (dir / "model.slx").string();
  REQUIRE(run({"classes", "train", "--gold", gold, "--model", model, "--out", dir.string()}).status == cli::kOk);
  CHECK(fs::exists(dir / "top_features.csv"));

  const auto accept = dir / "accept";
  REQUIRE(run({"classes", "predict", "--model", model, "--words", gold, "--delta", "0", "--out", accept.string()})
              .status == cli::kOk);
  CHECK(body(accept / "predictions.csv").find("Rejected") == std::string::npos);

  const auto reject = dir / "reject";
  REQUIRE(run({"classes", "predict", "--model", model, "--words", gold, "--delta", "1", "--out", reject.string()})
              .status == cli::kOk);
  const auto rows = body(reject / "predictions.csv");
  std::istringstream lines(rows);
  std::string line;
  std::getline(lines, line);  // column header
  while (std::getline(lines, line)) CHECK(line.find(",Rejected,") != std::string::npos);
}

TEST_CASE("fixture pipeline smoke run") {
  const auto dir = work_dir("pipeline");
  const auto r = run({"pipeline", "--fixtures", "--seed", "3", "--out", dir.string()});
  REQUIRE(r.status == cli::kOk);
  CHECK(fs::exists(dir / "summary.txt"));
  CHECK(r.out.find("classes-eval ") != std::string::npos);
}

TEST_CASE("classes eval sweeps the cross-class threshold grid") {
  const auto dir = work_dir("eval");
  const auto gold = (kData / "fixtures" / "gold.tsv").string();
  REQUIRE(run({"classes", "eval", "--gold", gold, "--delta", "0.5", "--sweep-steps", "2", "--out", dir.string()})
              .status == cli::kOk);
  std::istringstream rows(body(dir / "openset_sweep.csv"));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(rows, line)) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "delta,Alphabetism,Blend,Clipping,Reduplicative,mean");
  CHECK(lines[1].rfind("0.333", 0) == 0);
  CHECK(lines[3].rfind("1,", 0) == 0);
  CHECK(run({"classes", "eval", "--gold", gold, "--delta", "0.2", "--score", "negentropy"}).status ==
        cli::kUsageError);
}
