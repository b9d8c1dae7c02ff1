#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "slanglex/report.hpp"

using namespace slanglex::report;

TEST_CASE("numbers print in shortest round-trip form") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(format_number(third)) == third);
}

TEST_CASE("CSV fields are quoted only when needed") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("FNV-1a digests") {
  CHECK(digest_bytes("") == "cbf29ce484222325");
  CHECK(digest_bytes("a") == "af63dc4c8601ec8c");
  const auto path = std::filesystem::temp_directory_path() / "slanglex_digest_test.txt";
  std::ofstream(path, std::ios::binary) << "a";
  CHECK(digest_file(path) == digest_bytes("a"));
  std::filesystem::remove(path);
}

TEST_CASE("provenance header") {
  std::ostringstream out;
  write_header(out, {"0.3.0", 7, {{"slang.jsonl", "0123456789abcdef"}}});
  CHECK(out.str() == "# slanglex 0.3.0 seed=7 input:slang.jsonl=0123456789abcdef\n");
}
