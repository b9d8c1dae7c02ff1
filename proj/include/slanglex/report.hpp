#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slanglex::report {

/// Shortest decimal form that round-trips to the same double.
std::string format_number(double v);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

/// 64-bit FNV-1a digest, 16 lowercase hex digits.
std::string digest_bytes(std::string_view bytes);
std::string digest_file(const std::filesystem::path& path);

struct Provenance {
  std::string tool_version;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, digest)
};

/// `# slanglex <version> seed=<seed> input:<name>=<digest> ...`
void write_header(std::ostream& out, const Provenance& p);

}  // namespace slanglex::report
