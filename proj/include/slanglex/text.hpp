#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace slanglex::text {

/// ASCII lowercase; other bytes pass through so byte offsets are preserved.
std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
bool is_alpha(char c);
bool is_vowel(char c, bool y_is_vowel = false);

/// Splits on any character in `delims`, dropping empty pieces.
std::vector<std::string> split_any(std::string_view s, std::string_view delims);
/// Splits on one delimiter, keeping empty pieces.
std::vector<std::string> split_exact(std::string_view s, char delim);

}  // namespace slanglex::text
