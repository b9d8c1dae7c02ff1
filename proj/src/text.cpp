#include "slanglex/text.hpp"

#include <algorithm>

#include "slanglex/labels.hpp"

namespace slanglex {

namespace {

constexpr std::array<std::string_view, 4> kClassNames = {"Alphabetism", "Blend", "Clipping",
                                                         "Reduplicative"};
constexpr std::array<std::string_view, 4> kClassCodes = {"alp", "ble", "cli", "red"};
constexpr std::array<std::string_view, 10> kSubjectNames = {
    "Sex", "Drugs", "Music", "Name", "College", "Sports", "Internet", "Religion", "Food", "Work"};

}  // namespace

std::string_view to_string(SlangClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<SlangClass> parse_slang_class(std::string_view s) {
  const std::string lower = text::to_lower(text::trim(s));
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (lower == text::to_lower(kClassNames[i]) || lower == kClassCodes[i]) {
      return kSlangClasses[i];
    }
  }
  if (lower == "redup") return SlangClass::Reduplicative;
  return std::nullopt;
}

std::string_view to_string(SubjectLabel s) { return kSubjectNames[static_cast<std::size_t>(s)]; }

std::optional<SubjectLabel> parse_subject(std::string_view s) {
  const std::string lower = text::to_lower(text::trim(s));
  for (std::size_t i = 0; i < kSubjectNames.size(); ++i) {
    if (lower == text::to_lower(kSubjectNames[i])) return kSubjects[i];
  }
  return std::nullopt;
}

namespace text {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_vowel(char c, bool y_is_vowel) {
  switch (c | 0x20) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return true;
    case 'y':
      return y_is_vowel;
    default:
      return false;
  }
}

std::vector<std::string> split_any(std::string_view s, std::string_view delims) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find_first_of(delims, start);
    const auto end = pos == std::string_view::npos ? s.size() : pos;
    if (end > start) out.emplace_back(s.substr(start, end - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_exact(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace text
}  // namespace slanglex
