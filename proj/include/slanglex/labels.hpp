#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace slanglex {

enum class SlangClass { Alphabetism, Blend, Clipping, Reduplicative };

inline constexpr std::array<SlangClass, 4> kSlangClasses = {
    SlangClass::Alphabetism, SlangClass::Blend, SlangClass::Clipping,
    SlangClass::Reduplicative};

std::string_view to_string(SlangClass c);
/// Accepts the full name or the three-letter code (ALP, BLE, CLI, RED), any case.
std::optional<SlangClass> parse_slang_class(std::string_view s);

enum class SubjectLabel { Sex, Drugs, Music, Name, College, Sports, Internet, Religion, Food, Work };

inline constexpr std::array<SubjectLabel, 10> kSubjects = {
    SubjectLabel::Sex,     SubjectLabel::Drugs,    SubjectLabel::Music,
    SubjectLabel::Name,    SubjectLabel::College,  SubjectLabel::Sports,
    SubjectLabel::Internet, SubjectLabel::Religion, SubjectLabel::Food,
    SubjectLabel::Work};

std::string_view to_string(SubjectLabel s);
std::optional<SubjectLabel> parse_subject(std::string_view s);

inline constexpr std::string_view kRejectedName = "Rejected";

/// A known label or the distinguished Rejected outcome of open-set prediction.
template <typename Label>
class OpenSetLabel {
 public:
  OpenSetLabel(Label label) : label_(label) {}  // NOLINT: implicit by intent
  static OpenSetLabel rejected() { return OpenSetLabel(); }

  bool is_rejected() const { return !label_.has_value(); }
  Label label() const { return label_.value(); }

  bool operator==(const OpenSetLabel&) const = default;

 private:
  OpenSetLabel() = default;
  std::optional<Label> label_;
};

template <typename Label>
std::string to_string(const OpenSetLabel<Label>& l) {
  return l.is_rejected() ? std::string(kRejectedName) : std::string(to_string(l.label()));
}

}  // namespace slanglex
