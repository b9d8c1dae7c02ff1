#include "slanglex/patterns.hpp"

#include <array>

#include "slanglex/error.hpp"
#include "slanglex/text.hpp"

namespace slanglex::slangclass {

std::string_view to_string(ClippingType t) {
  static constexpr std::array<std::string_view, 4> names = {"Back", "Fore", "Compound", "Unknown"};
  return names[static_cast<std::size_t>(t)];
}

std::string_view to_string(ReduplicativeType t) {
  static constexpr std::array<std::string_view, 5> names = {"DUP", "EX_VOW", "EX_CONS", "SHM", "UNK"};
  return names[static_cast<std::size_t>(t)];
}

ClippingType classify_clipping(std::string_view clip, std::string_view source) {
  const std::string c = text::to_lower(text::trim(clip));
  const std::string s = text::to_lower(text::trim(source));
  if (c.empty() || s.empty()) throw Error("clipping and source must be non-empty");
  if (s.find_first_of(" \t") != std::string::npos) return ClippingType::Compound;
  if (s.starts_with(c)) return ClippingType::Back;
  if (s.ends_with(c)) return ClippingType::Fore;
  return ClippingType::Unknown;
}

std::pair<std::string, std::string> split_reduplicative(std::string_view pair) {
  auto parts = text::split_any(pair, "- \t");
  if (parts.size() != 2) {
    throw Error("expected exactly two parts in '" + std::string(pair) + "', got " +
                std::to_string(parts.size()));
  }
  return {std::move(parts[0]), std::move(parts[1])};
}

ReduplicativeType classify_reduplicative(std::string_view pair, bool y_is_vowel) {
  auto [a, b] = split_reduplicative(pair);
  a = text::to_lower(a);
  b = text::to_lower(b);
  if (a == b) return ReduplicativeType::Duplication;

  std::size_t onset = 0;
  while (onset < a.size() && !text::is_vowel(a[onset], y_is_vowel)) ++onset;
  const std::string tail = a.substr(onset);
  if (b == "schm" + tail || b == "shm" + tail) return ReduplicativeType::Shm;

  if (a.size() != b.size()) return ReduplicativeType::Unknown;
  bool all_vowel = true, all_consonant = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    const bool va = text::is_vowel(a[i], y_is_vowel), vb = text::is_vowel(b[i], y_is_vowel);
    const bool la = text::is_alpha(a[i]), lb = text::is_alpha(b[i]);
    all_vowel = all_vowel && va && vb;
    all_consonant = all_consonant && la && lb && !va && !vb;
  }
  if (all_vowel) return ReduplicativeType::ExchangeVowel;
  if (all_consonant) return ReduplicativeType::ExchangeConsonant;
  return ReduplicativeType::Unknown;
}

SubstitutionStats substitution_stats(std::span<const std::pair<std::string, std::string>> pairs) {
  SubstitutionStats out;
  std::map<char, std::map<char, std::int64_t>> tallies;
  for (const auto& [first, second] : pairs) {
    if (first.size() != second.size()) {
      ++out.skipped_unequal;
      continue;
    }
    const auto a = text::to_lower(first), b = text::to_lower(second);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      ++tallies[a[i]][b[i]];
      ++out.source_counts[a[i]];
    }
  }
  for (const auto& [src, reps] : tallies) {
    const auto total = static_cast<double>(out.source_counts[src]);
    for (const auto& [rep, n] : reps) out.replacements[src][rep] = static_cast<double>(n) / total;
  }
  return out;
}

std::string blend_suffix(std::string_view blend, std::string_view final_component) {
  const auto a = text::to_lower(blend), b = text::to_lower(final_component);
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
  return a.substr(a.size() - n);
}

BlendSuffixStats blend_suffix_stats(std::span<const corpus::GoldClassRecord> blends, std::size_t k) {
  BlendSuffixStats out;
  std::map<std::string, std::int64_t> counts;
  for (const auto& r : blends) {
    if (r.label != SlangClass::Blend) continue;
    if (r.components.empty()) {
      ++out.skipped_no_components;
      continue;
    }
    auto suffix = blend_suffix(r.word, r.components.back());
    if (suffix.empty()) {
      ++out.skipped_no_overlap;
      continue;
    }
    ++counts[suffix];
    ++out.used;
  }
  if (out.used == 0) throw Error("no blend with components and a shared suffix");
  out.distribution =
      morphology::top_affixes(counts, static_cast<std::int64_t>(out.used), morphology::AffixSide::Suffix, k);
  return out;
}

}  // namespace slanglex::slangclass
