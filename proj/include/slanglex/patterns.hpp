#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slanglex/corpus.hpp"
#include "slanglex/morphology.hpp"

namespace slanglex::slangclass {

enum class ClippingType { Back, Fore, Compound, Unknown };
enum class ReduplicativeType { Duplication, ExchangeVowel, ExchangeConsonant, Shm, Unknown };

std::string_view to_string(ClippingType t);
/// DUP, EX_VOW, EX_CONS, SHM, UNK
std::string_view to_string(ReduplicativeType t);

/// Case-insensitive. A source containing whitespace makes a Compound clipping;
/// otherwise a prefix of the source is Back, a suffix is Fore. Precedence is
/// Compound > Back > Fore. Throws Error on empty input.
ClippingType classify_clipping(std::string_view clip, std::string_view source);

/// Splits an echo pair on a hyphen or whitespace run. Throws Error unless
/// exactly two non-empty parts result.
std::pair<std::string, std::string> split_reduplicative(std::string_view pair);

/// DUP > SHM > EX_VOW > EX_CONS > UNK. EX_VOW needs equal-length parts whose
/// differing positions hold vowels on both sides; EX_CONS the same with
/// consonants. Mixed differences are UNK.
ReduplicativeType classify_reduplicative(std::string_view pair, bool y_is_vowel = false);

struct SubstitutionStats {
  /// source letter -> (replacement letter -> probability)
  std::map<char, std::map<char, double>> replacements;
  std::map<char, std::int64_t> source_counts;
  std::size_t skipped_unequal = 0;
};

/// Tallies per-position letter replacements from the first to the second part
/// of equal-length pairs (case-insensitive), normalised per source letter.
SubstitutionStats substitution_stats(std::span<const std::pair<std::string, std::string>> pairs);

/// Longest common suffix of the blend and its final component, lowercased.
std::string blend_suffix(std::string_view blend, std::string_view final_component);

struct BlendSuffixStats {
  morphology::AffixDistribution distribution;
  std::size_t used = 0;
  std::size_t skipped_no_components = 0;
  std::size_t skipped_no_overlap = 0;
};

/// Top-k blend suffixes over records labelled Blend; other labels are ignored.
BlendSuffixStats blend_suffix_stats(std::span<const corpus::GoldClassRecord> blends, std::size_t k = 5);

}  // namespace slanglex::slangclass
