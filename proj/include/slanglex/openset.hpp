#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "slanglex/labels.hpp"

namespace slanglex::openset {

/// MaxProb lies in [1/K, 1]; NegEntropy = sum p ln p lies in [-ln K, 0] (nats).
enum class Score { MaxProb, NegEntropy };

std::string_view to_string(Score s);
std::optional<Score> parse_score(std::string_view s);

double score(std::span<const double> distribution, Score type);

/// First index of the maximum.
std::size_t argmax(std::span<const double> distribution);

/// Index of the accepted class, or nullopt when score <= delta. Throws Error
/// if delta is NaN or the distribution is empty.
std::optional<std::size_t> decide(std::span<const double> distribution, double delta, Score type);

/// Throws Error unless delta lies in the attainable range of the score type
/// for `classes` classes: [0, 1] for MaxProb, [-ln K, 0] for NegEntropy.
void validate_threshold(double delta, Score type, std::size_t classes);

/// Open-set labelling of each instance: argmax of the model's distribution
/// over `classes`, replaced by Rejected when its score is at or below delta.
template <typename Label, typename Instance, typename Model>
std::vector<OpenSetLabel<Label>> predict_with_reject(std::span<const Label> classes, Model&& model,
                                                     std::span<const Instance> data, double delta,
                                                     Score type) {
  std::vector<OpenSetLabel<Label>> out;
  out.reserve(data.size());
  for (const auto& instance : data) {
    const std::vector<double> p = model(instance);
    if (auto k = decide(p, delta, type)) {
      out.emplace_back(classes[*k]);
    } else {
      out.push_back(OpenSetLabel<Label>::rejected());
    }
  }
  return out;
}

}  // namespace slanglex::openset
