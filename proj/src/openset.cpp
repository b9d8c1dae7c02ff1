#include "slanglex/openset.hpp"

#include <algorithm>
#include <string>

#include "slanglex/error.hpp"
#include "slanglex/text.hpp"

namespace slanglex::openset {

std::string_view to_string(Score s) { return s == Score::MaxProb ? "maxprob" : "negentropy"; }

std::optional<Score> parse_score(std::string_view s) {
  const auto lower = text::to_lower(s);
  if (lower == "maxprob") return Score::MaxProb;
  if (lower == "negentropy" || lower == "neg-entropy") return Score::NegEntropy;
  return std::nullopt;
}

double score(std::span<const double> p, Score type) {
  if (p.empty()) throw Error("empty probability distribution");
  if (type == Score::MaxProb) return *std::max_element(p.begin(), p.end());
  double s = 0.0;
  for (double v : p) {
    if (v > 0.0) s += v * std::log(v);
  }
  return s;
}

std::size_t argmax(std::span<const double> p) {
  if (p.empty()) throw Error("empty probability distribution");
  return static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
}

std::optional<std::size_t> decide(std::span<const double> p, double delta, Score type) {
  if (std::isnan(delta)) throw Error("reject threshold is NaN");
  const auto k = argmax(p);
  if (score(p, type) <= delta) return std::nullopt;
  return k;
}

void validate_threshold(double delta, Score type, std::size_t classes) {
  if (std::isnan(delta)) throw Error("reject threshold is NaN");
  if (type == Score::MaxProb) {
    if (delta < 0.0 || delta > 1.0) {
      throw Error("maxprob threshold must lie in [0, 1], got " + std::to_string(delta));
    }
    return;
  }
  const double floor = -std::log(static_cast<double>(std::max<std::size_t>(classes, 1)));
  if (delta > 0.0 || delta < floor) {
    throw Error("negentropy threshold must lie in [" + std::to_string(floor) + ", 0], got " +
                std::to_string(delta));
  }
}

}  // namespace slanglex::openset
