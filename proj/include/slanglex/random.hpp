#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace slanglex {

/// Seeded generator with portable draws. std::mt19937_64's output sequence is
/// fixed by the standard; the distributions below avoid the library's
/// implementation-defined ones so streams are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  template <typename It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(std::distance(first, last));
    for (std::uint64_t i = n; i > 1; --i) {
      std::iter_swap(first + static_cast<std::ptrdiff_t>(i - 1),
                     first + static_cast<std::ptrdiff_t>(below(i)));
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Draws labels i.i.d. from the empirical distribution of a training sample.
template <typename Label>
class EmpiricalSampler {
 public:
  EmpiricalSampler(std::span<const Label> sample, std::uint64_t seed) : rng_(seed) {
    if (sample.empty()) throw std::invalid_argument("empirical sampler needs a non-empty sample");
    std::map<Label, std::size_t> counts;
    for (const auto& l : sample) ++counts[l];
    double acc = 0.0;
    for (const auto& [label, n] : counts) {
      labels_.push_back(label);
      acc += static_cast<double>(n) / static_cast<double>(sample.size());
      cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;
  }

  Label operator()() {
    const double u = rng_.uniform();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return labels_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

  const std::vector<Label>& labels() const { return labels_; }

 private:
  Rng rng_;
  std::vector<Label> labels_;
  std::vector<double> cumulative_;
};

}  // namespace slanglex
