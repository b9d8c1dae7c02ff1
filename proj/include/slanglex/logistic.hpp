#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slanglex/features.hpp"

namespace slanglex::logistic {

// Multinomial logistic regression on sparse rows. Weights are a row-major
// classes x (features + 1) matrix whose last column is the bias.
//
//   J(W) = (1/n) sum_i -log softmax(W x_i)[y_i] + (l2 / 2n) ||W_nobias||^2
//
// The l2 scaling matches the usual C = 1/l2 convention on the summed loss.

struct Problem {
  std::size_t features = 0;
  std::size_t classes = 0;
  std::vector<features::SparseRow> rows;
  std::vector<std::size_t> labels;  // in [0, classes)
};

struct Hyper {
  double l2 = 1.0;
  double lr = 1.0;  // initial step; adapted by backtracking
  int max_epochs = 500;
  double tol = 1e-5;  // stop when ||grad|| <= tol
  std::uint64_t seed = 0;  // full-batch descent draws nothing; kept for interface parity
};

std::vector<double> softmax(std::span<const double> weights, std::size_t classes,
                            std::size_t features, const features::SparseRow& row);

double objective(const Problem& p, std::span<const double> weights, double l2);
std::vector<double> gradient(const Problem& p, std::span<const double> weights, double l2);

struct Fit {
  std::vector<double> weights;
  int epochs = 0;
  double objective = 0.0;
  double grad_norm = 0.0;
};

/// Gradient descent with Armijo backtracking from zero weights. Throws Error
/// naming the epoch if the objective becomes non-finite.
Fit fit(const Problem& p, const Hyper& hyper);

}  // namespace slanglex::logistic
