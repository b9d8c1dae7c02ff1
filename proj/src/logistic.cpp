#include "slanglex/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "slanglex/error.hpp"

namespace slanglex::logistic {

namespace {

void check_problem(const Problem& p, std::span<const double> w) {
  if (p.classes < 1) throw Error("logistic regression needs at least one class");
  if (w.size() != p.classes * (p.features + 1)) throw Error("weight matrix has the wrong size");
  if (p.rows.size() != p.labels.size()) throw Error("row and label counts differ");
  if (p.rows.empty()) throw Error("logistic regression needs at least one row");
}

std::vector<double> scores(std::span<const double> w, std::size_t classes, std::size_t features,
                           const features::SparseRow& row) {
  const std::size_t stride = features + 1;
  std::vector<double> s(classes);
  for (std::size_t k = 0; k < classes; ++k) {
    double z = w[k * stride + features];
    for (const auto& [col, v] : row) z += w[k * stride + col] * v;
    s[k] = z;
  }
  return s;
}

double norm(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

std::vector<double> softmax(std::span<const double> weights, std::size_t classes,
                            std::size_t features, const features::SparseRow& row) {
  auto s = scores(weights, classes, features, row);
  const double mx = *std::max_element(s.begin(), s.end());
  double z = 0.0;
  for (auto& v : s) z += (v = std::exp(v - mx));
  for (auto& v : s) v /= z;
  return s;
}

double objective(const Problem& p, std::span<const double> weights, double l2) {
  check_problem(p, weights);
  double loss = 0.0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto s = scores(weights, p.classes, p.features, p.rows[i]);
    const double mx = *std::max_element(s.begin(), s.end());
    double z = 0.0;
    for (double v : s) z += std::exp(v - mx);
    loss += mx + std::log(z) - s[p.labels[i]];
  }
  const std::size_t stride = p.features + 1;
  double reg = 0.0;
  for (std::size_t k = 0; k < p.classes; ++k) {
    for (std::size_t j = 0; j < p.features; ++j) reg += weights[k * stride + j] * weights[k * stride + j];
  }
  const auto n = static_cast<double>(p.rows.size());
  return loss / n + 0.5 * l2 * reg / n;
}

std::vector<double> gradient(const Problem& p, std::span<const double> weights, double l2) {
  check_problem(p, weights);
  const std::size_t stride = p.features + 1;
  const auto n = static_cast<double>(p.rows.size());
  std::vector<double> g(weights.size(), 0.0);
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    auto prob = softmax(weights, p.classes, p.features, p.rows[i]);
    prob[p.labels[i]] -= 1.0;
    for (std::size_t k = 0; k < p.classes; ++k) {
      const double r = prob[k] / n;
      for (const auto& [col, v] : p.rows[i]) g[k * stride + col] += r * v;
      g[k * stride + p.features] += r;
    }
  }
  for (std::size_t k = 0; k < p.classes; ++k) {
    for (std::size_t j = 0; j < p.features; ++j) g[k * stride + j] += l2 * weights[k * stride + j] / n;
  }
  return g;
}

Fit fit(const Problem& p, const Hyper& hyper) {
  if (!(hyper.l2 >= 0.0)) throw Error("l2 must be non-negative");
  if (!(hyper.lr > 0.0)) throw Error("learning rate must be positive");
  if (hyper.max_epochs < 0) throw Error("max_epochs must be non-negative");

  Fit out;
  out.weights.assign(p.classes * (p.features + 1), 0.0);
  out.objective = objective(p, out.weights, hyper.l2);
  double step = hyper.lr;
  for (int epoch = 1; epoch <= hyper.max_epochs; ++epoch) {
    const auto g = gradient(p, out.weights, hyper.l2);
    out.grad_norm = norm(g);
    if (out.grad_norm <= hyper.tol) break;

    const double g2 = out.grad_norm * out.grad_norm;
    std::vector<double> trial(out.weights.size());
    bool accepted = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      for (std::size_t j = 0; j < trial.size(); ++j) trial[j] = out.weights[j] - step * g[j];
      const double value = objective(p, trial, hyper.l2);
      if (!std::isfinite(value)) {
        if (halvings == 59) throw Error("non-finite loss at epoch " + std::to_string(epoch));
        step *= 0.5;
        continue;
      }
      if (value <= out.objective - 0.5 * step * g2) {
        out.weights.swap(trial);
        out.objective = value;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    out.epochs = epoch;
    if (!std::isfinite(out.objective)) throw Error("non-finite loss at epoch " + std::to_string(epoch));
    if (!accepted) break;  // step underflow: at numerical optimum
    step *= 2.0;
  }
  return out;
}

}  // namespace slanglex::logistic
