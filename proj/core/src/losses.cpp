#include "lilaw/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lilaw {

namespace {
constexpr double kProbFloor = 1e-12;
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

std::vector<double> softmax(std::span<const double> logits) {
  if (logits.size() < 2) throw std::invalid_argument("softmax: need >= 2 classes");
  double m = logits[0];
  for (double v : logits) {
    if (!std::isfinite(v)) throw std::invalid_argument("softmax: non-finite logit");
    m = std::max(m, v);
  }
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - m);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

double cross_entropy(std::span<const double> probs, std::size_t label) {
  if (label >= probs.size()) throw std::out_of_range("cross_entropy: label out of range");
  return -std::log(std::max(probs[label], kProbFloor));
}

double focal_loss(std::span<const double> probs, std::size_t label, double gamma) {
  if (label >= probs.size()) throw std::out_of_range("focal_loss: label out of range");
  if (gamma < 0.0) throw std::invalid_argument("focal_loss: gamma must be >= 0");
  const double p = std::max(probs[label], kProbFloor);
  return -std::pow(1.0 - p, gamma) * std::log(p);
}

double base_loss_value(std::span<const double> probs, std::size_t label,
                       const BaseLoss& loss) {
  return loss.kind == BaseLoss::Kind::cross_entropy
             ? cross_entropy(probs, label)
             : focal_loss(probs, label, loss.gamma);
}

}  // namespace lilaw
