#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lilaw {

/// Per-sample base loss selector. gamma is the focal exponent and is
/// ignored for cross-entropy.
struct BaseLoss {
  enum class Kind { cross_entropy, focal };
  Kind kind = Kind::cross_entropy;
  double gamma = 0.0;

  static BaseLoss ce() { return {Kind::cross_entropy, 0.0}; }
  static BaseLoss focal(double gamma) { return {Kind::focal, gamma}; }
};

/// Numerically stable logistic sigmoid.
double sigmoid(double x);

/// Max-subtracted softmax. Throws on non-finite input or fewer than 2 entries.
std::vector<double> softmax(std::span<const double> logits);

/// -ln(probs[label]), probs[label] clamped to >= 1e-12 before the log.
double cross_entropy(std::span<const double> probs, std::size_t label);

/// -(1 - p)^gamma * ln(p) with the same clamp as cross_entropy.
double focal_loss(std::span<const double> probs, std::size_t label, double gamma);

/// Dispatch on BaseLoss.
double base_loss_value(std::span<const double> probs, std::size_t label,
                       const BaseLoss& loss);

}  // namespace lilaw
