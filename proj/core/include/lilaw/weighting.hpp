#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lilaw/losses.hpp"

namespace lilaw {

/// One sample's softmax output together with its observed (possibly noisy)
/// label. The pair (probs[observed_label], max(probs)) is the entire input
/// to the weighting scheme.
struct SoftmaxRow {
  std::vector<double> probs;
  std::size_t observed_label = 0;

  double label_prob() const { return probs[observed_label]; }
  double max_prob() const;
};

/// Throws if probs do not sum to 1 within 1e-9 or the label is out of range.
SoftmaxRow make_softmax_row(std::vector<double> probs, std::size_t observed_label);

/// The three learnable weighting scalars with their per-parameter update
/// hyperparameters and an enable mask for ablations (order: alpha, beta,
/// delta). alpha is kept >= 1 by clamping after every update.
struct LilawParams {
  double alpha = 10.0;
  double beta = 2.0;
  double delta = 6.0;
  std::array<double, 3> lr = {0.005, 0.005, 0.005};
  std::array<double, 3> wd = {0.0001, 0.0001, 0.0001};
  std::array<bool, 3> enabled = {true, true, true};
};

/// Batch-mean gradients of the weighted loss in (alpha, beta, delta).
struct LilawGrads {
  double d_alpha = 0.0;
  double d_beta = 0.0;
  double d_delta = 0.0;
};

// The three weight terms. For valid rows and alpha >= 1:
//   sigma(-1) <= weight_alpha <= sigma(alpha - 1)
//   sigma(1 - beta) <= weight_beta <= sigma(1)
//   0 < weight_delta <= 1, with equality iff delta * s[y] == max(s)
double weight_alpha(const SoftmaxRow& row, double alpha);
double weight_beta(const SoftmaxRow& row, double beta);
double weight_delta(const SoftmaxRow& row, double delta);

/// Sum of the enabled weight terms. Throws if all three are disabled.
double sample_weight(const SoftmaxRow& row, const LilawParams& params);

struct WeightedLossResult {
  std::vector<double> per_sample;  // W(s_i, y_i) * l_i
  double mean = 0.0;
};

WeightedLossResult weighted_loss(const std::vector<SoftmaxRow>& rows,
                                 const LilawParams& params, const BaseLoss& loss);

/// Analytic batch-mean gradients of the weighted loss. Each parameter's
/// gradient flows only through its own weight term; the base losses are
/// constants with respect to alpha, beta, delta. Disabled terms contribute
/// zero gradient. d_alpha >= 0 and d_beta <= 0 for nonnegative losses.
LilawGrads grad_params(const std::vector<SoftmaxRow>& rows,
                       const LilawParams& params, const BaseLoss& loss);

/// One manual gradient-descent step p -= lr * (grad + wd * p) on each
/// enabled parameter, then alpha is clamped to >= 1.
LilawParams meta_update(const LilawParams& params, const LilawGrads& grads);

}  // namespace lilaw
