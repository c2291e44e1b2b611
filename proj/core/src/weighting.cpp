#include "lilaw/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lilaw {

double SoftmaxRow::max_prob() const {
  return *std::max_element(probs.begin(), probs.end());
}

SoftmaxRow make_softmax_row(std::vector<double> probs, std::size_t observed_label) {
  if (probs.size() < 2) throw std::invalid_argument("softmax row: need >= 2 classes");
  if (observed_label >= probs.size())
    throw std::out_of_range("softmax row: label out of range");
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0)
      throw std::invalid_argument("softmax row: invalid probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("softmax row: probabilities do not sum to 1");
  return {std::move(probs), observed_label};
}

double weight_alpha(const SoftmaxRow& row, double alpha) {
  return sigmoid(alpha * row.label_prob() - row.max_prob());
}

double weight_beta(const SoftmaxRow& row, double beta) {
  return sigmoid(-(beta * row.label_prob() - row.max_prob()));
}

double weight_delta(const SoftmaxRow& row, double delta) {
  const double z = delta * row.label_prob() - row.max_prob();
  return std::exp(-z * z / 2.0);
}

double sample_weight(const SoftmaxRow& row, const LilawParams& params) {
  if (!params.enabled[0] && !params.enabled[1] && !params.enabled[2])
    throw std::invalid_argument("sample_weight: at least one weight term must be enabled");
  double w = 0.0;
  if (params.enabled[0]) w += weight_alpha(row, params.alpha);
  if (params.enabled[1]) w += weight_beta(row, params.beta);
  if (params.enabled[2]) w += weight_delta(row, params.delta);
  return w;
}

WeightedLossResult weighted_loss(const std::vector<SoftmaxRow>& rows,
                                 const LilawParams& params, const BaseLoss& loss) {
  if (rows.empty()) throw std::invalid_argument("weighted_loss: empty batch");
  WeightedLossResult out;
  out.per_sample.reserve(rows.size());
  double sum = 0.0;
  for (const SoftmaxRow& row : rows) {
    const double l = base_loss_value(row.probs, row.observed_label, loss);
    const double wl = sample_weight(row, params) * l;
    out.per_sample.push_back(wl);
    sum += wl;
  }
  out.mean = sum / static_cast<double>(rows.size());
  return out;
}

LilawGrads grad_params(const std::vector<SoftmaxRow>& rows,
                       const LilawParams& params, const BaseLoss& loss) {
  if (rows.empty()) throw std::invalid_argument("grad_params: empty batch");
  double ga = 0.0, gb = 0.0, gd = 0.0;
  for (const SoftmaxRow& row : rows) {
    const double l = base_loss_value(row.probs, row.observed_label, loss);
    const double sy = row.label_prob();
    const double smax = row.max_prob();
    if (params.enabled[0]) {
      const double wa = weight_alpha(row, params.alpha);
      ga += l * wa * wa * sy / std::exp(params.alpha * sy - smax);
    }
    if (params.enabled[1]) {
      const double wb = weight_beta(row, params.beta);
      gb += -l * wb * wb * sy / std::exp(-(params.beta * sy - smax));
    }
    if (params.enabled[2]) {
      const double wd = weight_delta(row, params.delta);
      gd += -l * wd * (params.delta * sy - smax) * sy;
    }
  }
  const double n = static_cast<double>(rows.size());
  return {ga / n, gb / n, gd / n};
}

LilawParams meta_update(const LilawParams& params, const LilawGrads& grads) {
  LilawParams next = params;
  if (params.enabled[0]) {
    next.alpha -= params.lr[0] * (grads.d_alpha + params.wd[0] * params.alpha);
    next.alpha = std::max(next.alpha, 1.0);
  }
  if (params.enabled[1])
    next.beta -= params.lr[1] * (grads.d_beta + params.wd[1] * params.beta);
  if (params.enabled[2])
    next.delta -= params.lr[2] * (grads.d_delta + params.wd[2] * params.delta);
  return next;
}

}  // namespace lilaw
