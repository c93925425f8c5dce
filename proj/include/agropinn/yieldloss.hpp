#pragma once

#include <span>
#include <vector>

#include "agropinn/common.hpp"

namespace agropinn::yieldloss {

/// Per-step relative yield loss contributions, their sum, and the resulting
/// yield estimate.
struct YieldLossTrace {
  std::vector<double> contributions;
  double y_l = 0.0;
  double y_hat = 0.0;
  bool clamped = false;  ///< true when y_l was clamped into [0, 1]
};

struct YieldLossOptions {
  /// Clamp the summed loss into [0, 1] before computing the yield.
  bool clamp = true;
  /// Multiplicative form y_hat = y_l * y_x instead of the standard
  /// complement form y_hat = (1 - y_l) * y_x. Kept for comparability with
  /// conventions that fold the complement into y_l itself.
  bool multiplicative_form = false;
};

/// Water-driven yield loss over acquisition steps:
///
///   contribution[t] = ky[t] * (1 - eta[t] / etx[t])
///   y_l   = sum_t contribution[t]
///   y_hat = (1 - y_l) * y_x
///
/// etx is floored at kDemandFloorMm before division. Spans must share one
/// length; eta and etx must be non-negative, y_x positive.
YieldLossTrace yield_loss_trace(std::span<const double> ky,
                                std::span<const double> eta,
                                std::span<const double> etx, double y_x,
                                const YieldLossOptions& options = {});

/// Convenience wrapper returning only the summed loss (unclamped).
double yield_loss_sum(std::span<const double> ky, std::span<const double> eta,
                      std::span<const double> etx);

}  // namespace agropinn::yieldloss
