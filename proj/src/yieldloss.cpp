#include "agropinn/yieldloss.hpp"

#include <algorithm>
#include <string>

namespace agropinn::yieldloss {

namespace {

void check_inputs(std::span<const double> ky, std::span<const double> eta,
                  std::span<const double> etx, double y_x) {
  if (ky.size() != eta.size() || ky.size() != etx.size()) {
    throw DataError("yield_loss: ky, eta, etx must share one length");
  }
  if (ky.empty()) throw DataError("yield_loss: empty step series");
  if (!(y_x > 0.0)) throw ConfigError("yield_loss: y_x must be positive");
  for (std::size_t t = 0; t < ky.size(); ++t) {
    if (ky[t] < 0.0) {
      throw DataError("yield_loss: ky must be >= 0 at step " +
                      std::to_string(t));
    }
    if (eta[t] < 0.0 || etx[t] < 0.0) {
      throw DataError("yield_loss: eta and etx must be >= 0 at step " +
                      std::to_string(t));
    }
  }
}

}  // namespace

YieldLossTrace yield_loss_trace(std::span<const double> ky,
                                std::span<const double> eta,
                                std::span<const double> etx, double y_x,
                                const YieldLossOptions& options) {
  check_inputs(ky, eta, etx, y_x);
  YieldLossTrace trace;
  trace.contributions.resize(ky.size());
  double sum = 0.0;
  for (std::size_t t = 0; t < ky.size(); ++t) {
    const double demand = std::max(etx[t], kDemandFloorMm);
    trace.contributions[t] = ky[t] * (1.0 - eta[t] / demand);
    sum += trace.contributions[t];
  }
  trace.y_l = sum;
  if (options.clamp) {
    const double clamped = std::clamp(sum, 0.0, 1.0);
    trace.clamped = clamped != sum;
    trace.y_l = clamped;
  }
  trace.y_hat = options.multiplicative_form ? trace.y_l * y_x
                                            : (1.0 - trace.y_l) * y_x;
  return trace;
}

double yield_loss_sum(std::span<const double> ky, std::span<const double> eta,
                      std::span<const double> etx) {
  YieldLossOptions options;
  options.clamp = false;
  // y_x does not affect the sum; any positive value satisfies validation.
  return yield_loss_trace(ky, eta, etx, 1.0, options).y_l;
}

}  // namespace agropinn::yieldloss
