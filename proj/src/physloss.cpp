#include "agropinn/physloss.hpp"

#include <cmath>
#include <string>

namespace agropinn::physloss {

void LossConfig::validate() const {
  if (lambda1 < 0.0 || lambda2 < 0.0) {
    throw ConfigError("loss: lambda1 and lambda2 must be >= 0");
  }
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2)) {
    throw ConfigError("loss: lambda weights must be finite");
  }
}

PhysCase phys_case(double eta, double etx) {
  if (eta < 0.0) return PhysCase::kLower;
  if (eta > etx) return PhysCase::kUpper;
  return PhysCase::kWithin;
}

double phys_penalty(double eta, double etx) {
  switch (phys_case(eta, etx)) {
    case PhysCase::kLower:
      return eta * eta;
    case PhysCase::kUpper:
    case PhysCase::kWithin: {
      const double d = eta - etx;
      return d * d;
    }
  }
  return 0.0;
}

double phys_penalty_grad(double eta, double etx) {
  switch (phys_case(eta, etx)) {
    case PhysCase::kLower:
      return 2.0 * eta;
    case PhysCase::kUpper:
    case PhysCase::kWithin:
      return 2.0 * (eta - etx);
  }
  return 0.0;
}

namespace {

std::size_t check_shapes(std::span<const double> y_hat,
                         std::span<const double> y_obs,
                         const std::vector<std::vector<double>>& eta,
                         const std::vector<std::vector<double>>& etx) {
  if (y_hat.size() != y_obs.size() || y_hat.size() != eta.size() ||
      y_hat.size() != etx.size()) {
    throw DataError("total_loss: batch sizes disagree");
  }
  if (y_hat.empty()) throw DataError("total_loss: empty batch");
  std::size_t steps = 0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i].size() != etx[i].size()) {
      throw DataError("total_loss: eta/etx length mismatch in sequence " +
                      std::to_string(i));
    }
    if (eta[i].empty()) {
      throw DataError("total_loss: empty sequence " + std::to_string(i));
    }
    steps += eta[i].size();
  }
  return steps;
}

}  // namespace

LossBreakdown total_loss(std::span<const double> y_hat,
                         std::span<const double> y_obs,
                         const std::vector<std::vector<double>>& eta,
                         const std::vector<std::vector<double>>& etx,
                         const LossConfig& config) {
  config.validate();
  const std::size_t steps = check_shapes(y_hat, y_obs, eta, etx);
  LossBreakdown out;
  out.lambda1 = config.lambda1;
  out.lambda2 = config.lambda2;
  double sq = 0.0;
  for (std::size_t i = 0; i < y_hat.size(); ++i) {
    const double d = y_hat[i] - y_obs[i];
    sq += d * d;
  }
  out.data_term = sq / static_cast<double>(y_hat.size());
  double pen = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    for (std::size_t t = 0; t < eta[i].size(); ++t) {
      pen += phys_penalty(eta[i][t], etx[i][t]);
    }
  }
  out.physics_term = pen / static_cast<double>(steps);
  out.total = config.lambda1 * out.data_term + config.lambda2 * out.physics_term;
  if (!std::isfinite(out.total)) {
    throw NumericError("total_loss: non-finite loss");
  }
  return out;
}

void total_loss_grad(std::span<const double> y_hat,
                     std::span<const double> y_obs,
                     const std::vector<std::vector<double>>& eta,
                     const std::vector<std::vector<double>>& etx,
                     const LossConfig& config,
                     std::vector<double>& d_y_hat,
                     std::vector<std::vector<double>>& d_eta) {
  config.validate();
  const std::size_t steps = check_shapes(y_hat, y_obs, eta, etx);
  const double n = static_cast<double>(y_hat.size());
  d_y_hat.resize(y_hat.size());
  for (std::size_t i = 0; i < y_hat.size(); ++i) {
    d_y_hat[i] = config.lambda1 * 2.0 * (y_hat[i] - y_obs[i]) / n;
  }
  const double steps_n = static_cast<double>(steps);
  d_eta.resize(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) {
    d_eta[i].resize(eta[i].size());
    for (std::size_t t = 0; t < eta[i].size(); ++t) {
      d_eta[i][t] =
          config.lambda2 * phys_penalty_grad(eta[i][t], etx[i][t]) / steps_n;
    }
  }
}

}  // namespace agropinn::physloss
