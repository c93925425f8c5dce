#pragma once

#include <span>
#include <vector>

#include "agropinn/common.hpp"

namespace agropinn::physloss {

struct LossConfig {
  double lambda1 = 1.0;  ///< weight of the squared yield error term
  double lambda2 = 1.0;  ///< weight of the physics consistency term
  void validate() const;
};

/// Mutually exclusive regimes of a predicted water use value against the
/// demand ceiling: negative, above the ceiling, or within [0, ceiling].
enum class PhysCase { kLower, kUpper, kWithin };

PhysCase phys_case(double eta, double etx);

/// Pointwise physics penalty:
///   eta < 0          ->  eta^2
///   eta > etx        ->  (eta - etx)^2
///   0 <= eta <= etx  ->  (eta - etx)^2
double phys_penalty(double eta, double etx);

/// Derivative of phys_penalty with respect to eta, taken from within the
/// active branch at the boundaries.
double phys_penalty_grad(double eta, double etx);

struct LossBreakdown {
  double total = 0.0;
  double data_term = 0.0;     ///< mean squared yield error over the batch
  double physics_term = 0.0;  ///< mean pointwise penalty over all steps
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

/// Composite training loss over a batch:
///
///   total = lambda1 * mean_i (y_hat_i - y_i)^2
///         + lambda2 * mean_{i,t} phys_penalty(eta[i][t], etx[i][t])
///
/// The physics mean runs over every step of every sequence; sequences may
/// have different lengths but eta and etx must match per sequence.
LossBreakdown total_loss(std::span<const double> y_hat,
                         std::span<const double> y_obs,
                         const std::vector<std::vector<double>>& eta,
                         const std::vector<std::vector<double>>& etx,
                         const LossConfig& config = {});

/// Analytic gradient of total_loss: d/dy_hat per sequence and d/deta per
/// step, written into the provided containers (resized to match).
void total_loss_grad(std::span<const double> y_hat,
                     std::span<const double> y_obs,
                     const std::vector<std::vector<double>>& eta,
                     const std::vector<std::vector<double>>& etx,
                     const LossConfig& config,
                     std::vector<double>& d_y_hat,
                     std::vector<std::vector<double>>& d_eta);

}  // namespace agropinn::physloss
