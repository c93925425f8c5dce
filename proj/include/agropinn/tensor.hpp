#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "agropinn/common.hpp"

namespace agropinn::nn {

/// Dense row-major tensor. Rank is the shape length; most operations here
/// work on rank-2 views.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> v;

  Tensor() = default;
  static Tensor zeros(std::initializer_list<std::size_t> dims);
  static Tensor zeros2(std::size_t rows, std::size_t cols);

  std::size_t size() const { return v.size(); }
  std::size_t rows() const;
  std::size_t cols() const;
  double& at(std::size_t i, std::size_t j);
  double at(std::size_t i, std::size_t j) const;
  double* row(std::size_t i);
  const double* row(std::size_t i) const;
};

/// C(m x n) += A(m x k) * B(k x n)
void gemm_nn(const double* a, const double* b, double* c, std::size_t m,
             std::size_t k, std::size_t n);
/// C(m x n) += A(m x k) * B(n x k)^T
void gemm_nt(const double* a, const double* b, double* c, std::size_t m,
             std::size_t k, std::size_t n);
/// C(m x n) += A(k x m)^T * B(k x n)
void gemm_tn(const double* a, const double* b, double* c, std::size_t m,
             std::size_t k, std::size_t n);

/// Solves the symmetric positive definite system M x = rhs in place via
/// Cholesky; throws NumericError when M is not positive definite.
std::vector<double> solve_spd(std::vector<double> m, std::vector<double> rhs,
                              std::size_t n);

}  // namespace agropinn::nn
