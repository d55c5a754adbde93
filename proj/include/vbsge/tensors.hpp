#pragma once

#include <Eigen/Dense>

#include "vbsge/spin.hpp"

namespace vbsge {

namespace detail {

/// Shared layout of the two site tensors: an (s+1)x(s+1) real coefficient
/// matrix where entry (p, q) multiplies the local level ket |m = q - p>.
/// Indices are 1-based at the interface and 0-based in the stored matrix.
class SiteTensorBase {
 public:
  int spin() const noexcept { return s_; }
  int dim() const noexcept { return s_ + 1; }

  /// Coefficient at 1-based bond indices (p, q).
  double coefficient(int p, int q) const {
    check_index(p, q);
    return coeff_(p - 1, q - 1);
  }

  /// Level carried by entry (p, q); always q - p.
  int level(int p, int q) const {
    check_index(p, q);
    return q - p;
  }

  const Eigen::MatrixXd& matrix() const noexcept { return coeff_; }

 protected:
  SiteTensorBase(int s, Eigen::MatrixXd coeff) : s_(s), coeff_(std::move(coeff)) {}

  void check_index(int p, int q) const {
    if (p < 1 || p > s_ + 1 || q < 1 || q > s_ + 1) {
      throw std::invalid_argument("site tensor: bond indices must lie in 1.." +
                                  std::to_string(s_ + 1));
    }
  }

  int s_;
  Eigen::MatrixXd coeff_;
};

}  // namespace detail

/// Bulk tensor g(p, q) = (-1)^{s+p-1} sqrt(C(s,p-1) C(s,q-1)) sqrt((s-p+q)! (s+p-q)!).
class LocalTensor : public detail::SiteTensorBase {
 public:
  LocalTensor(int s, Eigen::MatrixXd coeff) : SiteTensorBase(s, std::move(coeff)) {}
};

/// Boundary tensor: entrywise |g(p, q)|, i.e. the same magnitudes without the
/// alternating sign factor.
class BoundaryTensor : public detail::SiteTensorBase {
 public:
  BoundaryTensor(int s, Eigen::MatrixXd coeff) : SiteTensorBase(s, std::move(coeff)) {}
};

/// Exact construction: the integer radicand is accumulated in arbitrary
/// precision and converted to floating point once per entry.
LocalTensor local_tensor(SpinSpec spin);
BoundaryTensor boundary_tensor(SpinSpec spin);

/// log2(n!) computed from the exact integer, accurate to ~1 ulp.
double log2_factorial(int n);

}  // namespace vbsge
