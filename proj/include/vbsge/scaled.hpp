#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace vbsge {

/// Base-2 logarithm of a squared norm or overlap. When `exact_zero` is set
/// the quantity vanishes identically and `log2value` is meaningless.
struct NormResult {
  double log2value = -std::numeric_limits<double>::infinity();
  bool exact_zero = false;
};

/// A d x d matrix stored as body * 2^log2scale. After every rescale the
/// largest |entry| of the body lies in [1, 2); a body that is identically
/// zero is flagged instead of scaled. Rescaling multiplies by an exact power
/// of two, so it never perturbs the represented entries.
template <typename Scalar>
class ScaledMatrixT {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static ScaledMatrixT identity(Eigen::Index d) {
    ScaledMatrixT m;
    m.body_ = Matrix::Identity(d, d);
    return m;
  }

  static ScaledMatrixT of(Matrix m) {
    ScaledMatrixT r;
    r.body_ = std::move(m);
    r.rescale();
    return r;
  }

  void right_multiply(const Matrix& factor) {
    if (zero_) return;
    if (factor.rows() != body_.cols() || factor.rows() != factor.cols()) {
      throw std::invalid_argument("ScaledMatrix: dimension mismatch in product");
    }
    body_ = body_ * factor;
    rescale();
  }

  const Matrix& body() const noexcept { return body_; }
  double log2scale() const noexcept { return log2scale_; }
  bool is_zero() const noexcept { return zero_; }

  Scalar trace() const { return body_.trace(); }

  /// Sum of squared entry magnitudes of the represented matrix, as a
  /// NormResult (log2 domain).
  NormResult frobenius_sq() const {
    if (zero_) return {.exact_zero = true};
    double f = body_.cwiseAbs().squaredNorm();
    if (f == 0.0) return {.exact_zero = true};
    return {std::log2(f) + 2.0 * log2scale_, false};
  }

 private:
  ScaledMatrixT() = default;

  void rescale() {
    double mx = body_.cwiseAbs().maxCoeff();
    if (mx == 0.0) {
      zero_ = true;
      return;
    }
    int e = std::ilogb(mx);
    if (e != 0) {
      body_ *= std::exp2(static_cast<double>(-e));
      log2scale_ += e;
    }
  }

  Matrix body_;
  double log2scale_ = 0.0;
  bool zero_ = false;
};

using ScaledMatrix = ScaledMatrixT<double>;
using ScaledMatrixC = ScaledMatrixT<std::complex<double>>;

/// Ordered product of square factors with rescaling after every
/// multiplication. Detects an identically zero intermediate.
ScaledMatrix scaled_product(const std::vector<Eigen::MatrixXd>& factors);

/// M^n with per-step rescaling (n >= 0).
ScaledMatrix scaled_power(const Eigen::MatrixXd& m, int n);
ScaledMatrixC scaled_power(const Eigen::MatrixXcd& m, int n);

/// log2|value * 2^scale|^2 with exact-zero detection.
NormResult log2_abs_sq(double value, double log2scale);
NormResult log2_abs_sq(std::complex<double> value, double log2scale);

/// log2(sum_i 2^{terms_i}) evaluated stably; empty input is exact zero.
NormResult log2_sum_exp2(const std::vector<double>& terms);

}  // namespace vbsge
