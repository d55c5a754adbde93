#include "vbsge/scaled.hpp"

#include <algorithm>
#include <stdexcept>

namespace vbsge {

ScaledMatrix scaled_product(const std::vector<Eigen::MatrixXd>& factors) {
  if (factors.empty()) throw std::invalid_argument("scaled_product: empty factor list");
  const Eigen::Index d = factors.front().rows();
  for (const auto& f : factors) {
    if (f.rows() != d || f.cols() != d) {
      throw std::invalid_argument("scaled_product: factors must be square and equal size");
    }
  }
  ScaledMatrix acc = ScaledMatrix::of(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) acc.right_multiply(factors[i]);
  return acc;
}

ScaledMatrix scaled_power(const Eigen::MatrixXd& m, int n) {
  if (n < 0) throw std::invalid_argument("scaled_power: negative exponent");
  ScaledMatrix acc = ScaledMatrix::identity(m.rows());
  for (int i = 0; i < n; ++i) acc.right_multiply(m);
  return acc;
}

ScaledMatrixC scaled_power(const Eigen::MatrixXcd& m, int n) {
  if (n < 0) throw std::invalid_argument("scaled_power: negative exponent");
  ScaledMatrixC acc = ScaledMatrixC::identity(m.rows());
  for (int i = 0; i < n; ++i) acc.right_multiply(m);
  return acc;
}

NormResult log2_abs_sq(double value, double log2scale) {
  if (value == 0.0) return {.exact_zero = true};
  return {2.0 * (std::log2(std::abs(value)) + log2scale), false};
}

NormResult log2_abs_sq(std::complex<double> value, double log2scale) {
  if (value == std::complex<double>(0.0, 0.0)) return {.exact_zero = true};
  return {2.0 * (std::log2(std::abs(value)) + log2scale), false};
}

NormResult log2_sum_exp2(const std::vector<double>& terms) {
  if (terms.empty()) return {.exact_zero = true};
  const double mx = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp2(t - mx);
  return {std::log2(sum) + mx, false};
}

}  // namespace vbsge
