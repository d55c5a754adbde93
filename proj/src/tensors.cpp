#include "vbsge/tensors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace vbsge {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial_int(int n) {
  cpp_int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

cpp_int binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int b = 1;
  for (int j = 1; j <= k; ++j) {
    b *= n - k + j;
    b /= j;
  }
  return b;
}

/// The integer under the square root of Eq.-style entry (p, q), 1-based:
/// C(s, p-1) C(s, q-1) (s-p+q)! (s+p-q)!.
cpp_int radicand(int s, int p, int q) {
  return binomial_int(s, p - 1) * binomial_int(s, q - 1) * factorial_int(s - p + q) *
         factorial_int(s + p - q);
}

Eigen::MatrixXd magnitude_matrix(int s) {
  const int n = s + 1;
  Eigen::MatrixXd m(n, n);
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      // single conversion to floating point, then a correctly rounded sqrt
      m(p - 1, q - 1) = std::sqrt(radicand(s, p, q).convert_to<double>());
    }
  }
  return m;
}

}  // namespace

LocalTensor local_tensor(SpinSpec spin) {
  const int s = spin.s;
  Eigen::MatrixXd m = magnitude_matrix(s);
  for (int p = 1; p <= s + 1; ++p) {
    if ((s + p - 1) % 2 != 0) m.row(p - 1) *= -1.0;
  }
  return LocalTensor(s, std::move(m));
}

BoundaryTensor boundary_tensor(SpinSpec spin) {
  return BoundaryTensor(spin.s, magnitude_matrix(spin.s));
}

double log2_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log2_factorial: negative argument");
  cpp_int f = factorial_int(n);
  // split off the exponent so the mantissa conversion stays in range
  const std::size_t bits = boost::multiprecision::msb(f);
  if (bits <= 52) return std::log2(f.convert_to<double>());
  const std::size_t shift = bits - 52;
  cpp_int mant = f >> shift;
  return std::log2(mant.convert_to<double>()) + static_cast<double>(shift);
}

std::string to_string(const Boundary& b) {
  if (std::holds_alternative<Pbc>(b)) return "pbc";
  if (const auto* o = std::get_if<Obc>(&b)) {
    return "obc(" + std::to_string(o->p) + "," + std::to_string(o->q) + ")";
  }
  return "obc-averaged";
}

}  // namespace vbsge
