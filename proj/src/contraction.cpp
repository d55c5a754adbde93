#include "vbsge/contraction.hpp"

#include <cmath>

namespace vbsge {

namespace {

template <typename Tensor>
Eigen::MatrixXd doubled_transfer(const Tensor& t) {
  const int n = t.spin() + 1;
  const Eigen::MatrixXd& g = t.matrix();
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (c - a == d - b) e(a * n + b, c * n + d) = g(a, c) * g(b, d);
        }
      }
    }
  }
  return e;
}

}  // namespace

Eigen::MatrixXd transfer_matrix(const LocalTensor& t) { return doubled_transfer(t); }
Eigen::MatrixXd transfer_matrix(const BoundaryTensor& t) { return doubled_transfer(t); }

NormResult norm_pbc(const ChainSpec& chain) {
  if (!is_pbc(chain.boundary)) throw std::invalid_argument("norm_pbc: chain is not periodic");
  const Eigen::MatrixXd e = transfer_matrix(local_tensor(chain.spin));
  const ScaledMatrix power = scaled_power(e, chain.length);
  if (power.is_zero()) return {.exact_zero = true};
  const double tr = power.trace();
  if (tr == 0.0) return {.exact_zero = true};
  return {std::log2(std::abs(tr)) + power.log2scale(), false};
}

ObcNorms obc_norms(const ChainSpec& chain) {
  if (is_pbc(chain.boundary)) throw std::invalid_argument("obc_norms: chain is periodic");
  const int n = chain.spin.bond_dim();
  const Eigen::MatrixXd e = transfer_matrix(local_tensor(chain.spin));
  const Eigen::MatrixXd e_start = transfer_matrix(boundary_tensor(chain.spin));
  ScaledMatrix acc = ScaledMatrix::of(e_start);
  for (int i = 0; i < chain.length - 1; ++i) acc.right_multiply(e);
  ObcNorms norms;
  norms.body.resize(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      norms.body(a, b) = acc.body()(a * n + a, b * n + b);
    }
  }
  norms.log2scale = acc.log2scale();
  return norms;
}

NormResult norm_obc(const ChainSpec& chain) {
  const auto* o = std::get_if<Obc>(&chain.boundary);
  if (o == nullptr) throw std::invalid_argument("norm_obc: chain must carry OBC(p, q)");
  const ObcNorms norms = obc_norms(chain);
  return {norms.log2_at(o->p, o->q), false};
}

RowStructure analyze_row(const Eigen::MatrixXd& row) {
  const int n = static_cast<int>(row.rows());
  RowStructure st{.opposite_parity_support = true, .reflection_antisymmetric = true};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (row(a, b) != 0.0 && (a + b) % 2 == 0) st.opposite_parity_support = false;
      if (row(a, b) != -row(n - 1 - a, n - 1 - b)) st.reflection_antisymmetric = false;
    }
  }
  return st;
}

namespace {

/// Trace of M^L as a NormResult; structurally vanishing odd-L traces are
/// reported exact_zero without running the product.
NormResult trace_power_sq(const Eigen::MatrixXd& row, int length) {
  if (length % 2 == 1) {
    const RowStructure st = analyze_row(row);
    if (st.opposite_parity_support || st.reflection_antisymmetric) {
      return {.exact_zero = true};
    }
  }
  const ScaledMatrix power = scaled_power(row, length);
  if (power.is_zero()) return {.exact_zero = true};
  return log2_abs_sq(power.trace(), power.log2scale());
}

}  // namespace

NormResult overlap_pbc(const ChainSpec& chain, Sector sector) {
  if (!is_pbc(chain.boundary)) throw std::invalid_argument("overlap_pbc: chain is not periodic");
  const ProductAnsatz ansatz = ProductAnsatz::uniform(chain.spin, sector);
  const Eigen::MatrixXd row = contracted_row(ansatz, local_tensor(chain.spin));
  return trace_power_sq(row, chain.length);
}

NormResult overlap_pbc_state(const ChainSpec& chain,
                             const std::vector<Eigen::VectorXcd>& site_vectors) {
  if (!is_pbc(chain.boundary)) throw std::invalid_argument("overlap_pbc_state: chain is not periodic");
  if (static_cast<int>(site_vectors.size()) != chain.length) {
    throw std::invalid_argument("overlap_pbc_state: need one site vector per site");
  }
  const LocalTensor t = local_tensor(chain.spin);
  ScaledMatrixC acc = ScaledMatrixC::of(contracted_row(site_vectors[0], t));
  for (int i = 1; i < chain.length; ++i) {
    acc.right_multiply(contracted_row(site_vectors[i], t));
    if (acc.is_zero()) return {.exact_zero = true};
  }
  if (acc.is_zero()) return {.exact_zero = true};
  return log2_abs_sq(acc.trace(), acc.log2scale());
}

ScaledMatrix obc_row_product(const ChainSpec& chain, Sector sector) {
  const ProductAnsatz ansatz = ProductAnsatz::uniform(chain.spin, sector);
  const Eigen::MatrixXd bulk = contracted_row(ansatz, local_tensor(chain.spin));
  const Eigen::MatrixXd start = contracted_row(ansatz, boundary_tensor(chain.spin));
  ScaledMatrix acc = ScaledMatrix::of(start);
  for (int i = 0; i < chain.length - 1; ++i) acc.right_multiply(bulk);
  return acc;
}

double log2_c_l(SpinSpec spin, int length) {
  const double per_site = log2_factorial(2 * spin.s + 1) - std::log2(double(spin.s + 1));
  return std::log2(double(spin.s + 1)) + length * per_site;
}

namespace {

NormResult averaged_obc(const ChainSpec& chain, const ScaledMatrixC& numerator_rows,
                        const ObcNorms& norms) {
  const int n = chain.spin.bond_dim();
  if (numerator_rows.is_zero()) return {.exact_zero = true};
  std::vector<double> terms;
  terms.reserve(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::complex<double> w = numerator_rows.body()(a, b);
      if (w == std::complex<double>(0.0, 0.0)) continue;
      const double num = 2.0 * (std::log2(std::abs(w)) + numerator_rows.log2scale());
      const double den = std::log2(norms.body(a, b)) + norms.log2scale;
      terms.push_back(num - den);
    }
  }
  NormResult sum = log2_sum_exp2(terms);
  if (sum.exact_zero) return sum;
  return {sum.log2value - 2.0 * std::log2(double(n)), false};
}

}  // namespace

NormResult overlap_obc(const ChainSpec& chain, Sector sector, ObcMode mode) {
  if (is_pbc(chain.boundary)) throw std::invalid_argument("overlap_obc: chain is periodic");
  const ScaledMatrix rows = obc_row_product(chain, sector);
  if (mode == ObcMode::Asymptotic) {
    NormResult t2 = rows.frobenius_sq();
    if (t2.exact_zero) return t2;
    return {t2.log2value - log2_c_l(chain.spin, chain.length), false};
  }
  const ObcNorms norms = obc_norms(chain);
  std::vector<double> terms;
  const int n = chain.spin.bond_dim();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double w = rows.body()(a, b);
      if (w == 0.0) continue;
      const double num = 2.0 * (std::log2(std::abs(w)) + rows.log2scale());
      const double den = std::log2(norms.body(a, b)) + norms.log2scale;
      terms.push_back(num - den);
    }
  }
  NormResult sum = log2_sum_exp2(terms);
  if (sum.exact_zero) return sum;
  return {sum.log2value - 2.0 * std::log2(double(n)), false};
}

NormResult overlap_obc_state(const ChainSpec& chain,
                             const std::vector<Eigen::VectorXcd>& site_vectors) {
  if (is_pbc(chain.boundary)) throw std::invalid_argument("overlap_obc_state: chain is periodic");
  if (static_cast<int>(site_vectors.size()) != chain.length) {
    throw std::invalid_argument("overlap_obc_state: need one site vector per site");
  }
  const LocalTensor bulk = local_tensor(chain.spin);
  const BoundaryTensor start = boundary_tensor(chain.spin);
  ScaledMatrixC acc = ScaledMatrixC::of(contracted_row(site_vectors[0], start));
  for (int i = 1; i < chain.length; ++i) {
    acc.right_multiply(contracted_row(site_vectors[i], bulk));
    if (acc.is_zero()) return {.exact_zero = true};
  }
  return averaged_obc(chain, acc, obc_norms(chain));
}

}  // namespace vbsge
