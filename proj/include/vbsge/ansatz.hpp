#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vbsge/spin.hpp"
#include "vbsge/tensors.hpp"

namespace vbsge {

/// Levels spanned by a parity sector: Even -> {2k : k = -[s/2]..[s/2]},
/// Odd -> {2k+1 : k = -[(s+1)/2]..[(s-1)/2]}.
std::vector<int> sector_levels(SpinSpec spin, Sector sector);

/// Uniform amplitude of the analytic sector state:
/// c_p = 1/sqrt(1 + 2[s/2]) (Even), c_n = 1/sqrt(2[(s+1)/2]) (Odd).
double sector_amplitude(SpinSpec spin, Sector sector);

/// Full-level (2s+1)-component vector of the uniform sector state; entries
/// are c at the sector levels and zero elsewhere. Component order is
/// m = -s..s.
Eigen::VectorXcd uniform_site_vector(SpinSpec spin, Sector sector);

/// A product state over the chain: either the uniform analytic sector state
/// (one real amplitude at every site) or an explicit list of per-site complex
/// coefficient vectors over all 2s+1 levels. Site vectors are unit norm.
class ProductAnsatz {
 public:
  static ProductAnsatz uniform(SpinSpec spin, Sector sector);
  static ProductAnsatz per_site(SpinSpec spin, std::vector<Eigen::VectorXcd> site_vectors);

  SpinSpec spin() const noexcept { return spin_; }
  bool is_uniform() const noexcept { return uniform_; }
  Sector sector() const noexcept { return sector_; }
  double amplitude() const;

  /// Number of explicit sites; a uniform ansatz applies to any site count.
  int sites() const noexcept { return static_cast<int>(site_vectors_.size()); }

  /// Full-level coefficient vector at `site` (0-based). Uniform ansaetze
  /// return the same vector for every site.
  const Eigen::VectorXcd& site_vector(int site) const;

 private:
  ProductAnsatz(SpinSpec spin, Sector sector, bool uniform)
      : spin_(spin), sector_(sector), uniform_(uniform) {}

  SpinSpec spin_;
  Sector sector_;
  bool uniform_;
  double amplitude_ = 0.0;
  std::vector<Eigen::VectorXcd> site_vectors_;  // uniform: one shared entry
};

/// <phi| applied to a site tensor: entry (p, q) = conj(c_{q-p}) * t(p, q),
/// zero when the level q - p lies outside phi's support.
Eigen::MatrixXcd contracted_row(const Eigen::VectorXcd& site_vector, const LocalTensor& t);
Eigen::MatrixXcd contracted_row(const Eigen::VectorXcd& site_vector, const BoundaryTensor& t);

/// Real fast path for the uniform analytic ansatz (its coefficients are real
/// non-negative). Throws if the ansatz is per-site.
Eigen::MatrixXd contracted_row(const ProductAnsatz& ansatz, const LocalTensor& t);
Eigen::MatrixXd contracted_row(const ProductAnsatz& ansatz, const BoundaryTensor& t);

}  // namespace vbsge
