#include "vbsge/ansatz.hpp"

#include <cmath>

namespace vbsge {

std::vector<int> sector_levels(SpinSpec spin, Sector sector) {
  const int s = spin.s;
  std::vector<int> levels;
  if (sector == Sector::Even) {
    for (int k = -(s / 2); k <= s / 2; ++k) levels.push_back(2 * k);
  } else {
    for (int k = -((s + 1) / 2); k <= (s - 1) / 2; ++k) levels.push_back(2 * k + 1);
  }
  return levels;
}

double sector_amplitude(SpinSpec spin, Sector sector) {
  const int s = spin.s;
  return sector == Sector::Even ? 1.0 / std::sqrt(1.0 + 2.0 * (s / 2))
                                : 1.0 / std::sqrt(2.0 * ((s + 1) / 2));
}

Eigen::VectorXcd uniform_site_vector(SpinSpec spin, Sector sector) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spin.phys_dim());
  const double c = sector_amplitude(spin, sector);
  for (int m : sector_levels(spin, sector)) v(m + spin.s) = c;
  return v;
}

ProductAnsatz ProductAnsatz::uniform(SpinSpec spin, Sector sector) {
  ProductAnsatz a(spin, sector, true);
  a.amplitude_ = sector_amplitude(spin, sector);
  a.site_vectors_.push_back(uniform_site_vector(spin, sector));
  return a;
}

ProductAnsatz ProductAnsatz::per_site(SpinSpec spin, std::vector<Eigen::VectorXcd> site_vectors) {
  if (site_vectors.empty()) {
    throw std::invalid_argument("ProductAnsatz: per-site ansatz needs at least one site");
  }
  for (const auto& v : site_vectors) {
    if (v.size() != spin.phys_dim()) {
      throw std::invalid_argument("ProductAnsatz: site vector dimension must be 2s+1");
    }
    if (std::abs(v.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("ProductAnsatz: site vectors must be unit norm");
    }
  }
  ProductAnsatz a(spin, Sector::Even, false);
  a.site_vectors_ = std::move(site_vectors);
  return a;
}

double ProductAnsatz::amplitude() const {
  if (!uniform_) throw std::logic_error("ProductAnsatz: per-site ansatz has no single amplitude");
  return amplitude_;
}

const Eigen::VectorXcd& ProductAnsatz::site_vector(int site) const {
  if (uniform_) return site_vectors_.front();
  if (site < 0 || site >= static_cast<int>(site_vectors_.size())) {
    throw std::out_of_range("ProductAnsatz: site index out of range");
  }
  return site_vectors_[site];
}

namespace {

template <typename Tensor>
Eigen::MatrixXcd row_from_vector(const Eigen::VectorXcd& v, const Tensor& t) {
  const int s = t.spin();
  if (v.size() != 2 * s + 1) {
    throw std::invalid_argument("contracted_row: site vector dimension must be 2s+1");
  }
  const int n = s + 1;
  Eigen::MatrixXcd m(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int level = b - a;  // |level| <= s always
      m(a, b) = std::conj(v(level + s)) * t.matrix()(a, b);
    }
  }
  return m;
}

template <typename Tensor>
Eigen::MatrixXd row_from_uniform(const ProductAnsatz& ansatz, const Tensor& t) {
  if (!ansatz.is_uniform()) {
    throw std::invalid_argument("contracted_row: real row requires the uniform ansatz");
  }
  if (ansatz.spin().s != t.spin()) {
    throw std::invalid_argument("contracted_row: ansatz and tensor spins differ");
  }
  const int s = t.spin();
  const int n = s + 1;
  const Eigen::VectorXcd& v = ansatz.site_vector(0);
  Eigen::MatrixXd m(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      m(a, b) = v(b - a + s).real() * t.matrix()(a, b);
    }
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd contracted_row(const Eigen::VectorXcd& site_vector, const LocalTensor& t) {
  return row_from_vector(site_vector, t);
}

Eigen::MatrixXcd contracted_row(const Eigen::VectorXcd& site_vector, const BoundaryTensor& t) {
  return row_from_vector(site_vector, t);
}

Eigen::MatrixXd contracted_row(const ProductAnsatz& ansatz, const LocalTensor& t) {
  return row_from_uniform(ansatz, t);
}

Eigen::MatrixXd contracted_row(const ProductAnsatz& ansatz, const BoundaryTensor& t) {
  return row_from_uniform(ansatz, t);
}

}  // namespace vbsge
