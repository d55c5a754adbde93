#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vbsge/spin.hpp"

namespace vbsge {

/// Thrown when a dense expansion would exceed the amplitude cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultDenseCap = 10'000'000;

/// Full amplitude vector of the chain, indexed by the level string
/// (m_1, ..., m_L) with site 1 the most significant digit and digit values
/// m + s in 0..2s. VBS amplitudes are real; the vector is kept real and
/// promoted where complex arithmetic is needed.
struct DenseState {
  SpinSpec spin;
  int length;
  Boundary boundary;
  Eigen::VectorXd amplitudes;
};

/// Expand the matrix product site by site. PBC takes the trace over bond
/// indices, OBC(p, q) the (p, q) element. Averaged boundaries have no single
/// amplitude vector and are rejected.
DenseState dense_state(const ChainSpec& chain, std::int64_t cap = kDefaultDenseCap);

/// <VBS|VBS> of the dense vector.
double dense_norm_sq(const DenseState& state);

/// <Phi|VBS> for a product state given as per-site coefficient vectors
/// (components ordered m = -s..s).
std::complex<double> dense_inner(const DenseState& state,
                                 const std::vector<Eigen::VectorXcd>& site_vectors);

/// Reduced density matrix of one site (0-based), trace normalized to 1.
Eigen::MatrixXcd single_site_rdm(const DenseState& state, int site);

struct OptimizeResult {
  double lambda_sq = 0.0;                       // max |<Phi|VBS>|^2 / <VBS|VBS>
  std::vector<Eigen::VectorXcd> site_vectors;   // optimizing product state
  double odd_level_weight = 0.0;                // max over sites of sum_{odd m} |c_m|^2
  double even_level_weight = 0.0;               // max over sites of sum_{even m} |c_m|^2
  int sweeps = 0;
};

/// Maximize |<Phi|VBS>|^2 / <VBS|VBS> over unconstrained normalized product
/// states by alternating single-site environment updates with multiple
/// seeded restarts. Deterministic for a given seed; restart r consumes its
/// own derived stream, so enlarging `restarts` only extends the search.
OptimizeResult dense_optimize(const ChainSpec& chain, int restarts, std::uint64_t seed,
                              std::int64_t cap = kDefaultDenseCap);

}  // namespace vbsge
