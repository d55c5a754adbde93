#include "vbsge/dense.hpp"

#include <cmath>

#include "vbsge/sampler.hpp"
#include "vbsge/tensors.hpp"

namespace vbsge {

namespace {

std::int64_t dense_size(const ChainSpec& chain, std::int64_t cap) {
  std::int64_t size = 1;
  for (int i = 0; i < chain.length; ++i) {
    size *= chain.spin.phys_dim();
    if (size > cap) {
      throw CapExceeded("dense_state: (2s+1)^L = " + std::to_string(chain.spin.phys_dim()) +
                        "^" + std::to_string(chain.length) + " exceeds cap " +
                        std::to_string(cap));
    }
  }
  return size;
}

}  // namespace

DenseState dense_state(const ChainSpec& chain, std::int64_t cap) {
  if (std::holds_alternative<ObcAveraged>(chain.boundary)) {
    throw std::invalid_argument(
        "dense_state: the averaged boundary has no single amplitude vector; "
        "expand each OBC(p, q) instead");
  }
  const std::int64_t size = dense_size(chain, cap);
  const int d = chain.spin.phys_dim();
  const int s = chain.spin.s;
  const int L = chain.length;
  const LocalTensor bulk = local_tensor(chain.spin);
  const BoundaryTensor start = boundary_tensor(chain.spin);

  // per-level slices of the site tensors
  std::vector<Eigen::MatrixXd> bulk_slice(d), start_slice(d);
  const int n = s + 1;
  for (int mi = 0; mi < d; ++mi) {
    const int m = mi - s;
    bulk_slice[mi] = Eigen::MatrixXd::Zero(n, n);
    start_slice[mi] = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a) {
      const int b = a + m;
      if (b < 0 || b >= n) continue;
      bulk_slice[mi](a, b) = bulk.matrix()(a, b);
      start_slice[mi](a, b) = start.matrix()(a, b);
    }
  }

  DenseState state{chain.spin, L, chain.boundary, Eigen::VectorXd::Zero(size)};
  const auto* obc = std::get_if<Obc>(&chain.boundary);

  // depth-first accumulation of the running matrix product
  std::vector<Eigen::MatrixXd> stack(L + 1);
  stack[0] = Eigen::MatrixXd::Identity(n, n);
  std::vector<int> digits(L, 0);
  int depth = 0;
  std::int64_t index = 0;
  while (true) {
    if (depth == L) {
      const Eigen::MatrixXd& p = stack[L];
      state.amplitudes(index) = obc ? p(obc->p - 1, obc->q - 1) : p.trace();
      ++index;
      // backtrack to the first site whose digit can still advance
      while (depth > 0 && digits[depth - 1] == d - 1) {
        digits[--depth] = 0;
      }
      if (depth == 0) break;
      ++digits[depth - 1];
      --depth;
    }
    const auto& slice = (depth == 0 && obc != nullptr) ? start_slice : bulk_slice;
    stack[depth + 1] = stack[depth] * slice[digits[depth]];
    ++depth;
  }
  return state;
}

double dense_norm_sq(const DenseState& state) { return state.amplitudes.squaredNorm(); }

std::complex<double> dense_inner(const DenseState& state,
                                 const std::vector<Eigen::VectorXcd>& site_vectors) {
  const int d = state.spin.phys_dim();
  const int L = state.length;
  if (static_cast<int>(site_vectors.size()) != L) {
    throw std::invalid_argument("dense_inner: need one site vector per site");
  }
  for (const auto& v : site_vectors) {
    if (v.size() != d) throw std::invalid_argument("dense_inner: site vector dimension mismatch");
  }
  std::complex<double> acc = 0.0;
  std::vector<int> digits(L, 0);
  const std::int64_t size = state.amplitudes.size();
  for (std::int64_t idx = 0; idx < size; ++idx) {
    const double amp = state.amplitudes(idx);
    if (amp != 0.0) {
      std::complex<double> w = amp;
      for (int i = 0; i < L; ++i) w *= std::conj(site_vectors[i](digits[i]));
      acc += w;
    }
    for (int i = L - 1; i >= 0; --i) {
      if (++digits[i] < d) break;
      digits[i] = 0;
    }
  }
  return acc;
}

Eigen::MatrixXcd single_site_rdm(const DenseState& state, int site) {
  const int d = state.spin.phys_dim();
  const int L = state.length;
  if (site < 0 || site >= L) throw std::out_of_range("single_site_rdm: site out of range");
  std::int64_t inner = 1;
  for (int i = site + 1; i < L; ++i) inner *= d;
  std::int64_t outer = state.amplitudes.size() / (inner * d);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (std::int64_t a = 0; a < outer; ++a) {
    for (std::int64_t b = 0; b < inner; ++b) {
      for (int m = 0; m < d; ++m) {
        const double am = state.amplitudes((a * d + m) * inner + b);
        if (am == 0.0) continue;
        for (int mp = 0; mp < d; ++mp) {
          rho(m, mp) += am * state.amplitudes((a * d + mp) * inner + b);
        }
      }
    }
  }
  return rho / dense_norm_sq(state);
}

namespace {

/// Environment of `site`: contraction of the dense amplitudes with the
/// conjugated vectors at every other site, leaving a d-vector.
Eigen::VectorXcd environment(const DenseState& state,
                             const std::vector<Eigen::VectorXcd>& vectors, int site) {
  const int d = state.spin.phys_dim();
  const int L = state.length;
  Eigen::VectorXcd env = Eigen::VectorXcd::Zero(d);
  std::vector<int> digits(L, 0);
  const std::int64_t size = state.amplitudes.size();
  for (std::int64_t idx = 0; idx < size; ++idx) {
    const double amp = state.amplitudes(idx);
    if (amp != 0.0) {
      std::complex<double> w = amp;
      for (int i = 0; i < L; ++i) {
        if (i != site) w *= std::conj(vectors[i](digits[i]));
      }
      env(digits[site]) += w;
    }
    for (int i = L - 1; i >= 0; --i) {
      if (++digits[i] < d) break;
      digits[i] = 0;
    }
  }
  return env;
}

}  // namespace

OptimizeResult dense_optimize(const ChainSpec& chain, int restarts, std::uint64_t seed,
                              std::int64_t cap) {
  if (restarts < 1) throw std::invalid_argument("dense_optimize: restarts must be >= 1");
  const DenseState state = dense_state(chain, cap);
  const double norm_sq = dense_norm_sq(state);
  const int d = chain.spin.phys_dim();
  const int L = chain.length;

  OptimizeResult best;
  constexpr int kMaxSweeps = 600;
  constexpr double kTol = 1e-15;

  for (int r = 0; r < restarts; ++r) {
    std::vector<Eigen::VectorXcd> vecs(L);
    for (int i = 0; i < L; ++i) {
      vecs[i] = haar_vector(d, seed, static_cast<std::uint64_t>(r) * L + i);
    }
    double prev = -1.0;
    double lambda_sq = 0.0;
    int sweeps = 0;
    for (; sweeps < kMaxSweeps; ++sweeps) {
      for (int i = 0; i < L; ++i) {
        const Eigen::VectorXcd env = environment(state, vecs, i);
        const double nv = env.norm();
        // <Phi|psi> = vecs[i].dot(env), maximal at vecs[i] = env / |env|
        if (nv > 0.0) vecs[i] = env / nv;
      }
      const Eigen::VectorXcd env0 = environment(state, vecs, 0);
      lambda_sq = std::norm(vecs[0].dot(env0)) / norm_sq;
      if (std::abs(lambda_sq - prev) < kTol * std::max(1.0, lambda_sq)) break;
      prev = lambda_sq;
    }
    if (lambda_sq > best.lambda_sq) {
      best.lambda_sq = lambda_sq;
      best.site_vectors = vecs;
      best.sweeps = sweeps;
    }
  }

  const int s = chain.spin.s;
  for (const auto& v : best.site_vectors) {
    double odd = 0.0, even = 0.0;
    for (int mi = 0; mi < d; ++mi) {
      const int m = mi - s;
      (std::abs(m) % 2 == 1 ? odd : even) += std::norm(v(mi));
    }
    best.odd_level_weight = std::max(best.odd_level_weight, odd);
    best.even_level_weight = std::max(best.even_level_weight, even);
  }
  return best;
}

}  // namespace vbsge
