#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vbsge/contraction.hpp"
#include "vbsge/spin.hpp"

namespace vbsge {

/// Geometric entanglement of one chain: per-sector log2 |Lambda|^2, the
/// per-site entanglement eps_sector = -log2|Lambda|^2 / L (bits per site,
/// +infinity when the overlap vanishes identically), and eps = min of the
/// two sectors.
struct GeResult {
  int s = 0;
  int length = 0;
  Boundary boundary;
  ObcMode mode = ObcMode::Exact;
  NormResult log2_lambda_sq_even;
  NormResult log2_lambda_sq_odd;
  double eps_even = 0.0;
  double eps_odd = 0.0;
  double eps = 0.0;
};

GeResult ge(const ChainSpec& chain, ObcMode mode = ObcMode::Exact);

/// Least-squares fit of eps(L) = eps_infinity + slope / L.
struct ExtrapolatedGe {
  double eps_infinity = 0.0;
  double slope = 0.0;
  double residual = 0.0;  // RMS deviation of the fitted model
};

/// Requires >= 3 points with distinct L of a single parity (odd and even L
/// converge differently and must not be mixed).
ExtrapolatedGe extrapolate(std::span<const std::pair<int, double>> points);

/// Global geometric entanglement E_G = eps_even * L (bits).
struct GlobalGe {
  double value = 0.0;
};

GlobalGe global_ge(const GeResult& result);
GlobalGe global_ge(const ChainSpec& chain, ObcMode mode = ObcMode::Exact);

/// log2(sum_{p,q} exact OBC norm) - log2(c_L). The summed norm equals c_L
/// identically (the diagonal-pair vector is an exact eigenvector of the
/// transfer matrix), so this returns rounding residue only; see
/// obc_norm_equalization_error for the quantity that actually decays.
double asymptotic_norm_error(const ChainSpec& chain);

/// max_{p,q} |log2 N_{p,q} - log2(c_L / (s+1)^2)|: how far the individual
/// boundary norms are from their common large-L value. Decays with L.
double obc_norm_equalization_error(const ChainSpec& chain);

struct SweepRow {
  int s = 0;
  int length = 0;
  std::optional<GeResult> result;  // empty on per-cell error
  std::string error;
};

/// GE on the (spins x lengths) grid, s-major row order. Per-cell failures
/// are recorded in the row without aborting the sweep.
std::vector<SweepRow> sweep(std::span<const int> spins, std::span<const int> lengths,
                            const Boundary& boundary, ObcMode mode = ObcMode::Exact);

}  // namespace vbsge
