#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vbsge/ansatz.hpp"
#include "vbsge/scaled.hpp"
#include "vbsge/spin.hpp"
#include "vbsge/tensors.hpp"

namespace vbsge {

/// Normalization mode for the averaged OBC overlap: Exact divides each
/// boundary term by its exact norm, Asymptotic divides the summed squared
/// matrix elements by c_L = (s+1) [(2s+1)!/(s+1)]^L.
enum class ObcMode { Exact, Asymptotic };

/// Doubled transfer matrix E[(a,b),(c,d)] = sum_m t(a,c)_m t(b,d)_m, an
/// (s+1)^2-dimensional real matrix. Row/column pairs are packed a*(s+1)+b.
Eigen::MatrixXd transfer_matrix(const LocalTensor& t);
Eigen::MatrixXd transfer_matrix(const BoundaryTensor& t);

/// log2 <VBS|VBS> for a periodic chain: trace of the L-th transfer power.
NormResult norm_pbc(const ChainSpec& chain);

/// log2 <VBS;p,q|VBS;p,q> for an open chain pinned at (p, q): the
/// ((p,p),(q,q)) element of E_start E^{L-1}. Exact at every L.
NormResult norm_obc(const ChainSpec& chain);

/// All (s+1)^2 open-chain norms at once; entry (p-1, q-1) is
/// log2 <VBS;p,q|VBS;p,q>. Returned as body matrix + shared log2 scale.
struct ObcNorms {
  Eigen::MatrixXd body;  // strictly positive entries
  double log2scale = 0.0;
  double log2_at(int p, int q) const {  // 1-based
    return std::log2(body(p - 1, q - 1)) + log2scale;
  }
};
ObcNorms obc_norms(const ChainSpec& chain);

/// log2 |<Phi|VBS>|^2 for the uniform sector ansatz on a periodic chain
/// (unnormalized): squared trace of the L-th power of the contracted row.
/// Vanishing traces forced by the sector block structure are reported as
/// exact_zero.
NormResult overlap_pbc(const ChainSpec& chain, Sector sector);

/// Same quantity for an explicit product state (one vector per site).
NormResult overlap_pbc_state(const ChainSpec& chain,
                             const std::vector<Eigen::VectorXcd>& site_vectors);

/// log2 |Lambda|^2 for the uniform sector ansatz on the averaged open chain.
/// Exact: (1/(s+1)^2) sum_{p,q} |<VBS;p,q|Phi>|^2 / <VBS;p,q|VBS;p,q>.
/// Asymptotic: Tr2[row product] / c_L.
NormResult overlap_obc(const ChainSpec& chain, Sector sector, ObcMode mode);

/// Averaged-OBC |Lambda|^2 (Exact mode) for an explicit product state.
NormResult overlap_obc_state(const ChainSpec& chain,
                             const std::vector<Eigen::VectorXcd>& site_vectors);

/// Boundary-row product B_start M^{L-1} for the uniform sector ansatz.
ScaledMatrix obc_row_product(const ChainSpec& chain, Sector sector);

/// log2 c_L with c_L = (s+1) [(2s+1)!/(s+1)]^L.
double log2_c_l(SpinSpec spin, int length);

/// Structure of a contracted-row matrix that forces vanishing odd-length
/// traces: support confined to opposite-parity index pairs (odd sector), or
/// exact antisymmetry under the index reflection p -> s+2-p (even sector,
/// odd s).
struct RowStructure {
  bool opposite_parity_support = false;
  bool reflection_antisymmetric = false;
};
RowStructure analyze_row(const Eigen::MatrixXd& row);

}  // namespace vbsge
