#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vbsge/contraction.hpp"
#include "vbsge/spin.hpp"

namespace vbsge {

/// Which coefficients are drawn at random:
///  - Unconstrained: independent Haar-random vectors over all 2s+1 levels at
///    every site;
///  - PermInvariant: one Haar-random vector replicated at all sites;
///  - BoundaryRandom: the uniform sector ansatz at sites 2..L, a Haar-random
///    vector at site 1.
enum class SampleMode { Unconstrained, PermInvariant, BoundaryRandom };

const char* to_string(SampleMode mode) noexcept;

/// One sampled product state: value = -log2 |Lambda|^2 / L in bits per site,
/// where |Lambda|^2 is the normalized squared overlap with the chain (PBC) or
/// the boundary-averaged ratio (OBC). `overlap_zero` marks an identically
/// vanishing overlap; `value` is +infinity there.
struct SampleRecord {
  int index = 0;
  double value = 0.0;
  bool overlap_zero = false;
  std::uint64_t seed = 0;  // derived per-sample seed
};

struct SampleOptions {
  SampleMode mode = SampleMode::Unconstrained;
  int count = 1000;
  std::uint64_t seed = 0;
  Sector bulk_sector = Sector::Even;  // BoundaryRandom bulk ansatz
};

/// Deterministic for fixed (chain, options): each sample derives its own RNG
/// stream from (seed, index), so results are independent of scheduling and
/// of `count`.
std::vector<SampleRecord> sample(const ChainSpec& chain, const SampleOptions& options);

struct SampleSummary {
  double min = 0.0;
  double mean = 0.0;
  int finite_count = 0;
  int zero_count = 0;
  double fraction_within_delta = 0.0;  // finite values <= bound + delta
};

/// Summary over finite values; identically-zero overlaps are counted apart.
SampleSummary summarize(std::span<const SampleRecord> records, double analytic_bound,
                        double delta);

/// Haar-random unit vector over `dim` complex components, drawn from the
/// (seed, index)-derived stream; exposed for reuse by the dense optimizer.
Eigen::VectorXcd haar_vector(int dim, std::uint64_t seed, std::uint64_t index);

}  // namespace vbsge
