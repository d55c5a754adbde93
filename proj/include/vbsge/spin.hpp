#pragma once

#include <stdexcept>
#include <string>
#include <variant>

namespace vbsge {

/// Integer spin magnitude s >= 1. The local physical dimension is 2s+1 and
/// the bond dimension of the matrix-product form is s+1.
struct SpinSpec {
  int s;

  explicit SpinSpec(int spin) : s(spin) {
    if (s < 1) {
      throw std::invalid_argument("SpinSpec: spin must be a positive integer, got " +
                                  std::to_string(spin));
    }
  }

  int phys_dim() const noexcept { return 2 * s + 1; }
  int bond_dim() const noexcept { return s + 1; }

  friend bool operator==(const SpinSpec&, const SpinSpec&) = default;
};

/// Parity sector of a single-site state under exp(i*pi*Sz): Even spans the
/// even levels {2k}, Odd the odd levels {2k+1}.
enum class Sector { Even, Odd };

inline const char* to_string(Sector sec) noexcept {
  return sec == Sector::Even ? "even" : "odd";
}

struct Pbc {
  friend bool operator==(const Pbc&, const Pbc&) = default;
};

/// Open chain pinned to one of the (s+1)^2 degenerate boundary states,
/// indexed by the 1-based pair (p, q).
struct Obc {
  int p = 1;
  int q = 1;
  friend bool operator==(const Obc&, const Obc&) = default;
};

/// Open chain averaged uniformly over all (s+1)^2 boundary states.
struct ObcAveraged {
  friend bool operator==(const ObcAveraged&, const ObcAveraged&) = default;
};

using Boundary = std::variant<Pbc, Obc, ObcAveraged>;

inline bool is_pbc(const Boundary& b) noexcept { return std::holds_alternative<Pbc>(b); }
inline bool is_open(const Boundary& b) noexcept { return !std::holds_alternative<Pbc>(b); }

std::string to_string(const Boundary& b);

/// A chain of `length` spins with the given boundary condition.
struct ChainSpec {
  SpinSpec spin;
  int length;
  Boundary boundary;

  ChainSpec(SpinSpec sp, int L, Boundary bc) : spin(sp), length(L), boundary(bc) {
    if (length < 2) {
      throw std::invalid_argument("ChainSpec: length must be >= 2, got " +
                                  std::to_string(length));
    }
    if (const auto* o = std::get_if<Obc>(&boundary)) {
      if (o->p < 1 || o->p > spin.bond_dim() || o->q < 1 || o->q > spin.bond_dim()) {
        throw std::invalid_argument("ChainSpec: OBC indices (p, q) must lie in 1.." +
                                    std::to_string(spin.bond_dim()));
      }
    }
  }
};

}  // namespace vbsge
