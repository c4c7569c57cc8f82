#pragma once

#include <cstdint>

namespace rmss {

/// Guards for exhaustive enumerations. Operations refuse with LimitExceeded
/// rather than approximate when a guard would be crossed.
struct Limits {
  /// Number of subspaces of a lattice L(F_q^n) (or one layer of it).
  std::uint64_t max_enum = 1'000'000;
  /// Order of GL(n, q) for equivalence searches.
  std::uint64_t max_gl = 10'000'000;
  /// Number of codewords q^k for codeword scans.
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
};

}  // namespace rmss
