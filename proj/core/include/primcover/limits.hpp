#pragma once

#include <cstdint>

namespace primcover {

/// Caps that bound the exhaustive routines. Exceeding one raises the
/// matching *CapExceeded error rather than running unbounded.
struct Limits {
  /// Largest group whose elements may be enumerated.
  std::uint64_t order_cap = 1'000'000;
  /// Largest coset space [G:H] that is materialised as an action.
  std::uint64_t index_cap = 100'000;
  /// Largest group whose subgroup lattice is enumerated.
  std::uint64_t lattice_cap = 10'000;
  /// Largest ambient group searched exhaustively for a conjugating element.
  std::uint64_t conjugacy_cap = 100'000;
};

}  // namespace primcover
