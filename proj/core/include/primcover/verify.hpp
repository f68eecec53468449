#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primcover/lattice.hpp"
#include "primcover/limits.hpp"
#include "primcover/rational.hpp"

namespace primcover {

/// One row of the rho table for a maximal transitive subgroup H of S_n.
struct Table1Row {
  std::size_t n = 0;
  std::string name;
  MaximalMode mode = MaximalMode::InSnNotAn;
  std::uint64_t order = 0;
  std::uint64_t index = 0;
  std::uint64_t min_index = 0;
  /// min_index / index.
  Rational rho;
  /// rho - 2/(2n+1).
  Rational margin;
};

/// Rows for each n in `n_values` (each in 5..7), both modes, sorted by n and
/// then by order. Throws UnsupportedDegree.
std::vector<Table1Row> table1(std::span<const std::size_t> n_values, const Limits& limits = {});

enum class Comparison { AtMost, AtLeast, Equal };

struct CheckResult {
  std::string check;
  std::string subject;
  Rational value;
  Comparison comparison = Comparison::AtMost;
  Rational bound;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::size_t n = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// Largest fixed point ratio on A_n/H (bound 1/2), on S_n/H for H maximal in
/// S_n (bound 2/3) and on S_n/H for H maximal in A_n (bound 3/4). 5 <= n <= 7.
VerifyReport verify_fpr_bounds(std::size_t n, const Limits& limits = {});

/// Minimal index on the same three families against [A_n:H]/4, [S_n:H]/6
/// and [S_n:H]/8. 5 <= n <= 7.
VerifyReport verify_index_bounds(std::size_t n, const Limits& limits = {});

/// ind(g) >= (|X|/2)(1 - fpr(g)) for every subgroup class H of S_n, X = S_n/H,
/// and every element class of S_n. One check per H, valued at the smallest
/// slack ind - (|X|/2)(1 - fpr). 2 <= n <= 7.
VerifyReport verify_index_fpr(std::size_t n, const Limits& limits = {});

/// For every proper subgroup class of S_n: primitivity of S_n/H agrees with
/// the absence of an intermediate class in the lattice. 2 <= n <= 7.
VerifyReport verify_primitivity_maximality(std::size_t n, const Limits& limits = {});

/// The four reports above, concatenated. 5 <= n <= 7.
VerifyReport verify_lemmas(std::size_t n, const Limits& limits = {});

/// Every primitive faithful coset action of A_n and every prime-order element
/// class rep g of order r: fpr(g) <= 1/r, or the action is isomorphic to the
/// action on ell-subsets. Isomorphism is tested first in the strict sense
/// (conjugate stabilizers) and then up to an automorphism of A_n, the
/// automorphisms coming from the transitive degree-n actions of S_n. Exempt
/// instances record which sense applied. 5 <= n <= 7.
VerifyReport verify_bg(std::size_t n, const Limits& limits = {});

std::string to_string(Comparison c);

}  // namespace primcover
