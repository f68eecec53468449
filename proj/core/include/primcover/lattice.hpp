#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primcover/group.hpp"
#include "primcover/limits.hpp"

namespace primcover {

/// Where a subgroup class is maximal: in the parent group G, and (when G has
/// odd elements) in its even part G ∩ A_n.
struct MaximalIn {
  bool parent = false;
  bool even_part = false;
  friend bool operator==(const MaximalIn&, const MaximalIn&) = default;
};

/// One conjugacy class of subgroups of a parent group.
struct SubgroupClass {
  PermGroup representative;
  std::uint64_t order = 0;
  std::uint64_t index_in_parent = 0;
  bool is_transitive = false;
  /// Every element is an even permutation.
  bool is_even = false;
  MaximalIn maximal_in;
  /// Number of conjugates in the parent.
  std::uint64_t class_size = 0;
  std::string name_hint;
};

/// Every conjugacy class of subgroups of G, ordered by order and then by the
/// sorted generator lists. Subgroups are grown from cyclic ones by adjoining
/// one element at a time; new classes are recognised by membership in the set
/// of all conjugates of the classes found so far. Maximality flags are decided
/// through primitivity of coset actions. Throws LatticeCapExceeded.
std::vector<SubgroupClass> all_subgroup_classes(const PermGroup& G, const Limits& limits = {});

/// H maximal in G, decided as primitivity of G on G/H. Throws NotASubgroup,
/// NotProper or IndexCapExceeded.
bool is_maximal(const PermGroup& G, const PermGroup& H, const Limits& limits = {});

enum class MaximalMode {
  /// Transitive, maximal in S_n, and not A_n.
  InSnNotAn,
  /// Transitive subgroups of A_n that are maximal in A_n.
  InAn,
};

/// Classes (up to S_n-conjugacy) of maximal transitive subgroups of S_n or
/// A_n, taken from the lattice of S_n. Supports 5 <= n <= 7; throws
/// UnsupportedDegree otherwise.
std::vector<SubgroupClass> maximal_transitive_subgroups(std::size_t n, MaximalMode mode,
                                                        const Limits& limits = {});

/// Lattice of S_n, computed once per process and shared.
const std::vector<SubgroupClass>& symmetric_group_lattice(std::size_t n, const Limits& limits = {});

/// True when some G-conjugate of H is contained in K.
bool conjugate_into(const PermGroup& G, const PermGroup& H, const PermGroup& K);

/// Lattice-interval test: some class K in `classes` has a conjugate strictly
/// between H and G. Serves as an independent check on is_maximal.
bool has_intermediate_class(const PermGroup& G, std::span<const SubgroupClass> classes,
                            const PermGroup& H);

}  // namespace primcover
