#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "primcover/limits.hpp"
#include "primcover/perm.hpp"

namespace primcover {

namespace detail {
struct StabChain;
}

/// A partition of the domain into equal-size cells, each cell sorted and the
/// cells ordered by their smallest point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  std::size_t block_size = 0;

  bool is_trivial() const noexcept { return blocks.size() <= 1 || block_size <= 1; }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size = 0;
};

/// A permutation group given by generators, with a stabilizer chain built
/// eagerly at construction. The chain uses one level per domain point in
/// increasing order, so the base is always increasing and every query is
/// deterministic. Immutable; copies share the chain.
class PermGroup {
 public:
  /// Throws EmptyGeneratorList or DegreeMismatch.
  static PermGroup from_generators(std::vector<Permutation> gens);
  /// The group generated by `elements`, keeping only generators that enlarge
  /// the group built so far.
  static PermGroup closure(std::size_t degree, std::span<const Permutation> elements);
  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t order() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  /// Membership by sifting. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  /// True when every generator is an even permutation.
  bool is_even() const;

  /// Sorted orbit of `point`. Throws OutOfRange.
  std::vector<Point> orbit(Point point) const;
  bool is_transitive() const;
  /// Finest G-stable partition with a and b in one cell. Throws NotTransitive
  /// or EqualPoints.
  BlockSystem minimal_block(Point a, Point b) const;
  /// A one-point domain counts as primitive; intransitive groups are not.
  bool is_primitive() const;

  /// All elements, in chain transversal product order. Throws OrderCapExceeded.
  std::vector<Permutation> elements(const Limits& limits = {}) const;
  /// Visits elements in the same order as elements(); stops early when the
  /// visitor returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

  /// One representative per class, ordered by element order and then by
  /// images; each representative is the lexicographically least member.
  std::vector<ConjugacyClass> conjugacy_class_reps(const Limits& limits = {}) const;

  /// Smallest normal subgroup containing `elements`. Throws DegreeMismatch.
  PermGroup normal_closure(std::span<const Permutation> elements) const;
  /// The subgroup of even permutations.
  PermGroup even_part() const;
  /// Generators of the stabilizer of point 0 (from the chain).
  std::vector<Permutation> stabilizer_generators() const;

  /// Uniform random element.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Lexicographically least element of the right coset (this group) * x.
  /// Two elements x, y lie in the same right coset iff their
  /// representatives agree.
  Permutation min_coset_rep(const Permutation& x) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;

  /// Same set of elements.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  PermGroup(std::vector<Permutation> gens, std::shared_ptr<const detail::StabChain> chain);

  std::vector<Permutation> gens_;
  std::shared_ptr<const detail::StabChain> chain_;
};

/// Orbit computations on a bare generator list over {0, ..., degree-1}. These
/// never build a stabilizer chain, so they scale to large coset spaces.
std::vector<Point> orbit_of(std::span<const Permutation> gens, std::size_t degree, Point point);
bool is_transitive(std::span<const Permutation> gens, std::size_t degree);
BlockSystem minimal_block(std::span<const Permutation> gens, std::size_t degree, Point a, Point b);
/// When `stabilizer_gens` generate the stabilizer of point 0, only one
/// candidate partner per stabilizer orbit is tested.
bool is_primitive(std::span<const Permutation> gens, std::size_t degree,
                  std::optional<std::span<const Permutation>> stabilizer_gens = std::nullopt);
/// Sizes of all orbits, sorted ascending.
std::vector<std::size_t> orbit_sizes(std::span<const Permutation> gens, std::size_t degree);

/// An element g of G with g^-1 * H1 * g == H2, if any. Filters on order,
/// orbit sizes and the cycle-type distribution before searching G
/// exhaustively. Throws NotASubgroup or OrderCapExceeded (conjugacy_cap).
std::optional<Permutation> subgroups_conjugate(const PermGroup& G, const PermGroup& H1,
                                               const PermGroup& H2, const Limits& limits = {});

/// g^-1 * H * g.
PermGroup conjugate(const PermGroup& H, const Permutation& g);

}  // namespace primcover
