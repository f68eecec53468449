#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "primcover/group.hpp"
#include "primcover/limits.hpp"
#include "primcover/perm.hpp"
#include "primcover/rational.hpp"

namespace primcover {

enum class ActionKind { Natural, Orbit, Cosets, Subsets };

class GroupAction;

/// G on its own domain.
GroupAction natural_action(const PermGroup& G);
/// G on the orbit of `point`, points numbered in sorted order.
GroupAction orbit_action(const PermGroup& G, Point point);
/// G on the [G:H] right cosets of H; point 0 is the coset H itself. Throws
/// NotASubgroup or IndexCapExceeded.
GroupAction coset_action(const PermGroup& G, const PermGroup& H, const Limits& limits = {});
/// G (of degree n) on the ell-subsets of {0..n-1}, subsets in lexicographic
/// order. Requires 1 <= ell < n/2; throws BadEll.
GroupAction omega_ell_action(std::size_t n, std::size_t ell, const PermGroup& G);


/// A finite G-set: the acting group, the number of points, and the
/// permutation each generator of G induces on the points.
///
/// Coset spaces use right cosets H*x with G acting by right multiplication.
/// Under the left-to-right product convention this is a homomorphism, and it
/// is isomorphic to the left-coset action via x -> x^-1, so fixed point
/// counts, orbit counts, primitivity and kernels all coincide.
class GroupAction {
 public:
  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  ActionKind kind() const noexcept { return kind_; }
  const std::vector<Permutation>& generator_images() const noexcept { return generator_images_; }

  /// Image of `point` under g. g must lie in group(); not checked here.
  Point act(Point point, const Permutation& g) const;
  /// The permutation of the points induced by g (unchecked membership).
  Permutation image(const Permutation& g) const;

  /// Human-readable label of a point (coset representative, subset, ...).
  std::string label(Point point) const;
  /// Coset representatives, for coset actions; empty otherwise.
  const std::vector<Permutation>& coset_representatives() const noexcept { return coset_reps_; }
  /// The subgroup whose cosets are acted on, for coset actions.
  const PermGroup* coset_subgroup() const noexcept;

  friend GroupAction natural_action(const PermGroup& G);
  friend GroupAction orbit_action(const PermGroup& G, Point point);
  friend GroupAction coset_action(const PermGroup& G, const PermGroup& H, const Limits& limits);
  friend GroupAction omega_ell_action(std::size_t n, std::size_t ell, const PermGroup& G);

 private:
  struct CosetData;
  struct SubsetData;

  explicit GroupAction(PermGroup group) : group_(std::move(group)) {}

  PermGroup group_;
  ActionKind kind_ = ActionKind::Natural;
  std::size_t size_ = 0;
  std::vector<Permutation> generator_images_;
  std::vector<Permutation> coset_reps_;
  std::vector<Point> orbit_points_;
  std::vector<std::int64_t> orbit_position_;
  std::shared_ptr<const CosetData> cosets_;
  std::shared_ptr<const SubsetData> subsets_;
};

struct ActionElementReport {
  Permutation element;
  std::size_t size = 0;
  std::size_t fixed_points = 0;
  Rational fpr;
  std::size_t orbit_count = 0;
  std::size_t ind = 0;
};

/// Fixed point ratio and index of g on the action. Throws NotInGroup.
ActionElementReport element_report(const Permutation& g, const GroupAction& A);

struct Extremum {
  Rational value;
  Permutation witness;
};

/// Minimal index over nontrivial elements.
///
/// Only prime-order class representatives are inspected: every orbit of g^m
/// lies inside an orbit of g, so ind(g) >= ind(g^m), and some power of any
/// nontrivial g has prime order. The index is a class function. Ties go to
/// the earliest representative. Throws TrivialGroup or OrderCapExceeded.
std::pair<std::size_t, Permutation> min_index(const GroupAction& A, const Limits& limits = {});

/// Maximal fixed point ratio over nontrivial elements, using the same
/// reduction (Fix(g) is contained in Fix(g^m)).
Extremum max_fpr(const GroupAction& A, const Limits& limits = {});

/// Elements acting trivially. Throws OrderCapExceeded.
PermGroup action_kernel(const GroupAction& A, const Limits& limits = {});

/// Stabilizer in G of a point, via Schreier generators.
PermGroup point_stabilizer(const GroupAction& A, Point point);

/// Isomorphic as G-sets: point stabilizers conjugate in G. Throws
/// DifferentGroups or NotTransitive.
bool actions_isomorphic(const GroupAction& A1, const GroupAction& A2, const Limits& limits = {});

/// Primitivity of the induced permutation group on the points.
bool is_primitive_action(const GroupAction& A);

/// Checks that g -> image(g) respects products on `samples` random pairs of
/// group elements. Returns the number of failures (zero for a well-defined
/// action).
std::size_t check_homomorphism(const GroupAction& A, std::mt19937_64& rng, std::size_t samples);

}  // namespace primcover
