#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "primcover/group.hpp"
#include "primcover/limits.hpp"
#include "primcover/perm.hpp"
#include "primcover/rational.hpp"

namespace primcover {

/// Branch data (s_1, ..., s_r) of a Galois cover of the line with group G:
/// every s_i is nontrivial, the left-to-right product s_1 s_2 ... s_r is the
/// identity, and the s_i generate G. Only obtainable through validate_tuple.
class MonodromyTuple {
 public:
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& branches() const noexcept { return branches_; }
  std::size_t branch_count() const noexcept { return branches_.size(); }

  friend MonodromyTuple validate_tuple(const PermGroup& G, std::vector<Permutation> sigmas);

 private:
  MonodromyTuple(PermGroup group, std::vector<Permutation> branches)
      : group_(std::move(group)), branches_(std::move(branches)) {}

  PermGroup group_;
  std::vector<Permutation> branches_;
};

/// Throws TrivialBranch, ProductNotIdentity or DoesNotGenerate (checked in
/// that order), or DegreeMismatch.
MonodromyTuple validate_tuple(const PermGroup& G, std::vector<Permutation> sigmas);

struct GenusReport {
  std::uint64_t subgroup_index = 0;
  /// ind(s_i, G/H) per branch.
  std::vector<std::uint64_t> branch_indices;
  std::int64_t genus = 0;
  /// ind(G, G/H) / [G:H]; zero when [G:H] = 1.
  Rational rho;
};

/// Genus of the subcover fixed by H:
///   genus = 1 - [G:H] + (1/2) * sum_i ind(s_i, G/H).
/// Throws NotASubgroup, IndexCapExceeded, or NonIntegralGenus when the sum
/// is odd or the result negative.
GenusReport genus_subcover(const MonodromyTuple& T, const PermGroup& H, const Limits& limits = {});

/// Riemann-Hurwitz directly on the degree-n map from the cycle types of the
/// branches on {0..n-1}: 2g - 2 = -2n + sum_i sum_cycles (e - 1). Needs G
/// transitive (NotTransitive).
std::int64_t genus_natural_oracle(const MonodromyTuple& T);

/// Least r with -2n + r(n-1) >= 2g - 2, the fewest branch points a degree-n
/// cover of genus g can have. Throws BadDegree for n < 2, BadInput for g < 0.
std::int64_t branch_lower_bound(std::int64_t n, std::int64_t g);

/// floor(1 + (r*rho/2 - 1) * index), evaluated exactly: the genus bound
/// obtained when every branch has index at least rho * index.
std::int64_t genus_lower_bound(const Rational& rho, std::int64_t r, std::int64_t index);

/// Random valid tuple with r branches: r-1 uniform nontrivial elements and
/// the inverse of their product, rejecting draws where the last branch is
/// trivial or the branches fail to generate G. Throws DoesNotGenerate after
/// `max_attempts` rejections.
MonodromyTuple random_tuple(const PermGroup& G, std::size_t r, std::mt19937_64& rng,
                            std::size_t max_attempts = 100000);

}  // namespace primcover
