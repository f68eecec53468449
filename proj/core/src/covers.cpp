#include "primcover/covers.hpp"

#include "primcover/actions.hpp"
#include "primcover/error.hpp"

namespace primcover {

MonodromyTuple validate_tuple(const PermGroup& G, std::vector<Permutation> sigmas) {
  const std::size_t n = G.degree();
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (sigmas[i].degree() != n) {
      throw Error(ErrorCode::DegreeMismatch, "branch " + std::to_string(i + 1) + " has degree " +
                                                 std::to_string(sigmas[i].degree()));
    }
    if (sigmas[i].is_identity()) {
      throw Error(ErrorCode::TrivialBranch, "branch " + std::to_string(i + 1) + " is the identity");
    }
  }
  const Permutation prod = product(sigmas, n);
  if (!prod.is_identity()) {
    throw Error(ErrorCode::ProductNotIdentity, "product of the branches is " + prod.to_string());
  }
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (!G.contains(sigmas[i])) {
      throw Error(ErrorCode::DoesNotGenerate, "branch " + std::to_string(i + 1) + " " +
                                                  sigmas[i].to_string() + " is not in the group");
    }
  }
  const PermGroup generated = PermGroup::closure(n, sigmas);
  if (generated.order() != G.order()) {
    throw Error(ErrorCode::DoesNotGenerate, "branches generate a subgroup of order " +
                                                std::to_string(generated.order()) + ", group order is " +
                                                std::to_string(G.order()));
  }
  return MonodromyTuple(G, std::move(sigmas));
}

GenusReport genus_subcover(const MonodromyTuple& T, const PermGroup& H, const Limits& limits) {
  const GroupAction A = coset_action(T.group(), H, limits);
  GenusReport report;
  report.subgroup_index = A.size();
  std::int64_t total = 0;
  for (const auto& s : T.branches()) {
    const std::uint64_t ind = A.size() - A.image(s).cycle_count();
    report.branch_indices.push_back(ind);
    total += static_cast<std::int64_t>(ind);
  }
  const auto index = static_cast<std::int64_t>(A.size());
  if (total % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "sum of branch indices " + std::to_string(total) + " is odd");
  }
  report.genus = 1 - index + total / 2;
  if (report.genus < 0) {
    throw Error(ErrorCode::NonIntegralGenus, "negative genus " + std::to_string(report.genus));
  }
  report.rho = index == 1 ? Rational(0)
                          : Rational(static_cast<std::int64_t>(min_index(A, limits).first), index);
  return report;
}

std::int64_t genus_natural_oracle(const MonodromyTuple& T) {
  if (!T.group().is_transitive()) {
    throw Error(ErrorCode::NotTransitive, "the natural-degree oracle needs a transitive group");
  }
  const auto n = static_cast<std::int64_t>(T.group().degree());
  std::int64_t ramification = 0;
  for (const auto& s : T.branches()) {
    for (const auto e : cycle_type(s).parts) ramification += static_cast<std::int64_t>(e) - 1;
  }
  const std::int64_t twice = -2 * n + ramification + 2;
  if (twice % 2 != 0 || twice < 0) {
    throw Error(ErrorCode::NonIntegralGenus, "2g = " + std::to_string(twice));
  }
  return twice / 2;
}

std::int64_t branch_lower_bound(std::int64_t n, std::int64_t g) {
  if (n < 2) throw Error(ErrorCode::BadDegree, "need n >= 2, got " + std::to_string(n));
  if (g < 0) throw Error(ErrorCode::BadInput, "genus must be nonnegative");
  const std::int64_t num = 2 * g - 2 + 2 * n;
  const std::int64_t den = n - 1;
  return (num + den - 1) / den;
}

std::int64_t genus_lower_bound(const Rational& rho, std::int64_t r, std::int64_t index) {
  const Rational bound = Rational(1) + (Rational(r) * rho / 2 - 1) * index;
  return floor(bound);
}

MonodromyTuple random_tuple(const PermGroup& G, std::size_t r, std::mt19937_64& rng,
                            std::size_t max_attempts) {
  if (G.is_trivial() || r < 2) {
    throw Error(ErrorCode::DoesNotGenerate, "need a nontrivial group and at least two branches");
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Permutation> sigmas;
    Permutation prod(G.degree());
    while (sigmas.size() + 1 < r) {
      Permutation g = G.random_element(rng);
      if (g.is_identity()) continue;
      prod = prod * g;
      sigmas.push_back(std::move(g));
    }
    Permutation last = prod.inverse();
    if (last.is_identity()) continue;
    sigmas.push_back(std::move(last));
    if (PermGroup::closure(G.degree(), sigmas).order() != G.order()) continue;
    return validate_tuple(G, std::move(sigmas));
  }
  throw Error(ErrorCode::DoesNotGenerate, "no generating tuple found after " +
                                              std::to_string(max_attempts) + " attempts");
}

}  // namespace primcover
