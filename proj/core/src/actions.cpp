#include "primcover/actions.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "primcover/error.hpp"

namespace primcover {

struct GroupAction::CosetData {
  PermGroup subgroup;
  std::unordered_map<Permutation, Point> index;
};

struct GroupAction::SubsetData {
  std::size_t ell = 0;
  std::vector<std::uint64_t> masks;
  std::unordered_map<std::uint64_t, Point> index;
};

Point GroupAction::act(Point point, const Permutation& g) const {
  switch (kind_) {
    case ActionKind::Natural:
      return g(point);
    case ActionKind::Orbit:
      return static_cast<Point>(orbit_position_[g(orbit_points_[point])]);
    case ActionKind::Cosets:
      return cosets_->index.at(cosets_->subgroup.min_coset_rep(coset_reps_[point] * g));
    case ActionKind::Subsets: {
      std::uint64_t mask = subsets_->masks[point];
      std::uint64_t out = 0;
      while (mask != 0) {
        const int bit = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << g(static_cast<Point>(bit));
      }
      return subsets_->index.at(out);
    }
  }
  return point;
}

Permutation GroupAction::image(const Permutation& g) const {
  if (kind_ == ActionKind::Natural) return g;
  std::vector<Point> images(size_);
  for (Point i = 0; i < size_; ++i) images[i] = act(i, g);
  return Permutation::from_images(std::move(images));
}

std::string GroupAction::label(Point point) const {
  switch (kind_) {
    case ActionKind::Natural:
      return std::to_string(point + 1);
    case ActionKind::Orbit:
      return std::to_string(orbit_points_[point] + 1);
    case ActionKind::Cosets:
      return coset_reps_[point].to_string();
    case ActionKind::Subsets: {
      std::string out = "{";
      std::uint64_t mask = subsets_->masks[point];
      bool first = true;
      while (mask != 0) {
        if (!first) out.push_back(',');
        out += std::to_string(std::countr_zero(mask) + 1);
        mask &= mask - 1;
        first = false;
      }
      return out + "}";
    }
  }
  return {};
}

const PermGroup* GroupAction::coset_subgroup() const noexcept {
  return cosets_ ? &cosets_->subgroup : nullptr;
}

GroupAction natural_action(const PermGroup& G) {
  GroupAction A(G);
  A.kind_ = ActionKind::Natural;
  A.size_ = G.degree();
  A.generator_images_ = G.generators();
  return A;
}

GroupAction orbit_action(const PermGroup& G, Point point) {
  GroupAction A(G);
  A.kind_ = ActionKind::Orbit;
  A.orbit_points_ = G.orbit(point);
  A.orbit_position_.assign(G.degree(), -1);
  for (std::size_t i = 0; i < A.orbit_points_.size(); ++i) A.orbit_position_[A.orbit_points_[i]] = static_cast<std::int64_t>(i);
  A.size_ = A.orbit_points_.size();
  for (const auto& g : G.generators()) A.generator_images_.push_back(A.image(g));
  return A;
}

GroupAction coset_action(const PermGroup& G, const PermGroup& H, const Limits& limits) {
  if (!H.is_subgroup_of(G)) throw Error(ErrorCode::NotASubgroup, "coset_action: H is not contained in G");
  const std::uint64_t index = G.order() / H.order();
  if (index > limits.index_cap) {
    throw Error(ErrorCode::IndexCapExceeded, "index " + std::to_string(index) + " exceeds cap " +
                                                 std::to_string(limits.index_cap));
  }
  GroupAction A(G);
  A.kind_ = ActionKind::Cosets;
  auto data = std::make_shared<GroupAction::CosetData>(GroupAction::CosetData{H, {}});
  data->index.reserve(index * 2);

  const auto& gens = G.generators();
  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(index));
  const Permutation start = H.min_coset_rep(Permutation(G.degree()));
  data->index.emplace(start, 0);
  A.coset_reps_.push_back(start);
  for (std::size_t i = 0; i < A.coset_reps_.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = H.min_coset_rep(A.coset_reps_[i] * gens[s]);
      auto [it, inserted] = data->index.emplace(y, static_cast<Point>(A.coset_reps_.size()));
      if (inserted) A.coset_reps_.push_back(std::move(y));
      images[s][i] = it->second;
    }
  }
  A.size_ = A.coset_reps_.size();
  for (auto& img : images) A.generator_images_.push_back(Permutation::from_images(std::move(img)));
  A.cosets_ = std::move(data);
  return A;
}

GroupAction omega_ell_action(std::size_t n, std::size_t ell, const PermGroup& G) {
  if (G.degree() != n) throw Error(ErrorCode::DegreeMismatch, "group degree differs from n");
  if (ell < 1 || 2 * ell >= n) {
    throw Error(ErrorCode::BadEll, "need 1 <= ell < n/2, got ell=" + std::to_string(ell) +
                                       " n=" + std::to_string(n));
  }
  if (n > 64) throw Error(ErrorCode::BadDegree, "subset actions support degree <= 64");
  GroupAction A(G);
  A.kind_ = ActionKind::Subsets;
  auto data = std::make_shared<GroupAction::SubsetData>();
  data->ell = ell;
  // Lexicographic order of the sorted subsets.
  std::vector<Point> pick(ell);
  for (std::size_t i = 0; i < ell; ++i) pick[i] = static_cast<Point>(i);
  while (true) {
    std::uint64_t mask = 0;
    for (const Point p : pick) mask |= std::uint64_t{1} << p;
    data->index.emplace(mask, static_cast<Point>(data->masks.size()));
    data->masks.push_back(mask);
    std::size_t i = ell;
    while (i > 0 && pick[i - 1] == n - ell + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < ell; ++j) pick[j] = pick[j - 1] + 1;
  }
  A.size_ = data->masks.size();
  A.subsets_ = std::move(data);
  for (const auto& g : G.generators()) A.generator_images_.push_back(A.image(g));
  return A;
}

ActionElementReport element_report(const Permutation& g, const GroupAction& A) {
  if (g.degree() != A.group().degree() || !A.group().contains(g)) {
    throw Error(ErrorCode::NotInGroup, g.to_string() + " is not in the acting group");
  }
  const Permutation img = A.image(g);
  ActionElementReport r{g, A.size(), img.fixed_points(), Rational(0), img.cycle_count(), 0};
  r.fpr = Rational(static_cast<std::int64_t>(r.fixed_points), static_cast<std::int64_t>(r.size));
  r.ind = r.size - r.orbit_count;
  return r;
}

namespace {

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

std::vector<Permutation> prime_order_reps(const PermGroup& G, const Limits& limits) {
  if (G.is_trivial()) throw Error(ErrorCode::TrivialGroup, "the acting group is trivial");
  std::vector<Permutation> reps;
  for (const auto& c : G.conjugacy_class_reps(limits)) {
    if (is_prime(element_order(c.representative))) reps.push_back(c.representative);
  }
  return reps;
}

}  // namespace

std::pair<std::size_t, Permutation> min_index(const GroupAction& A, const Limits& limits) {
  const auto reps = prime_order_reps(A.group(), limits);
  std::optional<std::pair<std::size_t, Permutation>> best;
  for (const auto& g : reps) {
    const auto img = A.image(g);
    const std::size_t ind = A.size() - img.cycle_count();
    if (!best || ind < best->first) best.emplace(ind, g);
  }
  return *best;
}

Extremum max_fpr(const GroupAction& A, const Limits& limits) {
  const auto reps = prime_order_reps(A.group(), limits);
  std::optional<Extremum> best;
  const auto size = static_cast<std::int64_t>(A.size());
  for (const auto& g : reps) {
    const Rational fpr(static_cast<std::int64_t>(A.image(g).fixed_points()), size);
    if (!best || fpr > best->value) best = Extremum{fpr, g};
  }
  return *best;
}

PermGroup action_kernel(const GroupAction& A, const Limits& limits) {
  // The kernel fixes point 0, so only its stabilizer needs scanning.
  const PermGroup stab = A.kind() == ActionKind::Cosets ? *A.coset_subgroup() : point_stabilizer(A, 0);
  if (stab.order() > limits.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "stabilizer order " + std::to_string(stab.order()) +
                                                 " exceeds enumeration cap");
  }
  std::vector<Permutation> kernel;
  stab.for_each_element([&](const Permutation& g) {
    for (Point i = 0; i < A.size(); ++i) {
      if (A.act(i, g) != i) return true;
    }
    kernel.push_back(g);
    return true;
  });
  return PermGroup::closure(A.group().degree(), kernel);
}

PermGroup point_stabilizer(const GroupAction& A, Point point) {
  if (point >= A.size()) throw Error(ErrorCode::OutOfRange, "point outside the action");
  const PermGroup& G = A.group();
  if (A.kind() == ActionKind::Cosets) {
    // Stabilizer of H*r is r^-1 H r.
    return conjugate(*A.coset_subgroup(), A.coset_representatives()[point]);
  }
  std::unordered_map<Point, Permutation> transversal;
  transversal.emplace(point, Permutation(G.degree()));
  std::vector<Point> queue{point};
  std::vector<Permutation> schreier;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Permutation u = transversal.at(queue[q]);
    for (const auto& s : G.generators()) {
      const Point r = A.act(queue[q], s);
      Permutation us = u * s;
      auto it = transversal.find(r);
      if (it == transversal.end()) {
        transversal.emplace(r, std::move(us));
        queue.push_back(r);
      } else {
        Permutation sg = us * it->second.inverse();
        if (!sg.is_identity()) schreier.push_back(std::move(sg));
      }
    }
  }
  return PermGroup::closure(G.degree(), schreier);
}

bool actions_isomorphic(const GroupAction& A1, const GroupAction& A2, const Limits& limits) {
  if (!(A1.group() == A2.group())) throw Error(ErrorCode::DifferentGroups, "actions of different groups");
  if (!is_transitive(A1.generator_images(), A1.size()) || !is_transitive(A2.generator_images(), A2.size())) {
    throw Error(ErrorCode::NotTransitive, "G-set isomorphism is only decided for transitive actions");
  }
  if (A1.size() != A2.size()) return false;
  return subgroups_conjugate(A1.group(), point_stabilizer(A1, 0), point_stabilizer(A2, 0), limits).has_value();
}

bool is_primitive_action(const GroupAction& A) {
  if (A.size() <= 2) return is_transitive(A.generator_images(), A.size());
  if (!is_transitive(A.generator_images(), A.size())) return false;
  std::vector<Permutation> stab_images;
  const PermGroup stab = point_stabilizer(A, 0);
  for (const auto& h : stab.generators()) stab_images.push_back(A.image(h));
  return is_primitive(A.generator_images(), A.size(), std::span<const Permutation>(stab_images));
}

std::size_t check_homomorphism(const GroupAction& A, std::mt19937_64& rng, std::size_t samples) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto g = A.group().random_element(rng);
    const auto h = A.group().random_element(rng);
    if (A.image(g * h) != A.image(g) * A.image(h)) ++failures;
  }
  return failures;
}

}  // namespace primcover
