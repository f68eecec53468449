#include "primcover/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "primcover/error.hpp"

namespace primcover {

namespace detail {

// Stabilizer chain with one level per domain point: level k describes
// G_k, the pointwise stabilizer of {0, ..., k-1}. A level whose orbit is
// just {k} stores nothing.
struct StabChain {
  struct Level {
    std::vector<Permutation> strong;
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
    std::vector<std::int32_t> slot;

    bool trivial() const noexcept { return orbit.size() <= 1; }
  };

  explicit StabChain(std::size_t n) : degree(n), identity(n), levels(n) {}

  std::size_t degree;
  Permutation identity;
  std::vector<Level> levels;

  const Permutation* lookup(std::size_t k, Point j, bool inverse) const {
    const Level& lv = levels[k];
    if (lv.slot.empty()) return j == k ? &identity : nullptr;
    const auto s = lv.slot[j];
    if (s < 0) return nullptr;
    return inverse ? &lv.transversal_inv[s] : &lv.transversal[s];
  }

  // True iff g (fixing 0..k-1) lies in G_k as currently represented.
  bool sift_from(std::size_t k, Permutation g) const {
    for (std::size_t j = k; j < degree; ++j) {
      const Point x = g(static_cast<Point>(j));
      if (x == j) continue;
      const Permutation* t = lookup(j, x, true);
      if (t == nullptr) return false;
      g = g * *t;
    }
    return true;
  }

  void add_orbit_point(std::size_t k, Point j, const Permutation& g) {
    Level& lv = levels[k];
    if (lv.slot.empty()) {
      lv.slot.assign(degree, -1);
      lv.slot[k] = 0;
      lv.orbit.push_back(static_cast<Point>(k));
      lv.transversal.push_back(identity);
      lv.transversal_inv.push_back(identity);
    }
    lv.slot[j] = static_cast<std::int32_t>(lv.orbit.size());
    lv.orbit.push_back(j);
    lv.transversal.push_back(g);
    lv.transversal_inv.push_back(g.inverse());
  }

  // Every (orbit representative, strong generator) product pushed through
  // here is either a new orbit point or yields a Schreier generator that is
  // sifted into level k+1.
  void sieve(std::size_t k, Permutation g0) {
    std::vector<Permutation> work;
    work.push_back(std::move(g0));
    while (!work.empty()) {
      Permutation g = std::move(work.back());
      work.pop_back();
      const Point j = g(static_cast<Point>(k));
      const Permutation* t = lookup(k, j, true);
      if (t == nullptr) {
        add_orbit_point(k, j, g);
        const std::size_t count = levels[k].strong.size();
        for (std::size_t i = 0; i < count; ++i) work.push_back(g * levels[k].strong[i]);
      } else {
        Permutation h = g * *t;
        if (k + 1 < degree && !sift_from(k + 1, h)) augment(k + 1, std::move(h));
      }
    }
  }

  void augment(std::size_t k, Permutation g) {
    levels[k].strong.push_back(g);
    std::vector<Permutation> reps = levels[k].transversal;
    if (reps.empty()) reps.push_back(identity);
    for (const auto& t : reps) sieve(k, t * g);
  }

  bool insert(const Permutation& g) {
    if (sift_from(0, g)) return false;
    augment(0, g);
    return true;
  }

  std::uint64_t order() const noexcept {
    std::uint64_t o = 1;
    for (const auto& lv : levels) {
      if (!lv.trivial()) o *= lv.orbit.size();
    }
    return o;
  }

  std::vector<std::size_t> nontrivial_levels() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < degree; ++k) {
      if (!levels[k].trivial()) out.push_back(k);
    }
    return out;
  }
};

}  // namespace detail

namespace {

void check_degree(std::size_t expected, const Permutation& p) {
  if (p.degree() != expected) {
    throw Error(ErrorCode::DegreeMismatch, "expected degree " + std::to_string(expected) + ", got " +
                                               std::to_string(p.degree()));
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }

  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Keeps the smaller root.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  std::vector<Point> parent;
};

}  // namespace

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::vector<Permutation> gens, std::shared_ptr<const detail::StabChain> chain)
    : gens_(std::move(gens)), chain_(std::move(chain)) {}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGeneratorList, "a group needs at least one generator");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens) check_degree(n, g);
  auto chain = std::make_shared<detail::StabChain>(n);
  for (const auto& g : gens) chain->insert(g);
  return PermGroup(std::move(gens), std::move(chain));
}

PermGroup PermGroup::closure(std::size_t degree, std::span<const Permutation> elements) {
  auto chain = std::make_shared<detail::StabChain>(degree);
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    check_degree(degree, e);
    if (chain->insert(e)) gens.push_back(e);
  }
  if (gens.empty()) gens.emplace_back(degree);
  return PermGroup(std::move(gens), std::move(chain));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return from_generators({Permutation(degree)});
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  if (degree < 2) return trivial(degree);
  std::vector<Point> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return from_generators({Permutation::from_cycles(degree, {{0, 1}}),
                          Permutation::from_cycles(degree, {cycle})});
}

PermGroup PermGroup::alternating(std::size_t degree) {
  if (degree < 3) return trivial(degree);
  std::vector<Permutation> gens;
  for (Point i = 2; i < degree; ++i) gens.push_back(Permutation::from_cycles(degree, {{0, 1, i}}));
  return from_generators(std::move(gens));
}

std::size_t PermGroup::degree() const noexcept { return chain_->degree; }

const std::vector<Permutation>& PermGroup::generators() const noexcept { return gens_; }

std::uint64_t PermGroup::order() const noexcept { return chain_->order(); }

bool PermGroup::contains(const Permutation& p) const {
  check_degree(degree(), p);
  return chain_->sift_from(0, p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree()) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_even() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Permutation& g) { return primcover::is_even(g); });
}

std::vector<Point> PermGroup::orbit(Point point) const { return orbit_of(gens_, degree(), point); }

bool PermGroup::is_transitive() const { return primcover::is_transitive(gens_, degree()); }

BlockSystem PermGroup::minimal_block(Point a, Point b) const {
  return primcover::minimal_block(gens_, degree(), a, b);
}

bool PermGroup::is_primitive() const {
  const auto stab = stabilizer_generators();
  return primcover::is_primitive(gens_, degree(), std::span<const Permutation>(stab));
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  const auto levels = chain_->nontrivial_levels();
  bool stop = false;
  // element = t_deepest * ... * t_first; `prefix` is the product of the
  // shallower factors, applied last.
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t depth,
                                                                   const Permutation& prefix) {
    if (stop) return;
    if (depth == levels.size()) {
      if (!visit(prefix)) stop = true;
      return;
    }
    const auto& lv = chain_->levels[levels[depth]];
    for (const auto& t : lv.transversal) {
      walk(depth + 1, t * prefix);
      if (stop) return;
    }
  };
  walk(0, chain_->identity);
}

std::vector<Permutation> PermGroup::elements(const Limits& limits) const {
  if (order() > limits.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "group order " + std::to_string(order()) +
                                                 " exceeds enumeration cap " +
                                                 std::to_string(limits.order_cap));
  }
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<ConjugacyClass> PermGroup::conjugacy_class_reps(const Limits& limits) const {
  auto elems = elements(limits);
  std::sort(elems.begin(), elems.end());
  std::unordered_map<Permutation, std::uint32_t> index;
  index.reserve(elems.size() * 2);
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::vector<Permutation> gens_inv;
  for (const auto& g : gens_) gens_inv.push_back(g.inverse());

  std::vector<bool> seen(elems.size(), false);
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    queue.assign(1, i);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Permutation& x = elems[queue[q]];
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        const auto j = index.at(gens_inv[s] * x * gens_[s]);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    classes.push_back({elems[i], queue.size()});
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return element_order(a.representative) < element_order(b.representative);
  });
  return classes;
}

PermGroup PermGroup::normal_closure(std::span<const Permutation> elements) const {
  const std::size_t n = degree();
  for (const auto& e : elements) check_degree(n, e);
  auto chain = std::make_shared<detail::StabChain>(n);
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    if (chain->insert(e)) gens.push_back(e);
  }
  std::vector<Permutation> gens_inv;
  for (const auto& g : gens_) gens_inv.push_back(g.inverse());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      Permutation c = gens_inv[s] * gens[i] * gens_[s];
      if (chain->insert(c)) gens.push_back(std::move(c));
    }
  }
  if (gens.empty()) gens.emplace_back(n);
  return PermGroup(std::move(gens), std::move(chain));
}

PermGroup PermGroup::even_part() const {
  const auto odd = std::find_if(gens_.begin(), gens_.end(),
                                [](const Permutation& g) { return !primcover::is_even(g); });
  if (odd == gens_.end()) return *this;
  // Schreier generators for the transversal {1, t} of the sign kernel.
  const Permutation& t = *odd;
  const Permutation t_inv = t.inverse();
  std::vector<Permutation> candidates;
  for (const auto& s : gens_) {
    if (primcover::is_even(s)) {
      candidates.push_back(s);
      candidates.push_back(t * s * t_inv);
    } else {
      candidates.push_back(s * t_inv);
      candidates.push_back(t * s);
    }
  }
  return closure(degree(), candidates);
}

std::vector<Permutation> PermGroup::stabilizer_generators() const {
  if (degree() < 2) return {};
  return chain_->levels[1].strong;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = chain_->identity;
  for (const auto k : chain_->nontrivial_levels()) {
    const auto& lv = chain_->levels[k];
    std::uniform_int_distribution<std::size_t> pick(0, lv.transversal.size() - 1);
    g = lv.transversal[pick(rng)] * g;
  }
  return g;
}

Permutation PermGroup::min_coset_rep(const Permutation& x) const {
  check_degree(degree(), x);
  // Elements with prescribed images of the earlier base points form
  // G_k * t; pick the orbit point of G_k minimising the image under t*x.
  Permutation t = chain_->identity;
  for (const auto k : chain_->nontrivial_levels()) {
    const auto& lv = chain_->levels[k];
    std::size_t best = 0;
    Point best_image = x(t(lv.orbit[0]));
    for (std::size_t i = 1; i < lv.orbit.size(); ++i) {
      const Point img = x(t(lv.orbit[i]));
      if (img < best_image) {
        best_image = img;
        best = i;
      }
    }
    if (best != 0) t = lv.transversal[best] * t;
  }
  return t * x;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto k : chain_->nontrivial_levels()) out.push_back(static_cast<Point>(k));
  return out;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto k : chain_->nontrivial_levels()) out.push_back(chain_->levels[k].orbit.size());
  return out;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

// ---------------------------------------------------------------------------
// Generator-level orbit machinery

std::vector<Point> orbit_of(std::span<const Permutation> gens, std::size_t degree, Point point) {
  if (point >= degree) {
    throw Error(ErrorCode::OutOfRange, "point " + std::to_string(point) + " outside degree " +
                                           std::to_string(degree));
  }
  std::vector<bool> seen(degree, false);
  std::vector<Point> orbit{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const Point y = g(orbit[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  return orbit_of(gens, degree, 0).size() == degree;
}

std::vector<std::size_t> orbit_sizes(std::span<const Permutation> gens, std::size_t degree) {
  UnionFind uf(degree);
  for (const auto& g : gens) {
    for (Point i = 0; i < degree; ++i) uf.unite(i, g(i));
  }
  std::map<Point, std::size_t> sizes;
  for (Point i = 0; i < degree; ++i) ++sizes[uf.find(i)];
  std::vector<std::size_t> out;
  for (const auto& [root, size] : sizes) out.push_back(size);
  std::sort(out.begin(), out.end());
  return out;
}

BlockSystem minimal_block(std::span<const Permutation> gens, std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree) throw Error(ErrorCode::OutOfRange, "block seed outside domain");
  if (a == b) throw Error(ErrorCode::EqualPoints, "block seeds must differ");
  if (!is_transitive(gens, degree)) throw Error(ErrorCode::NotTransitive, "minimal_block needs a transitive group");

  UnionFind uf(degree);
  std::vector<std::pair<Point, Point>> pending{{a, b}};
  uf.unite(a, b);
  while (!pending.empty()) {
    const auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& g : gens) {
      const Point u = uf.find(g(x));
      const Point v = uf.find(g(y));
      if (u != v) {
        uf.unite(u, v);
        pending.emplace_back(u, v);
      }
    }
  }
  std::map<Point, std::vector<Point>> cells;
  for (Point i = 0; i < degree; ++i) cells[uf.find(i)].push_back(i);
  BlockSystem bs;
  for (auto& [root, cell] : cells) bs.blocks.push_back(std::move(cell));
  bs.block_size = bs.blocks.front().size();
  return bs;
}

bool is_primitive(std::span<const Permutation> gens, std::size_t degree,
                  std::optional<std::span<const Permutation>> stabilizer_gens) {
  if (degree == 1) return true;
  if (!is_transitive(gens, degree)) return false;
  if (degree == 2) return true;
  std::vector<Point> partners;
  if (stabilizer_gens) {
    UnionFind uf(degree);
    for (const auto& g : *stabilizer_gens) {
      for (Point i = 0; i < degree; ++i) uf.unite(i, g(i));
    }
    for (Point b = 1; b < degree; ++b) {
      if (uf.find(b) == b) partners.push_back(b);
    }
  } else {
    partners.resize(degree - 1);
    std::iota(partners.begin(), partners.end(), Point{1});
  }
  for (const Point b : partners) {
    if (minimal_block(gens, degree, 0, b).blocks.size() > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup conjugacy

namespace {

std::map<CycleType, std::uint64_t> cycle_type_distribution(const PermGroup& H) {
  std::map<CycleType, std::uint64_t> dist;
  H.for_each_element([&](const Permutation& h) {
    ++dist[cycle_type(h)];
    return true;
  });
  return dist;
}

}  // namespace

std::optional<Permutation> subgroups_conjugate(const PermGroup& G, const PermGroup& H1,
                                               const PermGroup& H2, const Limits& limits) {
  if (!H1.is_subgroup_of(G) || !H2.is_subgroup_of(G)) {
    throw Error(ErrorCode::NotASubgroup, "both groups must lie in the ambient group");
  }
  if (G.order() > limits.conjugacy_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "ambient order " + std::to_string(G.order()) +
                                                 " exceeds conjugacy search cap " +
                                                 std::to_string(limits.conjugacy_cap));
  }
  if (H1.order() != H2.order()) return std::nullopt;
  if (orbit_sizes(H1.generators(), H1.degree()) != orbit_sizes(H2.generators(), H2.degree())) {
    return std::nullopt;
  }
  if (cycle_type_distribution(H1) != cycle_type_distribution(H2)) return std::nullopt;

  std::optional<Permutation> found;
  G.for_each_element([&](const Permutation& g) {
    for (const auto& h : H1.generators()) {
      if (!H2.contains(primcover::conjugate(h, g))) return true;
    }
    found = g;
    return false;
  });
  return found;
}

PermGroup conjugate(const PermGroup& H, const Permutation& g) {
  std::vector<Permutation> gens;
  for (const auto& h : H.generators()) gens.push_back(primcover::conjugate(h, g));
  return PermGroup::from_generators(std::move(gens));
}

}  // namespace primcover
