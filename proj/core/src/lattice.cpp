#include "primcover/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "primcover/actions.hpp"
#include "primcover/error.hpp"
#include "primcover/parallel.hpp"

namespace primcover {

namespace {

// Elements of a small group, indexed, with products found by hashing the
// composed image array into an open-addressing table.
class ElementTable {
 public:
  explicit ElementTable(std::vector<Permutation> elems) : elems_(std::move(elems)) {
    degree_ = elems_.front().degree();
    flat_.resize(elems_.size() * degree_);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      std::copy(elems_[i].images().begin(), elems_[i].images().end(), flat_.begin() + i * degree_);
    }
    std::size_t cap = 16;
    while (cap < elems_.size() * 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
    for (std::uint32_t i = 0; i < elems_.size(); ++i) {
      std::size_t h = hash(row(i)) & mask_;
      while (slots_[h] != kEmpty) h = (h + 1) & mask_;
      slots_[h] = i;
    }
    inverse_.resize(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i) inverse_[i] = index(elems_[i].inverse());
  }

  std::size_t size() const noexcept { return elems_.size(); }
  const Permutation& at(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t inverse(std::uint32_t i) const { return inverse_[i]; }

  std::uint32_t index(const Permutation& p) const { return find(p.images()); }

  // a then b
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    Point buf[64];
    std::vector<Point> big;
    Point* out = buf;
    if (degree_ > 64) {
      big.resize(degree_);
      out = big.data();
    }
    const Point* pa = &flat_[a * degree_];
    const Point* pb = &flat_[b * degree_];
    for (std::size_t i = 0; i < degree_; ++i) out[i] = pb[pa[i]];
    return find(std::span<const Point>(out, degree_));
  }

  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(inverse_[g], x), g); }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffU;

  std::span<const Point> row(std::uint32_t i) const {
    return std::span<const Point>(&flat_[i * degree_], degree_);
  }

  static std::size_t hash(std::span<const Point> images) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const Point x : images) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  std::uint32_t find(std::span<const Point> images) const {
    std::size_t h = hash(images) & mask_;
    while (true) {
      const std::uint32_t i = slots_[h];
      if (i == kEmpty) throw Error(ErrorCode::NotInGroup, "product left the element table");
      if (std::equal(images.begin(), images.end(), flat_.begin() + i * degree_)) return i;
      h = (h + 1) & mask_;
    }
  }

  std::vector<Permutation> elems_;
  std::size_t degree_ = 0;
  std::vector<Point> flat_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  std::vector<std::uint32_t> inverse_;
};

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto w : b) h = (h ^ w) * 0xff51afd7ed558ccdULL + (h >> 31);
    return static_cast<std::size_t>(h);
  }
};

bool test(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::vector<std::uint32_t> members_of(const Bits& b) {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

struct Subgroup {
  Bits members;
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> gens;
};

// <H, x> with H closed: the result is kept as a union of right cosets H*c,
// extended until it is closed under right multiplication by the generators.
Subgroup adjoin(const ElementTable& T, const Subgroup& H, std::uint32_t x) {
  Subgroup K = H;
  K.gens.push_back(x);
  std::vector<std::uint32_t> reps{T.index(Permutation(T.at(0).degree()))};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto s : K.gens) {
      const std::uint32_t y = T.mul(reps[i], s);
      if (test(K.members, y)) continue;
      reps.push_back(y);
      for (const auto h : H.elements) {
        const std::uint32_t e = T.mul(h, y);
        set(K.members, e);
        K.elements.push_back(e);
      }
    }
  }
  return K;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::vector<std::uint32_t> parent;
};

struct RawClass {
  Subgroup rep;
  std::uint64_t class_size = 0;
};

std::vector<RawClass> enumerate_classes(const ElementTable& T, const PermGroup& G) {
  const std::size_t words = (T.size() + 63) / 64;
  const std::uint32_t identity = T.index(Permutation(G.degree()));

  std::vector<std::uint32_t> g_gens;
  for (const auto& g : G.generators()) g_gens.push_back(T.index(g));
  std::vector<std::vector<std::uint32_t>> conj_by_gen(g_gens.size(), std::vector<std::uint32_t>(T.size()));
  for (std::size_t s = 0; s < g_gens.size(); ++s) {
    for (std::uint32_t e = 0; e < T.size(); ++e) conj_by_gen[s][e] = T.conj(e, g_gens[s]);
  }

  std::vector<RawClass> classes;
  std::unordered_map<Bits, std::uint32_t, BitsHash> seen;

  const auto record = [&](Subgroup K) {
    if (seen.contains(K.members)) return;
    const auto id = static_cast<std::uint32_t>(classes.size());
    std::vector<Bits> queue{K.members};
    seen.emplace(K.members, id);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto elems = members_of(queue[q]);
      for (const auto& cmap : conj_by_gen) {
        Bits c(words, 0);
        for (const auto e : elems) set(c, cmap[e]);
        if (seen.emplace(c, id).second) queue.push_back(std::move(c));
      }
    }
    classes.push_back({std::move(K), queue.size()});
  };

  Subgroup trivial{Bits(words, 0), {identity}, {}};
  set(trivial.members, identity);
  record(std::move(trivial));

  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Subgroup H = classes[c].rep;
    if (H.elements.size() == T.size()) continue;

    // Normalizer of H, as a short generating list.
    Subgroup N{Bits(words, 0), {identity}, {}};
    set(N.members, identity);
    for (std::uint32_t g = 0; g < T.size(); ++g) {
      if (test(N.members, g)) continue;
      const bool normalizes = std::all_of(H.gens.begin(), H.gens.end(), [&](std::uint32_t h) {
        return test(H.members, T.conj(h, g));
      });
      if (normalizes) N = adjoin(T, N, g);
    }

    // <H, x> only depends on x up to x -> h1 x h2 and conjugation by N(H).
    UnionFind uf(T.size());
    for (std::uint32_t x = 0; x < T.size(); ++x) {
      for (const auto h : H.gens) {
        uf.unite(x, T.mul(h, x));
        uf.unite(x, T.mul(x, h));
      }
      for (const auto n : N.gens) uf.unite(x, T.conj(x, n));
    }
    const std::uint32_t inside = uf.find(identity);
    for (std::uint32_t x = 0; x < T.size(); ++x) {
      if (uf.find(x) != x || x == inside) continue;
      record(adjoin(T, H, x));
    }
  }
  return classes;
}

bool is_cyclic(const PermGroup& K) {
  bool cyclic = false;
  K.for_each_element([&](const Permutation& g) {
    cyclic = element_order(g) == K.order();
    return !cyclic;
  });
  return cyclic;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Fingerprint {
  std::size_t degree;
  std::uint64_t order;
  bool even;
  const char* name;
};

// Transitive groups maximal in S_n or A_n for small n; (degree, order,
// parity) is unambiguous among those.
constexpr Fingerprint kTransitiveNames[] = {
    {5, 10, true, "D_5"},          {5, 20, false, "F_5"},         {6, 24, true, "S_4"},
    {6, 36, true, "C_3^2:C_4"},    {6, 60, true, "A_5"},          {6, 48, false, "C_2xS_4"},
    {6, 72, false, "S_3wrC_2"},    {6, 120, false, "S_5"},        {7, 42, false, "F_7"},
    {7, 168, true, "PSL(2,7)"},
};

std::string name_for(const SubgroupClass& c, std::size_t ordinal) {
  const std::size_t n = c.representative.degree();
  if (c.order == 1) return "1";
  if (c.is_transitive && c.order == factorial(n)) return "S_" + std::to_string(n);
  if (c.is_transitive && n >= 3 && c.is_even && c.order == factorial(n) / 2) return "A_" + std::to_string(n);
  if (c.is_transitive && (c.maximal_in.parent || c.maximal_in.even_part)) {
    for (const auto& f : kTransitiveNames) {
      if (f.degree == n && f.order == c.order && f.even == c.is_even) return f.name;
    }
  }
  if (n >= 4) {
    auto sizes = orbit_sizes(c.representative.generators(), n);
    std::sort(sizes.begin(), sizes.end());
    if (sizes == std::vector<std::size_t>{1, n - 1}) {
      const std::string m = std::to_string(n - 1);
      if (c.order == factorial(n - 1)) return "S_" + m;
      if (c.order == factorial(n - 1) / 2) return "A_" + m;
    }
  }
  if (is_cyclic(c.representative)) return "C_" + std::to_string(c.order);
  return "order-" + std::to_string(c.order) + " class #" + std::to_string(ordinal);
}

}  // namespace

std::vector<SubgroupClass> all_subgroup_classes(const PermGroup& G, const Limits& limits) {
  if (G.order() > limits.lattice_cap) {
    throw Error(ErrorCode::LatticeCapExceeded, "group order " + std::to_string(G.order()) +
                                                   " exceeds lattice cap " +
                                                   std::to_string(limits.lattice_cap));
  }
  auto elems = G.elements(limits);
  std::sort(elems.begin(), elems.end());
  const ElementTable T(std::move(elems));
  const auto raw = enumerate_classes(T, G);

  std::vector<SubgroupClass> out;
  out.reserve(raw.size());
  for (const auto& rc : raw) {
    std::vector<Permutation> gens;
    for (const auto g : rc.rep.gens) gens.push_back(T.at(g));
    std::sort(gens.begin(), gens.end());
    if (gens.empty()) gens.emplace_back(G.degree());
    SubgroupClass c{PermGroup::from_generators(gens), rc.rep.elements.size(), 0, false, false, {},
                    rc.class_size, {}};
    c.index_in_parent = G.order() / c.order;
    c.is_transitive = c.representative.is_transitive();
    c.is_even = c.representative.is_even();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative.generators() < b.representative.generators();
  });

  const bool has_even_part = !G.is_even();
  const PermGroup even = G.even_part();
  parallel_for(out.size(), [&](std::size_t i) {
    SubgroupClass& c = out[i];
    if (c.order < G.order()) c.maximal_in.parent = is_maximal(G, c.representative, limits);
    if (has_even_part && c.is_even && c.order < even.order()) {
      c.maximal_in.even_part = is_maximal(even, c.representative, limits);
    }
  });

  std::map<std::uint64_t, std::size_t> ordinal;
  for (auto& c : out) c.name_hint = name_for(c, ++ordinal[c.order]);
  return out;
}

bool is_maximal(const PermGroup& G, const PermGroup& H, const Limits& limits) {
  if (!H.is_subgroup_of(G)) throw Error(ErrorCode::NotASubgroup, "is_maximal: H is not contained in G");
  if (H.order() == G.order()) throw Error(ErrorCode::NotProper, "is_maximal: H equals G");
  const auto A = coset_action(G, H, limits);
  const auto& stab = H.generators();
  std::vector<Permutation> stab_images;
  for (const auto& h : stab) stab_images.push_back(A.image(h));
  return is_primitive(A.generator_images(), A.size(), std::span<const Permutation>(stab_images));
}

const std::vector<SubgroupClass>& symmetric_group_lattice(std::size_t n, const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<SubgroupClass>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_subgroup_classes(PermGroup::symmetric(n), limits)).first;
  return it->second;
}

std::vector<SubgroupClass> maximal_transitive_subgroups(std::size_t n, MaximalMode mode,
                                                        const Limits& limits) {
  if (n < 5 || n > 7) {
    throw Error(ErrorCode::UnsupportedDegree,
                "maximal transitive subgroups are tabulated for 5 <= n <= 7, got n=" + std::to_string(n));
  }
  std::vector<SubgroupClass> out;
  const std::uint64_t alt_order = factorial(n) / 2;
  for (const auto& c : symmetric_group_lattice(n, limits)) {
    if (!c.is_transitive) continue;
    if (mode == MaximalMode::InSnNotAn) {
      if (c.maximal_in.parent && !(c.is_even && c.order == alt_order)) out.push_back(c);
    } else if (c.is_even && c.maximal_in.even_part) {
      out.push_back(c);
    }
  }
  return out;
}

bool conjugate_into(const PermGroup& G, const PermGroup& H, const PermGroup& K) {
  if (K.order() % H.order() != 0) return false;
  std::map<CycleType, std::uint64_t> in_h;
  std::map<CycleType, std::uint64_t> in_k;
  H.for_each_element([&](const Permutation& h) {
    ++in_h[cycle_type(h)];
    return true;
  });
  K.for_each_element([&](const Permutation& k) {
    ++in_k[cycle_type(k)];
    return true;
  });
  for (const auto& [ct, count] : in_h) {
    const auto it = in_k.find(ct);
    if (it == in_k.end() || it->second < count) return false;
  }
  bool found = false;
  G.for_each_element([&](const Permutation& g) {
    found = std::all_of(H.generators().begin(), H.generators().end(),
                        [&](const Permutation& h) { return K.contains(conjugate(h, g)); });
    return !found;
  });
  return found;
}

bool has_intermediate_class(const PermGroup& G, std::span<const SubgroupClass> classes,
                            const PermGroup& H) {
  for (const auto& c : classes) {
    if (c.order <= H.order() || c.order >= G.order()) continue;
    if (conjugate_into(G, H, c.representative)) return true;
  }
  return false;
}

}  // namespace primcover
