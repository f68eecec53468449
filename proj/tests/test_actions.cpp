#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "primcover/actions.hpp"
#include "primcover/error.hpp"
#include "primcover/lattice.hpp"

using namespace primcover;

namespace {

Permutation P(const char* text, std::size_t n) { return Permutation::parse(text, n); }

PermGroup G(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const auto* g : gens) ps.push_back(P(g, n));
  return PermGroup::from_generators(ps);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

oracle::Raw raw(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::set<oracle::Raw> raw_elements(const PermGroup& g) {
  std::set<oracle::Raw> out;
  for (const auto& e : g.elements()) out.insert(raw(e));
  return out;
}

const PermGroup kF5 = G(5, {"(1,2,3,4,5)", "(2,3,5,4)"});
const PermGroup kD5 = G(5, {"(1,2,3,4,5)", "(2,5)(3,4)"});

}  // namespace

TEST_CASE("coset action sizes") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(coset_action(s5, s5).size() == 1);
  CHECK(coset_action(s5, kF5).size() == 6);
  CHECK(coset_action(s5, kD5).size() == 12);
  CHECK(coset_action(s5, PermGroup::trivial(5)).size() == 120);
  CHECK(code_of([&] { coset_action(PermGroup::alternating(5), kF5); }) == ErrorCode::NotASubgroup);
  Limits tight;
  tight.index_cap = 10;
  CHECK(code_of([&] { coset_action(s5, kD5, tight); }) == ErrorCode::IndexCapExceeded);
}

TEST_CASE("coset action of a point stabilizer matches the natural action") {
  const auto s5 = PermGroup::symmetric(5);
  const auto stab = point_stabilizer(natural_action(s5), 0);
  CHECK(stab.order() == 24);
  const auto cosets = coset_action(s5, stab);
  CHECK(cosets.size() == 5);
  CHECK(actions_isomorphic(cosets, natural_action(s5)));
  CHECK(actions_isomorphic(natural_action(s5), omega_ell_action(5, 1, s5)));
  CHECK_FALSE(actions_isomorphic(natural_action(s5), coset_action(s5, kF5)));
}

TEST_CASE("natural and subset actions") {
  CHECK(natural_action(PermGroup::symmetric(3)).size() == 3);
  CHECK(natural_action(PermGroup::alternating(5)).size() == 5);
  const auto triv = natural_action(PermGroup::trivial(4));
  CHECK(triv.size() == 4);
  CHECK(element_report(P("()", 4), triv).fixed_points == 4);
  CHECK(omega_ell_action(5, 1, PermGroup::symmetric(5)).size() == 5);
  CHECK(omega_ell_action(5, 2, PermGroup::symmetric(5)).size() == 10);
  CHECK(omega_ell_action(6, 2, PermGroup::alternating(6)).size() == 15);
  CHECK(code_of([] { omega_ell_action(6, 3, PermGroup::symmetric(6)); }) == ErrorCode::BadEll);
  CHECK(code_of([] { omega_ell_action(6, 0, PermGroup::symmetric(6)); }) == ErrorCode::BadEll);
  CHECK(code_of([] { omega_ell_action(6, 2, PermGroup::symmetric(5)); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("element reports") {
  const auto s5 = PermGroup::symmetric(5);
  const auto nat = natural_action(s5);
  const auto id = element_report(P("()", 5), coset_action(s5, kD5));
  CHECK(id.fpr == Rational(1));
  CHECK(id.ind == 0);
  const auto t = element_report(P("(1,2)", 5), nat);
  CHECK(t.fixed_points == 3);
  CHECK(t.fpr == Rational(3, 5));
  CHECK(t.orbit_count == 4);
  CHECK(t.ind == 1);
  const auto c = element_report(P("(1,2,3,4,5)", 5), nat);
  CHECK(c.fpr == Rational(0));
  CHECK(c.ind == 4);
  CHECK(code_of([&] { element_report(P("(1,2)", 5), natural_action(PermGroup::alternating(5))); }) ==
        ErrorCode::NotInGroup);
}

TEST_CASE("coset fixed points and orbits agree with the brute-force oracle") {
  const auto s5 = PermGroup::symmetric(5);
  const auto g_raw = raw_elements(s5);
  for (const auto& h : {kF5, kD5, PermGroup::alternating(5), G(5, {"(1,2)", "(3,4,5)"})}) {
    const auto h_raw = raw_elements(h);
    const auto action = coset_action(s5, h);
    for (const auto& cls : s5.conjugacy_class_reps()) {
      const auto r = element_report(cls.representative, action);
      CHECK(r.fixed_points == oracle::coset_fixed(g_raw, h_raw, raw(cls.representative)));
      CHECK(r.orbit_count == oracle::coset_orbits(g_raw, h_raw, raw(cls.representative)));
    }
  }
}

TEST_CASE("minimal index and maximal fpr") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(min_index(coset_action(s5, kD5)).first == 4);
  CHECK(min_index(natural_action(s5)).first == 1);
  CHECK(cycle_type(min_index(natural_action(s5)).second).parts == std::vector<std::size_t>{2, 1, 1, 1});
  const auto s7 = PermGroup::symmetric(7);
  const auto psl27 = G(7, {"(1,2,3,4,5,6,7)", "(1,2,4)(3,6,5)", "(1,2)(3,6)"});
  REQUIRE(psl27.order() == 168);
  CHECK(min_index(coset_action(s7, psl27)).first == 12);
  CHECK(code_of([] { min_index(natural_action(PermGroup::trivial(3))); }) == ErrorCode::TrivialGroup);
  CHECK(max_fpr(natural_action(s5)).value == Rational(3, 5));
}

TEST_CASE("maximal fpr on the three maximal transitive subgroups of S_6") {
  const auto classes = maximal_transitive_subgroups(6, MaximalMode::InSnNotAn);
  REQUIRE(classes.size() == 3);
  const auto s6 = PermGroup::symmetric(6);
  std::map<std::uint64_t, Rational> by_order;
  for (const auto& c : classes) by_order[c.order] = max_fpr(coset_action(s6, c.representative)).value;
  CHECK(by_order.at(48) == Rational(7, 15));
  CHECK(by_order.at(72) == Rational(2, 5));
  CHECK(by_order.at(120) == Rational(2, 3));
}

TEST_CASE("kernels") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(action_kernel(coset_action(s5, s5)).order() == 120);
  CHECK(action_kernel(coset_action(s5, kF5)).is_trivial());
  CHECK(action_kernel(coset_action(PermGroup::alternating(5), kD5)).is_trivial());
  CHECK(action_kernel(coset_action(s5, PermGroup::alternating(5))).order() == 60);
}

TEST_CASE("kernels equal normal cores over the S_4 and S_5 lattices") {
  for (std::size_t n : {4, 5}) {
    const auto sn = PermGroup::symmetric(n);
    const auto g_raw = raw_elements(sn);
    for (const auto& c : all_subgroup_classes(sn)) {
      const auto core = oracle::normal_core(g_raw, raw_elements(c.representative));
      CHECK(raw_elements(action_kernel(coset_action(sn, c.representative))) == core);
    }
  }
}

TEST_CASE("primitivity of actions") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(is_primitive_action(coset_action(s5, kF5)));
  CHECK_FALSE(is_primitive_action(coset_action(s5, kD5)));
  for (const auto& c : maximal_transitive_subgroups(6, MaximalMode::InAn)) {
    CHECK_FALSE(is_primitive_action(coset_action(PermGroup::symmetric(6), c.representative)));
  }
  CHECK(is_primitive_action(coset_action(s5, PermGroup::alternating(5))));
}

TEST_CASE("isomorphism preconditions") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(code_of([&] { actions_isomorphic(natural_action(s5), natural_action(PermGroup::alternating(5))); }) ==
        ErrorCode::DifferentGroups);
  const auto intrans = G(4, {"(1,2)"});
  CHECK(code_of([&] { actions_isomorphic(natural_action(intrans), natural_action(intrans)); }) ==
        ErrorCode::NotTransitive);
}

TEST_CASE("actions are homomorphisms") {
  std::mt19937_64 rng(3);
  const auto s6 = PermGroup::symmetric(6);
  for (const auto& c : all_subgroup_classes(PermGroup::symmetric(4))) {
    CHECK(check_homomorphism(coset_action(PermGroup::symmetric(4), c.representative), rng, 50) == 0);
  }
  CHECK(check_homomorphism(omega_ell_action(6, 2, s6), rng, 100) == 0);
  CHECK(check_homomorphism(orbit_action(G(6, {"(1,2,3)", "(4,5)"}), 3), rng, 50) == 0);
}

TEST_CASE("labels") {
  const auto a = omega_ell_action(5, 2, PermGroup::symmetric(5));
  CHECK(a.label(0) == "{1,2}");
  CHECK(a.label(9) == "{4,5}");
  const auto c = coset_action(PermGroup::symmetric(5), kF5);
  CHECK(c.label(0) == "()");
  CHECK(c.coset_representatives().size() == 6);
}
