#include <doctest.h>

#include <set>

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

std::uint64_t total_subgroups(const std::vector<SubgroupClass>& classes) {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.class_size;
  return total;
}

std::multiset<std::uint64_t> orders(const std::vector<SubgroupClass>& classes) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : classes) out.insert(c.order);
  return out;
}

}  // namespace

TEST_CASE("class counts match the two-generator oracle") {
  // Subgroups of S_n for n <= 5 are all generated by two elements, so the
  // oracle sees every one of them.
  // Frozen from tests/oracle.hpp: S_3 6/4, S_4 30/11, S_5 156/19.
  struct Expected {
    std::size_t n;
    std::uint64_t subgroups;
    std::size_t classes;
  };
  for (const auto e : {Expected{1, 1, 1}, Expected{2, 2, 2}, Expected{3, 6, 4}, Expected{4, 30, 11},
                       Expected{5, 156, 19}}) {
    const auto classes = all_subgroup_classes(PermGroup::symmetric(e.n));
    CHECK(classes.size() == e.classes);
    CHECK(total_subgroups(classes) == e.subgroups);
  }
}

TEST_CASE("oracle run for S_4 reproduces the frozen numbers") {
  const auto all = oracle::all_perms(4);
  const oracle::Table t(std::set<oracle::Raw>(all.begin(), all.end()));
  const auto subs = oracle::two_generated_subgroups(t);
  CHECK(subs.size() == 30);
  CHECK(oracle::count_classes(t, subs) == 11);
}

TEST_CASE("S_3 classes") {
  const auto classes = all_subgroup_classes(PermGroup::symmetric(3));
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].name_hint == "1");
  CHECK(classes[1].name_hint == "C_2");
  CHECK(classes[1].class_size == 3);
  CHECK(classes[2].name_hint == "A_3");
  CHECK(classes[3].name_hint == "S_3");
  CHECK(all_subgroup_classes(PermGroup::trivial(3)).size() == 1);
}

TEST_CASE("larger lattices") {
  // Known totals for S_6 and S_7: 1455 and 11300 subgroups.
  const auto s6 = all_subgroup_classes(PermGroup::symmetric(6));
  CHECK(s6.size() == 56);
  CHECK(total_subgroups(s6) == 1455);
  const auto s7 = all_subgroup_classes(PermGroup::symmetric(7));
  CHECK(s7.size() == 96);
  CHECK(total_subgroups(s7) == 11300);
  CHECK(all_subgroup_classes(PermGroup::alternating(5)).size() == 9);
  Limits tight;
  tight.lattice_cap = 100;
  CHECK(code_of([&] { all_subgroup_classes(PermGroup::symmetric(5), tight); }) == ErrorCode::LatticeCapExceeded);
}

TEST_CASE("class fields are consistent") {
  const auto sn = PermGroup::symmetric(5);
  for (const auto& c : all_subgroup_classes(sn)) {
    CHECK(c.order * c.index_in_parent == sn.order());
    CHECK(c.order == c.representative.order());
    CHECK(c.is_transitive == c.representative.is_transitive());
    if (c.order < sn.order()) {
      CHECK(c.maximal_in.parent == is_primitive_action(coset_action(sn, c.representative)));
    }
  }
}

TEST_CASE("maximality") {
  const auto s5 = PermGroup::symmetric(5);
  CHECK(is_maximal(s5, PermGroup::alternating(5)));
  CHECK(is_maximal(s5, G(5, {"(1,2,3,4,5)", "(2,3,5,4)"})));
  CHECK_FALSE(is_maximal(s5, G(5, {"(1,2,3,4,5)", "(2,5)(3,4)"})));
  CHECK(code_of([&] { is_maximal(s5, s5); }) == ErrorCode::NotProper);
  CHECK(code_of([&] { is_maximal(PermGroup::alternating(5), G(5, {"(1,2)"})); }) == ErrorCode::NotASubgroup);
}

TEST_CASE("maximality agrees with the interval oracle") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto sn = PermGroup::symmetric(n);
    const auto classes = all_subgroup_classes(sn);
    for (const auto& c : classes) {
      if (c.order == sn.order()) continue;
      CHECK(c.maximal_in.parent == !has_intermediate_class(sn, classes, c.representative));
    }
  }
}

TEST_CASE("maximal transitive subgroups") {
  CHECK(orders(maximal_transitive_subgroups(5, MaximalMode::InAn)) == std::multiset<std::uint64_t>{10});
  CHECK(orders(maximal_transitive_subgroups(5, MaximalMode::InSnNotAn)) == std::multiset<std::uint64_t>{20});
  CHECK(orders(maximal_transitive_subgroups(6, MaximalMode::InSnNotAn)) ==
        std::multiset<std::uint64_t>{48, 72, 120});
  CHECK(orders(maximal_transitive_subgroups(6, MaximalMode::InAn)) == std::multiset<std::uint64_t>{24, 36, 60});
  CHECK(orders(maximal_transitive_subgroups(7, MaximalMode::InAn)) == std::multiset<std::uint64_t>{168});
  CHECK(orders(maximal_transitive_subgroups(7, MaximalMode::InSnNotAn)) == std::multiset<std::uint64_t>{42});
  CHECK(code_of([] { maximal_transitive_subgroups(4, MaximalMode::InAn); }) == ErrorCode::UnsupportedDegree);
  CHECK(code_of([] { maximal_transitive_subgroups(8, MaximalMode::InAn); }) == ErrorCode::UnsupportedDegree);
}

TEST_CASE("maximal transitive subgroups of A_6 up to A_6-conjugacy") {
  // Transitive classes maximal in the lattice of A_6 itself: orders 24, 36, 60.
  std::multiset<std::uint64_t> found;
  for (const auto& c : all_subgroup_classes(PermGroup::alternating(6))) {
    if (c.is_transitive && c.maximal_in.parent) found.insert(c.order);
  }
  CHECK(found == std::multiset<std::uint64_t>{24, 36, 60});
}

TEST_CASE("name hints") {
  std::set<std::string> names;
  for (std::size_t n : {5, 6, 7}) {
    for (const auto mode : {MaximalMode::InSnNotAn, MaximalMode::InAn}) {
      for (const auto& c : maximal_transitive_subgroups(n, mode)) names.insert(c.name_hint);
    }
  }
  CHECK(names == std::set<std::string>{"D_5", "F_5", "S_4", "C_3^2:C_4", "A_5", "C_2xS_4", "S_3wrC_2", "S_5",
                                       "F_7", "PSL(2,7)"});
}

TEST_CASE("conjugate_into") {
  const auto s4 = PermGroup::symmetric(4);
  CHECK(conjugate_into(s4, G(4, {"(1,2)"}), G(4, {"(3,4)", "(1,2)(3,4)"})));
  CHECK_FALSE(conjugate_into(s4, G(4, {"(1,2)"}), PermGroup::alternating(4)));
  CHECK(conjugate_into(s4, G(4, {"(1,2,3)"}), PermGroup::alternating(4)));
}
