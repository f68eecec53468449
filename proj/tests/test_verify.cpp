#include <doctest.h>

#include <algorithm>
#include <set>

#include "primcover/error.hpp"
#include "primcover/verify.hpp"

using namespace primcover;

namespace {

struct Row {
  std::size_t n;
  std::uint64_t order, index, ind;
  Rational rho;
  friend bool operator==(const Row&, const Row&) = default;
  friend auto operator<=>(const Row& a, const Row& b) {
    return std::tie(a.n, a.order, a.index, a.ind) <=> std::tie(b.n, b.order, b.index, b.ind);
  }
};

std::size_t count_detail(const VerifyReport& r, const std::string& needle) {
  return std::count_if(r.checks.begin(), r.checks.end(),
                       [&](const CheckResult& c) { return c.detail.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("rho table") {
  const std::size_t ns[] = {5, 6, 7};
  const auto rows = table1(ns);
  std::vector<Row> got;
  for (const auto& r : rows) {
    got.push_back({r.n, r.order, r.index, r.min_index, r.rho});
    CHECK(r.margin == r.rho - Rational(2, static_cast<std::int64_t>(2 * r.n + 1)));
    CHECK(r.margin > 0);
  }
  std::vector<Row> expected{
      {5, 10, 12, 4, {1, 3}},  {5, 20, 6, 2, {1, 3}},   {6, 24, 30, 12, {2, 5}}, {6, 36, 20, 8, {2, 5}},
      {6, 60, 12, 4, {1, 3}},  {6, 48, 15, 4, {4, 15}}, {6, 72, 10, 3, {3, 10}}, {6, 120, 6, 1, {1, 6}},
      {7, 42, 120, 56, {7, 15}}, {7, 168, 30, 12, {2, 5}},
  };
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  CHECK(std::is_sorted(rows.begin(), rows.end(),
                       [](const Table1Row& a, const Table1Row& b) { return std::tie(a.n, a.order) < std::tie(b.n, b.order); }));
  CHECK(rows[0].name == "D_5");
  CHECK(rows[1].name == "F_5");
  CHECK(rows[0].margin == Rational(5, 33));
  CHECK(rows.back().margin == Rational(4, 15));
}

TEST_CASE("rho table per degree") {
  const std::size_t five[] = {5};
  CHECK(table1(five).size() == 2);
  const std::size_t bad[] = {4};
  CHECK_THROWS_AS(table1(bad), Error);
}

TEST_CASE("fpr bounds") {
  for (std::size_t n : {5, 6, 7}) {
    const auto r = verify_fpr_bounds(n);
    CHECK(r.pass());
  }
  const auto six = verify_fpr_bounds(6);
  std::multiset<Rational> case_two;
  for (const auto& c : six.checks) {
    if (c.bound == Rational(2, 3)) case_two.insert(c.value);
  }
  CHECK(case_two == std::multiset<Rational>{{7, 15}, {2, 5}, {2, 3}});
}

TEST_CASE("index bounds") {
  for (std::size_t n : {5, 6, 7}) CHECK(verify_index_bounds(n).pass());
  const auto seven = verify_index_bounds(7);
  const auto it = std::find_if(seven.checks.begin(), seven.checks.end(), [](const CheckResult& c) {
    return c.subject.rfind("S_7/PSL(2,7)", 0) == 0 && c.bound == Rational(30, 8);
  });
  REQUIRE(it != seven.checks.end());
  CHECK(it->value == Rational(12));
}

TEST_CASE("index versus fpr, all subgroup classes") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = verify_index_fpr(n);
    CHECK(r.pass());
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("primitivity against maximality") {
  for (std::size_t n = 2; n <= 6; ++n) CHECK(verify_primitivity_maximality(n).pass());
  CHECK(verify_primitivity_maximality(4).checks.size() == 10);
  CHECK(verify_primitivity_maximality(5).checks.size() == 18);
}

TEST_CASE("prime-order fpr bound") {
  const auto five = verify_bg(5);
  CHECK(five.pass());
  CHECK(count_detail(five, "violation") == 0);
  const auto six = verify_bg(6);
  CHECK(six.pass());
  // The transitive A_5 < A_6 gives a 6-point action that is the natural one
  // twisted by the exceptional outer automorphism.
  CHECK(count_detail(six, "outer automorphism") == 1);
  CHECK(verify_bg(7).pass());
}

TEST_CASE("degree preconditions") {
  CHECK_THROWS_AS(verify_bg(4), Error);
  CHECK_THROWS_AS(verify_fpr_bounds(8), Error);
  CHECK_THROWS_AS(verify_index_fpr(1), Error);
  CHECK_THROWS_AS(verify_lemmas(4), Error);
}
