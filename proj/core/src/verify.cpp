#include "primcover/verify.hpp"

#include <algorithm>
#include <optional>

#include "primcover/actions.hpp"
#include "primcover/error.hpp"
#include "primcover/parallel.hpp"

namespace primcover {
namespace {

void require_degree(std::size_t n, std::size_t lo, std::size_t hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::UnsupportedDegree, "need " + std::to_string(lo) + " <= n <= " +
                                                  std::to_string(hi) + ", got n=" + std::to_string(n));
  }
}

std::string describe(const std::string& parent, const SubgroupClass& c) {
  return parent + "/" + c.name_hint + " (order " + std::to_string(c.order) +
         (c.is_transitive ? ", transitive)" : ", intransitive)");
}

std::string sym(std::size_t n) { return "S_" + std::to_string(n); }
std::string alt(std::size_t n) { return "A_" + std::to_string(n); }

bool holds(const Rational& value, Comparison c, const Rational& bound) {
  switch (c) {
    case Comparison::AtMost: return value <= bound;
    case Comparison::AtLeast: return value >= bound;
    case Comparison::Equal: return value == bound;
  }
  return false;
}

CheckResult make_check(std::string check, std::string subject, Rational value, Comparison c,
                       Rational bound, std::string detail = {}) {
  CheckResult r{std::move(check), std::move(subject), value, c, bound, holds(value, c, bound),
                std::move(detail)};
  return r;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void append(VerifyReport& into, const VerifyReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

}  // namespace

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::AtMost: return "<=";
    case Comparison::AtLeast: return ">=";
    case Comparison::Equal: return "==";
  }
  return "?";
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<Table1Row> table1(std::span<const std::size_t> n_values, const Limits& limits) {
  for (const auto n : n_values) require_degree(n, 5, 7);
  std::vector<Table1Row> rows;
  for (const auto n : n_values) {
    const PermGroup S = PermGroup::symmetric(n);
    for (const auto mode : {MaximalMode::InSnNotAn, MaximalMode::InAn}) {
      for (const auto& c : maximal_transitive_subgroups(n, mode, limits)) {
        const auto A = coset_action(S, c.representative, limits);
        Table1Row row;
        row.n = n;
        row.name = c.name_hint;
        row.mode = mode;
        row.order = c.order;
        row.index = A.size();
        row.min_index = min_index(A, limits).first;
        row.rho = Rational(static_cast<std::int64_t>(row.min_index), static_cast<std::int64_t>(row.index));
        row.margin = row.rho - Rational(2, static_cast<std::int64_t>(2 * n + 1));
        rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
    return std::tie(a.n, a.order) < std::tie(b.n, b.order);
  });
  return rows;
}

VerifyReport verify_fpr_bounds(std::size_t n, const Limits& limits) {
  require_degree(n, 5, 7);
  VerifyReport report{"fpr-bounds", n, {}};
  const PermGroup S = PermGroup::symmetric(n);
  const PermGroup A = PermGroup::alternating(n);
  const auto in_an = maximal_transitive_subgroups(n, MaximalMode::InAn, limits);
  const auto in_sn = maximal_transitive_subgroups(n, MaximalMode::InSnNotAn, limits);

  for (const auto& c : in_an) {
    const auto m = max_fpr(coset_action(A, c.representative, limits), limits);
    report.checks.push_back(make_check("fpr on A_n/H, H maximal in A_n", describe(alt(n), c), m.value,
                                       Comparison::AtMost, Rational(1, 2),
                                       "witness " + m.witness.to_string()));
  }
  for (const auto& c : in_sn) {
    const auto m = max_fpr(coset_action(S, c.representative, limits), limits);
    report.checks.push_back(make_check("fpr on S_n/H, H maximal in S_n", describe(sym(n), c), m.value,
                                       Comparison::AtMost, Rational(2, 3),
                                       "witness " + m.witness.to_string()));
  }
  for (const auto& c : in_an) {
    const auto m = max_fpr(coset_action(S, c.representative, limits), limits);
    report.checks.push_back(make_check("fpr on S_n/H, H maximal in A_n", describe(sym(n), c), m.value,
                                       Comparison::AtMost, Rational(3, 4),
                                       "witness " + m.witness.to_string()));
  }
  return report;
}

VerifyReport verify_index_bounds(std::size_t n, const Limits& limits) {
  require_degree(n, 5, 7);
  VerifyReport report{"index-bounds", n, {}};
  const PermGroup S = PermGroup::symmetric(n);
  const PermGroup A = PermGroup::alternating(n);
  const auto in_an = maximal_transitive_subgroups(n, MaximalMode::InAn, limits);
  const auto in_sn = maximal_transitive_subgroups(n, MaximalMode::InSnNotAn, limits);

  auto run = [&](const std::string& check, const PermGroup& G, const std::string& parent,
                 const SubgroupClass& c, std::int64_t divisor) {
    const auto X = coset_action(G, c.representative, limits);
    const auto [ind, witness] = min_index(X, limits);
    report.checks.push_back(make_check(check, describe(parent, c), Rational(static_cast<std::int64_t>(ind)),
                                       Comparison::AtLeast,
                                       Rational(static_cast<std::int64_t>(X.size()), divisor),
                                       "witness " + witness.to_string()));
  };
  for (const auto& c : in_an) run("ind on A_n/H, H maximal in A_n", A, alt(n), c, 4);
  for (const auto& c : in_sn) run("ind on S_n/H, H maximal in S_n", S, sym(n), c, 6);
  for (const auto& c : in_an) run("ind on S_n/H, H maximal in A_n", S, sym(n), c, 8);
  return report;
}

VerifyReport verify_index_fpr(std::size_t n, const Limits& limits) {
  require_degree(n, 2, 7);
  VerifyReport report{"index-vs-fpr", n, {}};
  const PermGroup S = PermGroup::symmetric(n);
  const auto& classes = symmetric_group_lattice(n, limits);
  const auto reps = S.conjugacy_class_reps(limits);

  std::vector<std::optional<CheckResult>> results(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) {
    const auto& c = classes[i];
    if (c.order == S.order()) return;
    const auto X = coset_action(S, c.representative, limits);
    std::optional<Rational> worst;
    std::string witness;
    for (const auto& cls : reps) {
      if (cls.representative.is_identity()) continue;
      const auto r = element_report(cls.representative, X);
      const Rational slack =
          Rational(static_cast<std::int64_t>(r.ind)) -
          Rational(static_cast<std::int64_t>(r.size), 2) * (Rational(1) - r.fpr);
      if (!worst || slack < *worst) {
        worst = slack;
        witness = cls.representative.to_string();
      }
    }
    results[i] = make_check("ind - (|X|/2)(1 - fpr)", describe(sym(n), c), worst.value_or(Rational(0)),
                            Comparison::AtLeast, Rational(0), "tightest element " + witness);
  });
  for (auto& r : results) {
    if (r) report.checks.push_back(std::move(*r));
  }
  return report;
}

VerifyReport verify_primitivity_maximality(std::size_t n, const Limits& limits) {
  require_degree(n, 2, 7);
  VerifyReport report{"primitive-iff-maximal", n, {}};
  const PermGroup S = PermGroup::symmetric(n);
  const auto& classes = symmetric_group_lattice(n, limits);

  std::vector<std::optional<CheckResult>> results(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) {
    const auto& c = classes[i];
    if (c.order == S.order()) return;
    const bool primitive = is_maximal(S, c.representative, limits);
    const bool no_between = !has_intermediate_class(S, classes, c.representative);
    std::string detail = std::string(primitive ? "primitive" : "imprimitive") + ", " +
                         (no_between ? "no intermediate class" : "intermediate class exists");
    results[i] = make_check("primitive coset action iff no intermediate subgroup", describe(sym(n), c),
                            Rational(primitive ? 1 : 0), Comparison::Equal, Rational(no_between ? 1 : 0),
                            std::move(detail));
  });
  for (auto& r : results) {
    if (r) report.checks.push_back(std::move(*r));
  }
  return report;
}

VerifyReport verify_lemmas(std::size_t n, const Limits& limits) {
  require_degree(n, 5, 7);
  VerifyReport report{"all-bounds", n, {}};
  append(report, verify_fpr_bounds(n, limits));
  append(report, verify_index_bounds(n, limits));
  append(report, verify_index_fpr(n, limits));
  append(report, verify_primitivity_maximality(n, limits));
  return report;
}

namespace {

/// Automorphisms of S_n (restricting to automorphisms of A_n) given by the
/// permutation actions on cosets of index-n subgroups.
std::vector<GroupAction> degree_n_actions(std::size_t n, const Limits& limits) {
  const PermGroup S = PermGroup::symmetric(n);
  std::vector<GroupAction> out;
  for (const auto& c : symmetric_group_lattice(n, limits)) {
    if (c.index_in_parent == n) out.push_back(coset_action(S, c.representative, limits));
  }
  return out;
}

PermGroup image_group(const GroupAction& phi, const PermGroup& K) {
  std::vector<Permutation> images;
  for (const auto& k : K.generators()) images.push_back(phi.image(k));
  return PermGroup::closure(phi.size(), images);
}

}  // namespace

VerifyReport verify_bg(std::size_t n, const Limits& limits) {
  require_degree(n, 5, 7);
  VerifyReport report{"prime-order-fpr", n, {}};
  const PermGroup A = PermGroup::alternating(n);
  const PermGroup S = PermGroup::symmetric(n);
  const auto classes = all_subgroup_classes(A, limits);
  std::vector<Permutation> prime_reps;
  for (const auto& cls : A.conjugacy_class_reps(limits)) {
    const auto r = element_order(cls.representative);
    bool prime = r >= 2;
    for (std::uint64_t d = 2; d * d <= r; ++d) prime = prime && r % d != 0;
    if (prime) prime_reps.push_back(cls.representative);
  }
  std::optional<std::vector<GroupAction>> automorphisms;

  for (const auto& c : classes) {
    if (!c.maximal_in.parent) continue;
    const auto X = coset_action(A, c.representative, limits);
    if (!action_kernel(X, limits).is_trivial()) continue;
    for (const auto& g : prime_reps) {
      const auto r = static_cast<std::int64_t>(element_order(g));
      const Rational fpr = element_report(g, X).fpr;
      const Rational bound(1, r);
      const std::string subject = describe(alt(n), c) + " at " + g.to_string();
      if (fpr <= bound) {
        report.checks.push_back(make_check("fpr <= 1/order", subject, fpr, Comparison::AtMost, bound,
                                           "within bound"));
        continue;
      }
      std::string exemption;
      for (std::size_t ell = 1; 2 * ell < n && exemption.empty(); ++ell) {
        if (binomial(n, ell) != X.size()) continue;
        const auto Y = omega_ell_action(n, ell, A);
        if (actions_isomorphic(X, Y, limits)) {
          exemption = "isomorphic to the action on " + std::to_string(ell) + "-subsets";
          break;
        }
        if (!automorphisms) automorphisms = degree_n_actions(n, limits);
        const PermGroup K = point_stabilizer(X, 0);
        const PermGroup L = point_stabilizer(Y, 0);
        for (const auto& phi : *automorphisms) {
          if (subgroups_conjugate(S, image_group(phi, K), L, limits)) {
            exemption = "isomorphic to the action on " + std::to_string(ell) +
                        "-subsets after an outer automorphism";
            break;
          }
        }
      }
      CheckResult check = make_check("fpr <= 1/order", subject, fpr, Comparison::AtMost, bound,
                                     exemption.empty() ? "violation" : "exempt: " + exemption);
      check.pass = !exemption.empty();
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace primcover
