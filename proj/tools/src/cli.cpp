#include "primcover/cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "primcover/error.hpp"
#include "render.hpp"

namespace primcover::cli {
namespace {

struct Options {
  std::string format = "table";
  std::uint64_t seed = 1;
  std::uint64_t cap_order = Limits{}.order_cap;
  std::uint64_t cap_index = Limits{}.index_cap;
  std::uint64_t cap_lattice = Limits{}.lattice_cap;

  std::vector<std::size_t> n_values;
  std::size_t n = 0;
  std::string which;
  std::string input;
  std::string subgroup = "stab";
  std::vector<std::string> gens;
  std::string parent = "Sn";
  bool transitive = false;
  bool maximal = false;
  std::string on = "natural";
  std::size_t ell = 0;
  std::vector<std::string> elements;
  std::size_t random_branches = 0;

  Limits limits() const {
    Limits l;
    l.order_cap = cap_order;
    l.index_cap = cap_index;
    l.lattice_cap = cap_lattice;
    return l;
  }
  bool json() const { return format == "json"; }
};

/// Thrown for bad combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_range(std::size_t n, std::size_t lo, std::size_t hi) {
  if (n < lo || n > hi) {
    throw UsageError(std::string(to_string(ErrorCode::UnsupportedDegree)) + ": need " + std::to_string(lo) +
                     " <= n <= " + std::to_string(hi) + ", got n=" + std::to_string(n));
  }
}

std::vector<Permutation> parse_gens(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(Permutation::parse(t, degree));
  return out;
}

std::string u(std::uint64_t v) { return std::to_string(v); }

int cmd_table1(const Options& o, std::ostream& out) {
  const std::vector<std::size_t> ns = o.n_values.empty() ? std::vector<std::size_t>{5, 6, 7} : o.n_values;
  for (const auto n : ns) require_range(n, 5, 7);
  const auto rows = table1(ns, o.limits());
  const bool positive = std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.margin > 0; });
  if (o.json()) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    TextTable t({"n", "H", "|H|", "[S_n:H]", "ind", "rho", "rho-2/(2n+1)"});
    for (const auto& r : rows) {
      t.add({u(r.n), r.name, u(r.order), u(r.index), u(r.min_index), to_string(r.rho), to_string(r.margin)});
    }
    t.print(out);
  }
  return positive ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyReport report;
  const Limits limits = o.limits();
  if (o.which == "lemma-indfpr" || o.which == "primmax") {
    require_range(o.n, 2, 7);
  } else {
    require_range(o.n, 5, 7);
  }
  if (o.which == "lemma-fpr") report = verify_fpr_bounds(o.n, limits);
  else if (o.which == "lemma-ind") report = verify_index_bounds(o.n, limits);
  else if (o.which == "lemma-indfpr") report = verify_index_fpr(o.n, limits);
  else if (o.which == "primmax") report = verify_primitivity_maximality(o.n, limits);
  else report = verify_bg(o.n, limits);

  if (o.json()) {
    out << to_json(report).dump(2) << '\n';
  } else {
    TextTable t({"result", "check", "subject", "value", "cmp", "bound", "detail"});
    for (const auto& c : report.checks) {
      t.add({c.pass ? "pass" : "FAIL", c.check, c.subject, to_string(c.value), to_string(c.comparison),
             to_string(c.bound), c.detail});
    }
    t.print(out);
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const CheckResult& c) { return !c.pass; });
    out << report.name << " n=" << report.n << ": " << report.checks.size() << " checks, " << failed
        << " failed: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  }
  return report.pass() ? kExitOk : kExitFailure;
}

PermGroup choose_subgroup(const Options& o, const PermGroup& G) {
  if (o.subgroup == "trivial") return PermGroup::trivial(G.degree());
  if (o.subgroup == "whole") return G;
  if (o.subgroup == "stab") return point_stabilizer(natural_action(G), 0);
  if (o.gens.empty()) return PermGroup::trivial(G.degree());
  return PermGroup::from_generators(parse_gens(o.gens, G.degree()));
}

int cmd_genus(const Options& o, std::ostream& out) {
  const json input = load_json_file(o.input);
  std::optional<MonodromyTuple> tuple;
  if (o.random_branches > 0) {
    const PermGroup G = input.contains("group") ? group_from_json(input["group"], input.value("degree", 0u))
                                                : group_from_json(input);
    std::mt19937_64 rng(o.seed);
    tuple = random_tuple(G, o.random_branches, rng);
  } else {
    tuple = tuple_from_json(input);
  }
  const PermGroup H = choose_subgroup(o, tuple->group());
  const GenusReport report = genus_subcover(*tuple, H, o.limits());
  if (o.json()) {
    json j = to_json(report);
    if (o.random_branches > 0) j["tuple"] = to_json(*tuple);
    out << j.dump(2) << '\n';
  } else {
    if (o.random_branches > 0) {
      out << "branches:";
      for (const auto& s : tuple->branches()) out << ' ' << s.to_string();
      out << '\n';
    }
    out << "index: " << report.subgroup_index << '\n' << "branch_indices:";
    for (const auto i : report.branch_indices) out << ' ' << i;
    out << '\n' << "genus: " << report.genus << '\n' << "rho: " << to_string(report.rho) << '\n';
  }
  return kExitOk;
}

int cmd_subgroups(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("--n is required");
  const bool alternating = o.parent == "An";
  const PermGroup G = alternating ? PermGroup::alternating(o.n) : PermGroup::symmetric(o.n);
  const auto classes = all_subgroup_classes(G, o.limits());
  const std::string parent_label = alternating ? "A_n" : "S_n";
  std::vector<const SubgroupClass*> shown;
  for (const auto& c : classes) {
    if (o.transitive && !c.is_transitive) continue;
    if (o.maximal && !c.maximal_in.parent) continue;
    shown.push_back(&c);
  }
  if (o.json()) {
    json j = json::array();
    for (const auto* c : shown) j.push_back(to_json(*c, alternating));
    out << j.dump(2) << '\n';
  } else {
    TextTable t({"order", "index", "transitive", "maximal_in", "class_size", "name", "generators"});
    for (const auto* c : shown) {
      std::string maximal;
      if (c->maximal_in.parent) maximal = parent_label;
      if (c->maximal_in.even_part) maximal += (maximal.empty() ? "" : ",") + std::string("A_n");
      std::string gens;
      for (const auto& g : c->representative.generators()) gens += (gens.empty() ? "" : " ") + g.to_string();
      t.add({u(c->order), u(c->index_in_parent), c->is_transitive ? "yes" : "no", maximal.empty() ? "-" : maximal,
             u(c->class_size), c->name_hint, gens});
    }
    t.print(out);
  }
  return kExitOk;
}

PermGroup group_for(const Options& o) {
  if (!o.input.empty()) return group_from_json(load_json_file(o.input));
  if (o.n == 0) throw UsageError("give --input or --n");
  if (o.parent == "An") return PermGroup::alternating(o.n);
  return PermGroup::symmetric(o.n);
}

int cmd_action(const Options& o, std::ostream& out) {
  const PermGroup G = group_for(o);
  const Limits limits = o.limits();
  std::optional<GroupAction> A;
  if (o.on == "natural") {
    A = natural_action(G);
  } else if (o.on == "cosets") {
    const PermGroup H = o.gens.empty() ? PermGroup::trivial(G.degree())
                                       : PermGroup::from_generators(parse_gens(o.gens, G.degree()));
    A = coset_action(G, H, limits);
  } else {
    A = omega_ell_action(G.degree(), o.ell, G);
  }

  std::vector<Permutation> elements = parse_gens(o.elements, G.degree());
  if (elements.empty()) {
    for (const auto& c : G.conjugacy_class_reps(limits)) elements.push_back(c.representative);
  }
  std::vector<ActionElementReport> reports;
  for (const auto& g : elements) reports.push_back(element_report(g, *A));
  std::optional<std::pair<std::size_t, Permutation>> least;
  std::optional<Extremum> most;
  if (!G.is_trivial()) {
    least = min_index(*A, limits);
    most = max_fpr(*A, limits);
  }

  if (o.json()) {
    json j;
    j["size"] = A->size();
    j["primitive"] = is_primitive_action(*A);
    j["elements"] = json::array();
    for (const auto& r : reports) j["elements"].push_back(to_json(r));
    if (least) {
      j["min_index"] = {{"ind", least->first}, {"witness", least->second.to_string()}};
      j["max_fpr"] = {{"fpr", to_string(most->value)}, {"witness", most->witness.to_string()}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "points: " << A->size() << (is_primitive_action(*A) ? " (primitive)" : " (imprimitive)") << '\n';
    TextTable t({"element", "fix", "fpr", "orbits", "ind"});
    for (const auto& r : reports) {
      t.add({r.element.to_string(), u(r.fixed_points), to_string(r.fpr), u(r.orbit_count), u(r.ind)});
    }
    t.print(out);
    if (least) {
      out << "min index: " << least->first << " at " << least->second.to_string() << '\n';
      out << "max fpr: " << to_string(most->value) << " at " << most->witness.to_string() << '\n';
    }
  }
  return kExitOk;
}

int cmd_primitive(const Options& o, std::ostream& out) {
  if (!o.gens.empty() && o.n == 0) throw UsageError("--gen needs --n");
  const PermGroup G = !o.gens.empty() ? PermGroup::from_generators(parse_gens(o.gens, o.n)) : group_for(o);
  const bool transitive = G.is_transitive();
  const bool primitive = transitive && G.is_primitive();
  std::optional<BlockSystem> blocks;
  if (transitive && !primitive) {
    for (Point b = 1; b < G.degree(); ++b) {
      auto candidate = G.minimal_block(0, b);
      if (!candidate.is_trivial()) {
        blocks = std::move(candidate);
        break;
      }
    }
  }
  if (o.json()) {
    json j{{"degree", G.degree()}, {"order", G.order()}, {"transitive", transitive}, {"primitive", primitive}};
    if (blocks) {
      json cells = json::array();
      for (const auto& cell : blocks->blocks) {
        json c = json::array();
        for (const auto p : cell) c.push_back(p + 1);
        cells.push_back(c);
      }
      j["blocks"] = cells;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "degree " << G.degree() << ", order " << G.order() << ": "
        << (primitive ? "primitive" : transitive ? "imprimitive" : "not transitive") << '\n';
    if (blocks) {
      out << "blocks:";
      for (const auto& cell : blocks->blocks) {
        out << " {";
        for (std::size_t i = 0; i < cell.size(); ++i) out << (i ? "," : "") << cell[i] + 1;
        out << '}';
      }
      out << '\n';
    }
  }
  return primitive ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--cap-order", o.cap_order, "Largest group enumerated element by element")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap-index", o.cap_index, "Largest coset space built")->check(CLI::PositiveNumber);
  sub->add_option("--cap-lattice", o.cap_lattice, "Largest group whose subgroup lattice is built")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Primitivity, fixed point ratios, subgroup lattices and genera of subcovers", "primcover"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table1", "Rho ratios for maximal transitive subgroups of S_n");
  table->add_option("--n", o.n_values, "Degrees, comma separated (5..7)")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Exhaustive checks of the fpr and index bounds");
  verify->add_option("--n", o.n, "Degree")->required();
  verify->add_option("--which", o.which, "Which family of checks")
      ->required()
      ->check(CLI::IsMember({"lemma-fpr", "lemma-ind", "lemma-indfpr", "bg", "primmax"}));

  auto* genus = app.add_subcommand("genus", "Genus of the subcover fixed by a subgroup");
  genus->add_option("--input", o.input, "Tuple file (JSON)")->required()->check(CLI::ExistingFile);
  genus->add_option("--subgroup", o.subgroup, "trivial, stab, whole or gens")
      ->check(CLI::IsMember({"trivial", "stab", "whole", "gens"}));
  genus->add_option("--gen", o.gens, "Subgroup generator (with --subgroup gens)");
  genus->add_option("--random-branches", o.random_branches,
                    "Ignore the branches and sample this many from the group with --seed");

  auto* subgroups = app.add_subcommand("subgroups", "Conjugacy classes of subgroups of S_n or A_n");
  subgroups->add_option("--n", o.n, "Degree")->required()->check(CLI::PositiveNumber);
  subgroups->add_option("--parent", o.parent, "Sn or An")->check(CLI::IsMember({"Sn", "An"}));
  subgroups->add_flag("--transitive", o.transitive, "Only transitive classes");
  subgroups->add_flag("--maximal", o.maximal, "Only classes maximal in the parent");

  auto* action = app.add_subcommand("action", "Fixed points and indices of elements on a G-set");
  action->add_option("--input", o.input, "Group file (JSON)")->check(CLI::ExistingFile);
  action->add_option("--n", o.n, "Degree, when no --input")->check(CLI::PositiveNumber);
  action->add_option("--parent", o.parent, "Sn or An, when no --input")->check(CLI::IsMember({"Sn", "An"}));
  action->add_option("--on", o.on, "natural, cosets or subsets")
      ->check(CLI::IsMember({"natural", "cosets", "subsets"}));
  action->add_option("--gen", o.gens, "Generator of the subgroup for --on cosets");
  action->add_option("--ell", o.ell, "Subset size for --on subsets");
  action->add_option("--element", o.elements, "Element to report (default: class representatives)");

  auto* primitive = app.add_subcommand("primitive", "Primitivity of a permutation group");
  primitive->add_option("--input", o.input, "Group file (JSON)")->check(CLI::ExistingFile);
  primitive->add_option("--n", o.n, "Degree")->check(CLI::PositiveNumber);
  primitive->add_option("--parent", o.parent, "Sn or An, when no --input or --gen")
      ->check(CLI::IsMember({"Sn", "An"}));
  primitive->add_option("--gen", o.gens, "Generator (needs --n)");

  for (auto* sub : {table, verify, genus, subgroups, action, primitive}) add_common(sub, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table1(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*genus) return cmd_genus(o, out);
    if (*subgroups) return cmd_subgroups(o, out);
    if (*action) return cmd_action(o, out);
    if (*primitive) return cmd_primitive(o, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitFailure;
  } catch (const nlohmann::json::exception& e) {
    err << to_string(ErrorCode::BadInput) << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace primcover::cli
