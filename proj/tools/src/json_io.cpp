#include "json_io.hpp"

#include <fstream>

#include "primcover/error.hpp"

namespace primcover::cli {
namespace {

std::vector<Permutation> parse_perms(const json& list, std::size_t degree) {
  if (!list.is_array()) throw Error(ErrorCode::BadInput, "expected an array of permutations");
  std::vector<Permutation> out;
  for (const auto& item : list) {
    if (!item.is_string()) throw Error(ErrorCode::BadInput, "permutations are written as cycle strings");
    out.push_back(Permutation::parse(item.get<std::string>(), degree));
  }
  return out;
}

std::size_t read_degree(const json& j, std::size_t fallback) {
  if (j.contains("degree")) {
    if (!j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0) {
      throw Error(ErrorCode::BadDegree, "degree must be a positive integer");
    }
    return j["degree"].get<std::size_t>();
  }
  if (fallback == 0) throw Error(ErrorCode::BadInput, "missing \"degree\"");
  return fallback;
}

json perm_strings(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(p.to_string());
  return out;
}

}  // namespace

PermGroup group_from_json(const json& j, std::size_t fallback_degree) {
  if (!j.is_object()) throw Error(ErrorCode::BadInput, "group must be a JSON object");
  const std::size_t degree = read_degree(j, fallback_degree);
  if (!j.contains("generators")) throw Error(ErrorCode::BadInput, "missing \"generators\"");
  const auto gens = parse_perms(j["generators"], degree);
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup::from_generators(gens);
}

MonodromyTuple tuple_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadInput, "tuple file must hold a JSON object");
  const std::size_t degree = read_degree(j, 0);
  if (!j.contains("group")) throw Error(ErrorCode::BadInput, "missing \"group\"");
  if (!j.contains("branches")) throw Error(ErrorCode::BadInput, "missing \"branches\"");
  const PermGroup G = group_from_json(j["group"], degree);
  if (G.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "group degree differs from tuple degree");
  return validate_tuple(G, parse_perms(j["branches"], degree));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadInput, path + ": " + e.what());
  }
}

json to_json(const GenusReport& r) {
  return {{"index", r.subgroup_index},
          {"branch_indices", r.branch_indices},
          {"genus", r.genus},
          {"rho", to_string(r.rho)}};
}

json to_json(const ActionElementReport& r) {
  return {{"size", r.size},         {"element", r.element.to_string()}, {"fix", r.fixed_points},
          {"fpr", to_string(r.fpr)}, {"orbits", r.orbit_count},          {"ind", r.ind}};
}

json to_json(const SubgroupClass& c, bool alternating_parent) {
  json maximal = json::array();
  if (c.maximal_in.parent) maximal.push_back(alternating_parent ? "A_n" : "S_n");
  if (c.maximal_in.even_part) maximal.push_back("A_n");
  return {{"order", c.order},
          {"index", c.index_in_parent},
          {"transitive", c.is_transitive},
          {"maximal_in", maximal},
          {"class_size", c.class_size},
          {"name", c.name_hint},
          {"generators", perm_strings(c.representative.generators())}};
}

json to_json(const Table1Row& r) {
  return {{"n", r.n},
          {"H", r.name},
          {"order", r.order},
          {"index", r.index},
          {"ind", r.min_index},
          {"rho", to_string(r.rho)},
          {"rho_minus_bound", to_string(r.margin)},
          {"maximal_in", r.mode == MaximalMode::InAn ? "A_n" : "S_n"}};
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.check},
                      {"subject", c.subject},
                      {"value", to_string(c.value)},
                      {"comparison", to_string(c.comparison)},
                      {"bound", to_string(c.bound)},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  }
  return {{"report", r.name}, {"n", r.n}, {"pass", r.pass()}, {"checks", checks}};
}

json to_json(const MonodromyTuple& t) {
  return {{"degree", t.group().degree()},
          {"group", {{"degree", t.group().degree()}, {"generators", perm_strings(t.group().generators())}}},
          {"branches", perm_strings(t.branches())}};
}

}  // namespace primcover::cli
