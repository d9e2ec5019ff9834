#include "invconj/json_io.hpp"

#include <fstream>

namespace invconj {

json table_to_json(const CayleyTable& t) {
  json j;
  j["elements"] = t.elements;
  json rows = json::array();
  for (const auto& row : t.table) {
    json r = json::array();
    for (int v : row) r.push_back(t.elements[v]);
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  return j;
}

CayleyTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw Error("BadInput", "table JSON needs 'elements' and 'table'");
  CayleyTable t;
  for (const auto& e : j.at("elements")) t.elements.push_back(e.get<std::string>());
  for (const auto& row : j.at("table")) {
    std::vector<int> r;
    for (const auto& cell : row)
      r.push_back(t.index_of(cell.get<std::string>()));
    t.table.push_back(std::move(r));
  }
  check_shape(t);
  return t;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("BadInput", "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

CayleyTable load_table(const std::string& path) {
  return table_from_json(parse_file(path));
}

json triple_to_json(const McAlisterTriple& t) {
  json j;
  j["group"] = table_to_json(t.group);
  json poset;
  poset["elements"] = t.poset.elements;
  json leq = json::array();
  for (const auto& row : t.poset.leq) {
    json r = json::array();
    for (bool v : row) r.push_back(v);
    leq.push_back(std::move(r));
  }
  poset["leq"] = std::move(leq);
  j["poset"] = std::move(poset);
  json ideal = json::array();
  for (int y : t.ideal) ideal.push_back(t.poset.elements[y]);
  j["ideal"] = std::move(ideal);
  json action;
  for (int g = 0; g < t.group.size(); ++g) {
    json row;
    for (int x = 0; x < t.poset.size(); ++x)
      row[t.poset.elements[x]] = t.poset.elements[t.action[g][x]];
    action[t.group.elements[g]] = std::move(row);
  }
  j["action"] = std::move(action);
  return j;
}

McAlisterTriple triple_from_json(const json& j) {
  for (const char* key : {"group", "poset", "ideal", "action"})
    if (!j.contains(key))
      throw Error("BadInput", std::string("triple JSON needs '") + key + "'");
  McAlisterTriple t;
  t.group = table_from_json(j.at("group"));
  const json& poset = j.at("poset");
  if (!poset.contains("elements") || !poset.contains("leq"))
    throw Error("BadInput", "poset JSON needs 'elements' and 'leq'");
  for (const auto& e : poset.at("elements"))
    t.poset.elements.push_back(e.get<std::string>());
  for (const auto& row : poset.at("leq")) {
    std::vector<bool> r;
    for (const auto& cell : row) r.push_back(cell.get<bool>());
    t.poset.leq.push_back(std::move(r));
  }
  for (const auto& y : j.at("ideal"))
    t.ideal.push_back(t.poset.index_of(y.get<std::string>()));
  std::sort(t.ideal.begin(), t.ideal.end());
  t.action.assign(t.group.size(),
                  std::vector<int>(t.poset.size(), -1));
  const json& action = j.at("action");
  for (int g = 0; g < t.group.size(); ++g) {
    if (!action.contains(t.group.elements[g]))
      throw Error("BadInput", "action missing for '" + t.group.elements[g] + "'");
    const json& row = action.at(t.group.elements[g]);
    for (int x = 0; x < t.poset.size(); ++x) {
      if (!row.contains(t.poset.elements[x]))
        throw Error("BadInput", "action of '" + t.group.elements[g] +
                                    "' missing on '" + t.poset.elements[x] + "'");
      t.action[g][x] = t.poset.index_of(row.at(t.poset.elements[x]).get<std::string>());
    }
  }
  return t;
}

McAlisterTriple load_triple(const std::string& path) {
  return triple_from_json(parse_file(path));
}

json validation_to_json(const ValidationReport& r, const CayleyTable& t) {
  json j;
  j["valid"] = r.valid;
  json violations = json::array();
  for (const auto& v : r.violations) {
    json item;
    item["kind"] = v.kind;
    json names = json::array();
    for (int i : v.elements) names.push_back(t.elements[i]);
    item["elements"] = std::move(names);
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

json triple_validation_to_json(const TripleValidation& r) {
  json j;
  j["valid"] = r.valid;
  json violations = json::array();
  for (const auto& v : r.violations) {
    json item;
    item["kind"] = v.kind;
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

json partition_to_json(const Partition& p, const CayleyTable& t) {
  json classes = json::array();
  for (const auto& cls : p.classes) {
    json c = json::array();
    for (int i : cls) c.push_back(t.elements[i]);
    classes.push_back(std::move(c));
  }
  json j;
  j["classes"] = std::move(classes);
  return j;
}

json green_to_json(const GreenData& g, const CayleyTable& t) {
  json j;
  j["L"] = partition_to_json(g.l, t)["classes"];
  j["R"] = partition_to_json(g.r, t)["classes"];
  j["H"] = partition_to_json(g.h, t)["classes"];
  j["D"] = partition_to_json(g.d, t)["classes"];
  j["J"] = partition_to_json(g.j, t)["classes"];
  return j;
}

json characterize_to_json(const CharacterizeReport& r) {
  json j;
  j["is_clifford"] = r.is_clifford;
  j["is_semilattice"] = r.is_semilattice;
  j["is_h_trivial"] = r.is_h_trivial;
  j["is_commutative"] = r.is_commutative;
  j["is_group"] = r.is_group;
  j["conj_universal"] = r.conj_universal;
  j["conj_identity"] = r.conj_identity;
  j["conj_meet_order_identity"] = r.conj_meet_order_identity;
  return j;
}

json factorizable_to_json(const FactorizableReport& r) {
  json j;
  j["is_factorizable"] = r.is_factorizable;
  j["sim_u_equals_sim_i"] = r.sim_u_equals_sim_i;
  return j;
}

}  // namespace invconj
