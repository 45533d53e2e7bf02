#pragma once

// JSON forms of the corpus objects. Algebras use per-operation nested
// row-major tables; setups name their sorts inline or by file path; posets
// are emitted as cover relations. nlohmann::json keeps object keys sorted,
// which makes every emitted document byte-deterministic.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "families.hpp"
#include "natdual.hpp"
#include "reconcile.hpp"

namespace pigdual {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return j;
}

namespace detail {

inline void flatten_table(const json& j, int arity, int size, std::vector<int>& out,
                          const std::string& where) {
  if (arity == 0) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    out.push_back(j.get<int>());
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    throw InputError(where + ": expected an array of length " + std::to_string(size));
  for (const auto& cell : j) flatten_table(cell, arity - 1, size, out, where);
}

inline json nest_table(const std::vector<int>& flat, int arity, int size, size_t& pos) {
  if (arity == 0) return flat[pos++];
  json arr = json::array();
  for (int i = 0; i < size; ++i) arr.push_back(nest_table(flat, arity - 1, size, pos));
  return arr;
}

}  // namespace detail

inline json algebra_to_json(const FinAlgebra& A) {
  json ops = json::array();
  for (const auto& op : A.sig.ops) ops.push_back({{"name", op.name}, {"arity", op.arity}});
  json tables = json::object();
  for (size_t i = 0; i < A.sig.ops.size(); ++i) {
    size_t pos = 0;
    tables[A.sig.ops[i].name] = detail::nest_table(A.tables[i], A.sig.ops[i].arity, A.size, pos);
  }
  return json{{"id", A.id},
              {"size", A.size},
              {"signature", {{"ops", ops}, {"meet", A.sig.meet_name}, {"join", A.sig.join_name}}},
              {"tables", tables}};
}

inline FinAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw InputError("algebra document: expected an object");
  for (const char* key : {"id", "size", "signature", "tables"})
    if (!j.contains(key)) throw InputError(std::string("algebra document: missing ") + key);
  FinAlgebra A;
  A.id = j.at("id").get<std::string>();
  A.size = j.at("size").get<int>();
  const json& sig = j.at("signature");
  if (!sig.contains("ops")) throw InputError("algebra document: signature needs ops");
  for (const auto& op : sig.at("ops"))
    A.sig.ops.push_back({op.at("name").get<std::string>(), op.at("arity").get<int>()});
  A.sig.meet_name = sig.value("meet", "meet");
  A.sig.join_name = sig.value("join", "join");
  for (const auto& op : A.sig.ops) {
    if (!j.at("tables").contains(op.name))
      throw InputError("algebra " + A.id + ": no table for " + op.name);
    std::vector<int> flat;
    detail::flatten_table(j.at("tables").at(op.name), op.arity, A.size, flat,
                          "algebra " + A.id + ", table " + op.name);
    A.tables.push_back(std::move(flat));
  }
  A.finish();
  A.validate();
  return A;
}

inline FinAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

inline json hom_to_json(const Hom& h) {
  return json{{"dom", h.dom_id}, {"cod", h.cod_id}, {"map", h.map}};
}

inline Hom hom_from_json(const json& j) {
  for (const char* key : {"dom", "cod", "map"})
    if (!j.contains(key)) throw InputError(std::string("hom document: missing ") + key);
  return Hom{j.at("dom").get<std::string>(), j.at("cod").get<std::string>(),
             j.at("map").get<std::vector<int>>()};
}

inline json poset_to_json(const PointedPoset& P) {
  json covers = json::array();
  for (auto [lo, hi] : P.covers()) covers.push_back({lo, hi});
  json j{{"size", P.size},
         {"covers", covers},
         {"top", P.top ? json(*P.top) : json(nullptr)},
         {"bottom", P.bottom ? json(*P.bottom) : json(nullptr)},
         {"labels", P.labels}};
  return j;
}

// A setup document: sorts inline or as file paths relative to the document,
// carriers keyed by sort id, G a hom list or the string "all".
inline FamilySetup setup_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("sorts") || !j.contains("carriers"))
    throw InputError("setup document: need sorts and carriers");
  FamilySetup f;
  for (const auto& entry : j.at("sorts")) {
    if (entry.is_string()) {
      std::filesystem::path p = entry.get<std::string>();
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      f.sorts.push_back(load_algebra(p.string()));
    } else {
      f.sorts.push_back(algebra_from_json(entry));
    }
  }
  const json& carriers = j.at("carriers");
  for (const auto& M : f.sorts) {
    if (!carriers.contains(M.id)) throw InputError("setup document: no carriers for sort " + M.id);
    std::vector<Carrier> ws;
    for (const auto& bits : carriers.at(M.id))
      ws.push_back(Carrier{M.id, bits.get<std::vector<int>>()});
    f.carriers.per_sort.push_back(std::move(ws));
  }
  if (!j.contains("G") || (j.at("G").is_string() && j.at("G").get<std::string>() == "all")) {
    f.G = all_inter_sort_homs(f.sorts);
  } else if (j.at("G").is_array()) {
    for (const auto& h : j.at("G")) f.G.push_back(hom_from_json(h));
  } else {
    throw InputError("setup document: G must be \"all\" or a hom list");
  }
  f.notes = j.value("notes", "");
  validate_sorts_and_carriers(f.sorts, f.carriers);
  return f;
}

inline FamilySetup load_setup(const std::string& path) {
  return setup_from_json(load_json_file(path),
                         std::filesystem::path(path).parent_path().string());
}

inline json setup_to_json(const FamilySetup& f) {
  json sorts = json::array();
  for (const auto& M : f.sorts) sorts.push_back(algebra_to_json(M));
  json carriers = json::object();
  for (size_t i = 0; i < f.sorts.size(); ++i) {
    json ws = json::array();
    for (const auto& w : f.carriers.per_sort[i]) ws.push_back(w.bits);
    carriers[f.sorts[i].id] = ws;
  }
  json homs = json::array();
  for (const auto& h : f.G) homs.push_back(hom_to_json(h));
  json j{{"sorts", sorts}, {"carriers", carriers}, {"G", homs}};
  if (!f.notes.empty()) j["notes"] = f.notes;
  return j;
}

inline json relation_to_json(const PigRelation& r) {
  json pairs = json::array();
  for (auto [a, b] : r.pairs) pairs.push_back({a, b});
  return json{{"dom_sort", r.dom_sort},
              {"cod_sort", r.cod_sort},
              {"dom_carrier", r.dom_carrier},
              {"cod_carrier", r.cod_carrier},
              {"pairs", pairs}};
}

inline json ego_to_json(const AlterEgo& ego) {
  json sorts = json::array();
  for (const auto& M : ego.sorts) sorts.push_back({{"id", M.id}, {"size", M.size}});
  json carriers = json::object();
  for (size_t i = 0; i < ego.sorts.size(); ++i) {
    json ws = json::array();
    for (const auto& w : ego.carriers.per_sort[i]) ws.push_back(w.bits);
    carriers[ego.sorts[i].id] = ws;
  }
  json homs = json::array();
  for (const auto& h : ego.G) homs.push_back(hom_to_json(h));
  json rels = json::array();
  for (const auto& r : ego.R) rels.push_back(relation_to_json(r));
  json singles = json::array();
  for (const auto& s : ego.S) singles.push_back({{"sort", s.sort_id}, {"element", s.element}});
  return json{{"sorts", sorts}, {"carriers", carriers}, {"G", homs}, {"R", rels}, {"S", singles}};
}

inline json morphism_to_json(const EgoMorphism& m, const AlterEgo& ego) {
  json per_sort = json::object();
  for (size_t s = 0; s < ego.sorts.size(); ++s) per_sort[ego.sorts[s].id] = m.values[s];
  return per_sort;
}

inline json duality_report_to_json(const DualityReport& rep, const AlterEgo& ego) {
  json sizes = json::object();
  for (size_t s = 0; s < ego.sorts.size(); ++s) sizes[ego.sorts[s].id] = rep.sort_sizes[s];
  json evals = json::array();
  for (const auto& m : rep.evaluation) evals.push_back(morphism_to_json(m, ego));
  json j{{"algebra", rep.algebra_id},
         {"dual_sort_sizes", sizes},
         {"ed_size", rep.ed_size},
         {"verdict", to_string(rep.verdict)},
         {"evaluation", evals}};
  if (rep.collision) j["collision"] = {rep.collision->first, rep.collision->second};
  if (!rep.unreached.empty()) j["unreached"] = rep.unreached;
  return j;
}

inline json reconcile_report_to_json(const ReconcileReport& rep) {
  json j{{"algebra", rep.algebra_id},
         {"verdict", to_string(rep.verdict)},
         {"y_size", rep.y_size},
         {"z_size", rep.z_size},
         {"hu_size", rep.hu_size},
         {"psi", rep.psi},
         {"z_labels", rep.Z.poset.labels}};
  json hpts = json::array();
  for (const auto& c : rep.H.points) hpts.push_back(detail::bits_label(c.bits));
  j["hu_points"] = hpts;
  if (!rep.missed.empty()) j["missed"] = rep.missed;
  if (rep.witness.first >= 0) j["witness"] = {rep.witness.first, rep.witness.second};
  return j;
}

inline json double_dual_report_to_json(const DoubleDualReport& rep, const FinAlgebra& B) {
  json j{{"algebra", B.id}, {"iso", rep.iso}};
  if (rep.iso) j["witness"] = rep.witness;
  else j["failure"] = rep.failure;
  return j;
}

inline json failure_to_json(const CertifiedFailure& e) {
  json j{{"failure", e.kind}, {"message", e.what()}};
  if (auto* s = dynamic_cast<const SepFailed*>(&e)) {
    j["sort"] = s->sort_id;
    j["a"] = s->a;
    j["b"] = s->b;
  } else if (auto* p = dynamic_cast<const PreorderViolation*>(&e)) {
    j["p"] = p->p;
    j["q"] = p->q;
    j["r"] = p->r;
  } else if (auto* w = dynamic_cast<const WrongPointing*>(&e)) {
    j["class"] = w->cls;
  } else if (auto* v = dynamic_cast<const WellDefinednessViolation*>(&e)) {
    j["p"] = v->p;
    j["q"] = v->q;
  }
  return j;
}

}  // namespace pigdual
