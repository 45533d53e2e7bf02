#pragma once

// Multisorted piggyback data: carrier assignments over a family of sorts,
// the binary piggyback relations (maximal subalgebras of inverse images of
// the 2-chain order), the separation and pointedness hypotheses, and the
// assembled alter ego. Sorts are kept disjoint by id, never by element
// renaming; every cross-sort object carries the ids of its endpoints.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "priestley.hpp"

namespace pigdual {

struct CarrierAssignment {
  // Positionally parallel to the sorts vector it accompanies.
  std::vector<std::vector<Carrier>> per_sort;
};

struct PigRelation {
  std::string dom_sort, cod_sort;
  int dom_carrier = 0, cod_carrier = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted ascending

  bool contains(int a, int b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  }
};

struct SingletonRel {
  std::string sort_id;
  int element = 0;
  bool operator==(const SingletonRel&) const = default;
};

struct AlterEgo {
  std::vector<FinAlgebra> sorts;
  CarrierAssignment carriers;
  std::vector<Hom> G;
  std::vector<PigRelation> R;
  std::vector<SingletonRel> S;

  int sort_index(const std::string& id) const {
    for (size_t i = 0; i < sorts.size(); ++i)
      if (sorts[i].id == id) return static_cast<int>(i);
    throw InputError("alter ego: unknown sort id " + id);
  }
};

struct SepWitness {
  std::string sort_id;
  int a = 0, b = 0;
};

struct PointingWitness {
  std::string sort_id;
  int element = 0;
  int carrier = 0;  // index into the sort's carrier list
};

struct Pointing {
  std::optional<PointingWitness> s1, s0;
};

// The composite carrier w o x over the domain of x.
inline Carrier compose_carrier(const Carrier& w, const Hom& x) {
  Carrier out{x.dom_id, std::vector<int>(x.map.size())};
  for (size_t a = 0; a < x.map.size(); ++a) out.bits[a] = w.bits[static_cast<size_t>(x.map[a])];
  return out;
}

inline void validate_sorts_and_carriers(const std::vector<FinAlgebra>& sorts,
                                        const CarrierAssignment& omega) {
  if (sorts.empty()) throw InputError("setup: no sorts");
  if (omega.per_sort.size() != sorts.size())
    throw InputError("setup: carrier assignment does not match the sort list");
  for (size_t i = 0; i < sorts.size(); ++i) {
    for (size_t j = i + 1; j < sorts.size(); ++j)
      if (sorts[i].id == sorts[j].id) throw InputError("setup: duplicate sort id " + sorts[i].id);
    if (!(sorts[i].sig == sorts[0].sig)) throw InputError("setup: signature mismatch across sorts");
    if (omega.per_sort[i].empty())
      throw InputError("setup: sort " + sorts[i].id + " has no carriers");
    for (const auto& w : omega.per_sort[i]) {
      if (w.source_id != sorts[i].id)
        throw InputError("setup: carrier source id " + w.source_id + " does not match sort " + sorts[i].id);
      if (!carrier_valid(w, sorts[i]))
        throw InputError("setup: invalid carrier on sort " + sorts[i].id);
    }
  }
}

// All maximal subalgebras of M x M2 inside {(a,b) : w(a) <= w2(b)}, as
// sorted pair lists, relations ordered lexicographically. The list may be
// empty; emptiness is a finding, not an error.
inline std::vector<PigRelation> piggyback_relations(const FinAlgebra& M, const FinAlgebra& M2,
                                                    const Carrier& w, const Carrier& w2) {
  if (static_cast<int>(w.bits.size()) != M.size || static_cast<int>(w2.bits.size()) != M2.size)
    throw InputError("piggyback_relations: carrier length mismatch");
  const ProductAlgebra P = product({M, M2});
  std::vector<int> allowed;
  for (int a = 0; a < M.size; ++a)
    for (int b = 0; b < M2.size; ++b)
      if (w.bits[static_cast<size_t>(a)] <= w2.bits[static_cast<size_t>(b)])
        allowed.push_back(a * M2.size + b);
  std::vector<PigRelation> out;
  for (const auto& sub : maximal_subuniverses_within(P.algebra, allowed)) {
    PigRelation r{M.id, M2.id, 0, 0, {}};
    for (int m : sub.members) r.pairs.emplace_back(m / M2.size, m % M2.size);
    out.push_back(std::move(r));
  }
  return out;  // member sets were lexicographic, so pair lists are too
}

inline std::vector<Hom> all_inter_sort_homs(const std::vector<FinAlgebra>& sorts) {
  std::vector<Hom> out;
  for (const auto& dom : sorts)
    for (const auto& cod : sorts)
      for (auto& h : hom_set(dom, cod)) out.push_back(std::move(h));
  return out;
}

// Separation: every pair a != b inside one sort is told apart either by a
// carrier of that sort or by a carrier composed with a hom in G leaving it.
// With G = all inter-sort homs this decides the unrefined condition.
inline std::optional<SepWitness> check_sep(const std::vector<FinAlgebra>& sorts,
                                           const std::vector<Hom>& G,
                                           const CarrierAssignment& omega) {
  validate_sorts_and_carriers(sorts, omega);
  for (size_t si = 0; si < sorts.size(); ++si) {
    const FinAlgebra& M = sorts[si];
    for (int a = 0; a < M.size; ++a)
      for (int b = a + 1; b < M.size; ++b) {
        bool separated = false;
        for (const auto& w : omega.per_sort[si])
          if (w.bits[static_cast<size_t>(a)] != w.bits[static_cast<size_t>(b)]) {
            separated = true;
            break;
          }
        for (size_t u = 0; u < G.size() && !separated; ++u) {
          if (G[u].dom_id != M.id) continue;
          size_t sj = static_cast<size_t>(-1);
          for (size_t j = 0; j < sorts.size(); ++j)
            if (sorts[j].id == G[u].cod_id) sj = j;
          if (sj == static_cast<size_t>(-1)) throw InputError("check_sep: hom codomain is not a sort");
          const int ua = G[u].map[static_cast<size_t>(a)];
          const int ub = G[u].map[static_cast<size_t>(b)];
          for (const auto& w2 : omega.per_sort[sj])
            if (w2.bits[static_cast<size_t>(ua)] != w2.bits[static_cast<size_t>(ub)]) {
              separated = true;
              break;
            }
        }
        if (!separated) return SepWitness{M.id, a, b};
      }
  }
  return std::nullopt;
}

// First (sort, element, carrier) witnesses for the two pointedness
// hypotheses: a one-element subalgebra sent to 1, and one sent to 0.
inline Pointing check_pointed(const std::vector<FinAlgebra>& sorts, const CarrierAssignment& omega) {
  validate_sorts_and_carriers(sorts, omega);
  Pointing p;
  for (size_t si = 0; si < sorts.size(); ++si)
    for (int d : one_element_subuniverses(sorts[si]))
      for (size_t wi = 0; wi < omega.per_sort[si].size(); ++wi) {
        const int v = omega.per_sort[si][wi].bits[static_cast<size_t>(d)];
        if (v == 1 && !p.s1) p.s1 = PointingWitness{sorts[si].id, d, static_cast<int>(wi)};
        if (v == 0 && !p.s0) p.s0 = PointingWitness{sorts[si].id, d, static_cast<int>(wi)};
      }
  return p;
}

// Assembles the alter ego without certifying the hypotheses: all piggyback
// relations across ordered carrier pairs, plus whatever one-element
// subalgebra witnesses exist. Used for deliberately stripped egos.
inline AlterEgo assemble_alter_ego(std::vector<FinAlgebra> sorts, std::vector<Hom> G,
                                   CarrierAssignment omega) {
  validate_sorts_and_carriers(sorts, omega);
  AlterEgo ego;
  ego.sorts = std::move(sorts);
  ego.carriers = std::move(omega);
  ego.G = std::move(G);
  for (size_t si = 0; si < ego.sorts.size(); ++si)
    for (size_t wi = 0; wi < ego.carriers.per_sort[si].size(); ++wi)
      for (size_t sj = 0; sj < ego.sorts.size(); ++sj)
        for (size_t wj = 0; wj < ego.carriers.per_sort[sj].size(); ++wj) {
          auto rels = piggyback_relations(ego.sorts[si], ego.sorts[sj],
                                          ego.carriers.per_sort[si][wi],
                                          ego.carriers.per_sort[sj][wj]);
          for (auto& r : rels) {
            r.dom_carrier = static_cast<int>(wi);
            r.cod_carrier = static_cast<int>(wj);
            ego.R.push_back(std::move(r));
          }
        }
  const Pointing p = check_pointed(ego.sorts, ego.carriers);
  if (p.s1) ego.S.push_back(SingletonRel{p.s1->sort_id, p.s1->element});
  if (p.s0) {
    SingletonRel s{p.s0->sort_id, p.s0->element};
    if (ego.S.empty() || !(ego.S.front() == s)) ego.S.push_back(s);
  }
  return ego;
}

// Certified construction: separation and both pointedness hypotheses must
// hold. Pass no homs to default G to all inter-sort homs.
inline AlterEgo build_alter_ego(const std::vector<FinAlgebra>& sorts,
                                std::optional<std::vector<Hom>> G,
                                const CarrierAssignment& omega) {
  validate_sorts_and_carriers(sorts, omega);
  std::vector<Hom> homs = G ? std::move(*G) : all_inter_sort_homs(sorts);
  if (auto w = check_sep(sorts, homs, omega)) throw SepFailed(w->sort_id, w->a, w->b);
  const Pointing p = check_pointed(sorts, omega);
  if (!p.s1) throw MissingS1();
  if (!p.s0) throw MissingS0();
  return assemble_alter_ego(sorts, std::move(homs), omega);
}

// Appends one-element sorts carrying the constant-1 and constant-0 maps,
// restoring the pointedness hypotheses. A trivial sort already carrying the
// wanted constant is not duplicated, so a second application is a no-op.
inline std::pair<std::vector<FinAlgebra>, CarrierAssignment> add_trivial_sorts(
    std::vector<FinAlgebra> sorts, CarrierAssignment omega) {
  validate_sorts_and_carriers(sorts, omega);
  auto has_trivial_with = [&](int bit) {
    for (size_t i = 0; i < sorts.size(); ++i) {
      if (sorts[i].size != 1) continue;
      for (const auto& w : omega.per_sort[i])
        if (w.bits[0] == bit) return true;
    }
    return false;
  };
  auto fresh_id = [&](std::string base) {
    auto taken = [&](const std::string& id) {
      for (const auto& s : sorts)
        if (s.id == id) return true;
      return false;
    };
    while (taken(base)) base += "_";
    return base;
  };
  const Signature sig = sorts[0].sig;
  if (!has_trivial_with(1)) {
    FinAlgebra t = trivial_algebra(sig, fresh_id("triv1"));
    omega.per_sort.push_back({Carrier{t.id, {1}}});
    sorts.push_back(std::move(t));
  }
  if (!has_trivial_with(0)) {
    FinAlgebra t = trivial_algebra(sig, fresh_id("triv0"));
    omega.per_sort.push_back({Carrier{t.id, {0}}});
    sorts.push_back(std::move(t));
  }
  return {std::move(sorts), std::move(omega)};
}

}  // namespace pigdual
