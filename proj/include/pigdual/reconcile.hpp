#pragma once

// The reconciliation construction: the pre-ordered space Y of (hom, carrier)
// pairs, its quotient Z by mutual comparability, and the map Psi sending a
// class to the composite carrier, checked to be an order-isomorphism onto
// the Priestley dual of the lattice reduct.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "natdual.hpp"

namespace pigdual {

struct YPoint {
  int sort = 0, x = 0, carrier = 0;
  bool operator==(const YPoint&) const = default;
};

struct YSpace {
  std::vector<YPoint> points;           // (sort, x, carrier), carrier innermost
  std::vector<std::vector<char>> raw;   // generated relation before closure
  std::vector<std::vector<char>> prec;  // transitive closure of raw
  bool raw_transitive = true;
  std::array<int, 3> transitivity_witness{-1, -1, -1};

  int index_of(int sort, int x, int carrier) const {
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i] == YPoint{sort, x, carrier}) return static_cast<int>(i);
    throw InputError("YSpace: no such point");
  }
};

inline Carrier y_composite(const YSpace& Y, const MultisortedStructure& X, const AlterEgo& ego,
                           int p) {
  const YPoint& y = Y.points[static_cast<size_t>(p)];
  return compose_carrier(ego.carriers.per_sort[static_cast<size_t>(y.sort)][static_cast<size_t>(y.carrier)],
                         X.points[static_cast<size_t>(y.sort)][static_cast<size_t>(y.x)]);
}

// (x,w) precedes (x',w') when some piggyback relation between the two
// carriers contains the pair pointwise. Reflexivity of the generated
// relation is demanded (its failure certifies a broken R set); a transitive
// gap is repaired by closure and flagged, so a hand-pruned R whose closure
// agrees still yields the right pre-order.
inline YSpace build_Y(const MultisortedStructure& X, const AlterEgo& ego) {
  YSpace Y;
  std::vector<int> offset;  // per (sort, x): base index of its carrier block
  for (size_t s = 0; s < ego.sorts.size(); ++s)
    for (size_t i = 0; i < X.points[s].size(); ++i)
      for (size_t w = 0; w < ego.carriers.per_sort[s].size(); ++w)
        Y.points.push_back(YPoint{static_cast<int>(s), static_cast<int>(i), static_cast<int>(w)});
  const size_t n = Y.points.size();
  Y.raw.assign(n, std::vector<char>(n, 0));

  auto base = [&](int sort, int x) {
    int y = 0;
    for (int s = 0; s < sort; ++s)
      y += static_cast<int>(X.points[static_cast<size_t>(s)].size() *
                            ego.carriers.per_sort[static_cast<size_t>(s)].size());
    return y + x * static_cast<int>(ego.carriers.per_sort[static_cast<size_t>(sort)].size());
  };
  for (const auto& r : ego.R) {
    const int ds = ego.sort_index(r.dom_sort), cs = ego.sort_index(r.cod_sort);
    for (auto [i, j] : lift_relation(r, X, ego)) {
      const int p = base(ds, i) + r.dom_carrier;
      const int q = base(cs, j) + r.cod_carrier;
      Y.raw[static_cast<size_t>(p)][static_cast<size_t>(q)] = 1;
    }
  }
  for (size_t p = 0; p < n; ++p)
    if (!Y.raw[p][p])
      throw PreorderViolation(static_cast<int>(p), static_cast<int>(p), -1,
                              "pre-order is not reflexive at point " + std::to_string(p));
  for (size_t p = 0; p < n && Y.raw_transitive; ++p)
    for (size_t q = 0; q < n && Y.raw_transitive; ++q) {
      if (!Y.raw[p][q]) continue;
      for (size_t t = 0; t < n; ++t)
        if (Y.raw[q][t] && !Y.raw[p][t]) {
          Y.raw_transitive = false;
          Y.transitivity_witness = {static_cast<int>(p), static_cast<int>(q), static_cast<int>(t)};
          break;
        }
    }
  Y.prec = Y.raw;
  for (size_t k = 0; k < n; ++k)
    for (size_t p = 0; p < n; ++p) {
      if (!Y.prec[p][k]) continue;
      for (size_t q = 0; q < n; ++q)
        if (Y.prec[k][q]) Y.prec[p][q] = 1;
    }
  return Y;
}

inline YSpace build_Y(const FinAlgebra& A, const AlterEgo& ego) {
  return build_Y(dual_D(A, ego), ego);
}

struct QuotientPoset {
  PointedPoset poset;
  std::vector<int> class_of;              // per Y point
  std::vector<std::vector<int>> classes;  // ascending point indices, ordered by least member
};

// Z = Y / (mutual comparability), ordered by the induced relation, pointed
// by the classes of the constant homomorphisms the pointedness witnesses
// name. Each named class must be the corresponding unique extreme.
inline QuotientPoset quotient_Z(const YSpace& Y, const MultisortedStructure& X,
                                const AlterEgo& ego, const Pointing& pointing) {
  const size_t n = Y.points.size();
  QuotientPoset Z;
  Z.class_of.assign(n, -1);
  for (size_t p = 0; p < n; ++p) {
    if (Z.class_of[p] >= 0) continue;
    const int c = static_cast<int>(Z.classes.size());
    Z.classes.emplace_back();
    for (size_t q = p; q < n; ++q)
      if (Z.class_of[q] < 0 && Y.prec[p][q] && Y.prec[q][p]) {
        Z.class_of[q] = c;
        Z.classes.back().push_back(static_cast<int>(q));
      }
  }
  const int m = static_cast<int>(Z.classes.size());
  Z.poset.size = m;
  Z.poset.leq.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d)
      Z.poset.leq[static_cast<size_t>(c)][static_cast<size_t>(d)] =
          Y.prec[static_cast<size_t>(Z.classes[static_cast<size_t>(c)][0])]
               [static_cast<size_t>(Z.classes[static_cast<size_t>(d)][0])];
  for (int c = 0; c < m; ++c) {
    std::string lab;
    for (int p : Z.classes[static_cast<size_t>(c)]) {
      const YPoint& y = Y.points[static_cast<size_t>(p)];
      if (!lab.empty()) lab += " ";
      lab += "(" + ego.sorts[static_cast<size_t>(y.sort)].id + ",x" + std::to_string(y.x) +
             ",w" + std::to_string(y.carrier) + ")";
    }
    Z.poset.labels.push_back(std::move(lab));
  }

  auto class_of_constant = [&](const PointingWitness& w) {
    const int si = ego.sort_index(w.sort_id);
    int xi = -1;
    const auto& ps = X.points[static_cast<size_t>(si)];
    for (size_t i = 0; i < ps.size() && xi < 0; ++i) {
      bool constant = true;
      for (int v : ps[i].map) constant = constant && v == w.element;
      if (constant) xi = static_cast<int>(i);
    }
    if (xi < 0) throw std::logic_error("quotient_Z: pointing witness has no constant hom");
    int y = 0;
    for (int s = 0; s < si; ++s)
      y += static_cast<int>(X.points[static_cast<size_t>(s)].size() *
                            ego.carriers.per_sort[static_cast<size_t>(s)].size());
    y += xi * static_cast<int>(ego.carriers.per_sort[static_cast<size_t>(si)].size()) + w.carrier;
    return Z.class_of[static_cast<size_t>(y)];
  };
  if (pointing.s1) {
    const int z1 = class_of_constant(*pointing.s1);
    for (int c = 0; c < m; ++c)
      if (!Z.poset.leq[static_cast<size_t>(c)][static_cast<size_t>(z1)])
        throw WrongPointing(z1, "the class of the 1-pointing is not the maximum");
    Z.poset.top = z1;
  }
  if (pointing.s0) {
    const int z0 = class_of_constant(*pointing.s0);
    for (int c = 0; c < m; ++c)
      if (!Z.poset.leq[static_cast<size_t>(z0)][static_cast<size_t>(c)])
        throw WrongPointing(z0, "the class of the 0-pointing is not the minimum");
    Z.poset.bottom = z0;
  }
  Z.poset.variant = pointing.s1 && pointing.s0 ? PosetVariant::doubly_pointed
                    : pointing.s1              ? PosetVariant::upper_pointed
                                               : PosetVariant::unpointed;
  Z.poset.validate();
  return Z;
}

enum class ReconcileVerdict {
  iso,
  not_well_defined,
  not_surjective,
  not_order_preserving,
  not_order_reflecting
};

inline const char* to_string(ReconcileVerdict v) {
  switch (v) {
    case ReconcileVerdict::iso: return "iso";
    case ReconcileVerdict::not_well_defined: return "not_well_defined";
    case ReconcileVerdict::not_surjective: return "not_surjective";
    case ReconcileVerdict::not_order_preserving: return "not_order_preserving";
    default: return "not_order_reflecting";
  }
}

struct ReconcileReport {
  std::string algebra_id;
  ReconcileVerdict verdict = ReconcileVerdict::iso;
  int y_size = 0, z_size = 0, hu_size = 0;
  std::vector<int> psi;               // class index -> point of H
  std::vector<int> missed;            // H points outside the image of psi
  std::pair<int, int> witness{-1, -1};  // points or classes, depending on verdict
  QuotientPoset Z;
  DualSpace H;
};

// Does [(x,w)] |-> w o x define an order-isomorphism Z -> H_u U(A) sending
// the pointing classes to the constants? Failures are reported, not thrown:
// a missed constant is the certified symptom of a stripped pointedness
// hypothesis.
inline ReconcileReport reconcile_check(const FinAlgebra& A, const AlterEgo& ego) {
  const MultisortedStructure X = dual_D(A, ego);
  const YSpace Y = build_Y(X, ego);
  const Pointing pointing = check_pointed(ego.sorts, ego.carriers);
  ReconcileReport rep;
  rep.algebra_id = A.id;
  rep.Z = quotient_Z(Y, X, ego, pointing);
  rep.H = hu_dual(u_reduct(A));
  rep.y_size = static_cast<int>(Y.points.size());
  rep.z_size = rep.Z.poset.size;
  rep.hu_size = rep.H.poset.size;

  std::map<std::vector<int>, int> hindex;
  for (size_t i = 0; i < rep.H.points.size(); ++i)
    hindex[rep.H.points[i].bits] = static_cast<int>(i);
  for (const auto& cls : rep.Z.classes) {
    const Carrier rep_comp = y_composite(Y, X, ego, cls[0]);
    for (size_t k = 1; k < cls.size(); ++k)
      if (!(y_composite(Y, X, ego, cls[k]).bits == rep_comp.bits)) {
        rep.verdict = ReconcileVerdict::not_well_defined;
        rep.witness = {cls[0], cls[k]};
        return rep;
      }
    const auto it = hindex.find(rep_comp.bits);
    if (it == hindex.end())
      throw std::logic_error("reconcile_check: composite carrier is not a lattice hom point");
    rep.psi.push_back(it->second);
  }

  std::vector<char> hit(rep.H.points.size(), 0);
  for (int h : rep.psi) hit[static_cast<size_t>(h)] = 1;
  for (size_t i = 0; i < hit.size(); ++i)
    if (!hit[i]) rep.missed.push_back(static_cast<int>(i));
  if (!rep.missed.empty()) {
    rep.verdict = ReconcileVerdict::not_surjective;
    return rep;
  }
  for (int c = 0; c < rep.z_size; ++c)
    for (int d = 0; d < rep.z_size; ++d) {
      const bool zle = rep.Z.poset.leq[static_cast<size_t>(c)][static_cast<size_t>(d)];
      const bool hle = rep.H.poset.leq[static_cast<size_t>(rep.psi[static_cast<size_t>(c)])]
                                      [static_cast<size_t>(rep.psi[static_cast<size_t>(d)])];
      if (zle && !hle) {
        rep.verdict = ReconcileVerdict::not_order_preserving;
        rep.witness = {c, d};
        return rep;
      }
      if (hle && !zle) {
        rep.verdict = ReconcileVerdict::not_order_reflecting;
        rep.witness = {c, d};
        return rep;
      }
    }
  if (rep.Z.poset.top && rep.psi[static_cast<size_t>(*rep.Z.poset.top)] != *rep.H.poset.top)
    throw std::logic_error("reconcile_check: iso does not match the 1-pointing");
  if (rep.Z.poset.bottom && rep.psi[static_cast<size_t>(*rep.Z.poset.bottom)] != *rep.H.poset.bottom)
    throw std::logic_error("reconcile_check: iso does not match the 0-pointing");
  return rep;
}

}  // namespace pigdual
