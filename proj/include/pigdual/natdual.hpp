#pragma once

// The hom functors of natural duality at finite scale: D(A) as a multisorted
// structure of homomorphisms, E as morphism enumeration into the alter ego,
// the evaluation map, the instance duality certificate, and the Delta map
// into the Priestley dual of the lattice reduct as an independent cross-check.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piggyback.hpp"

namespace pigdual {

struct MultisortedStructure {
  std::string algebra_id;
  std::vector<std::vector<Hom>> points;  // per sort, in hom_set order

  int total() const {
    int t = 0;
    for (const auto& p : points) t += static_cast<int>(p.size());
    return t;
  }

  // Index of the point of the given sort with this underlying map, or -1.
  int find(int sort, const std::vector<int>& map) const {
    const auto& ps = points[static_cast<size_t>(sort)];
    for (size_t i = 0; i < ps.size(); ++i)
      if (ps[i].map == map) return static_cast<int>(i);
    return -1;
  }
};

inline MultisortedStructure dual_D(const FinAlgebra& A, const AlterEgo& ego) {
  if (!(A.sig == ego.sorts[0].sig))
    throw InputError("dual_D: algebra " + A.id + " does not share the sorts' signature");
  MultisortedStructure X;
  X.algebra_id = A.id;
  for (const auto& M : ego.sorts) X.points.push_back(hom_set(A, M));
  return X;
}

// A sort-preserving map from the points of X into the sorts' universes.
struct EgoMorphism {
  std::vector<std::vector<int>> values;  // per sort, per point
  bool operator==(const EgoMorphism&) const = default;
  auto operator<=>(const EgoMorphism&) const = default;
};

// Lifting of g: M -> M' to x |-> g o x, as indices into the codomain sort.
inline std::vector<int> lift_hom(const Hom& g, const MultisortedStructure& X, const AlterEgo& ego) {
  const int ds = ego.sort_index(g.dom_id), cs = ego.sort_index(g.cod_id);
  std::vector<int> out;
  for (const auto& x : X.points[static_cast<size_t>(ds)]) {
    std::vector<int> comp(x.map.size());
    for (size_t a = 0; a < x.map.size(); ++a) comp[a] = g.map[static_cast<size_t>(x.map[a])];
    const int j = X.find(cs, comp);
    if (j < 0) throw std::logic_error("lift_hom: composite is missing from the codomain hom-set");
    out.push_back(j);
  }
  return out;
}

// Lifting of r to {(x, x') : (x(a), x'(a)) in r for every a}, as index pairs.
inline std::vector<std::pair<int, int>> lift_relation(const PigRelation& r,
                                                      const MultisortedStructure& X,
                                                      const AlterEgo& ego) {
  const int ds = ego.sort_index(r.dom_sort), cs = ego.sort_index(r.cod_sort);
  const auto& dom = X.points[static_cast<size_t>(ds)];
  const auto& cod = X.points[static_cast<size_t>(cs)];
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < dom.size(); ++i)
    for (size_t j = 0; j < cod.size(); ++j) {
      bool in = true;
      for (size_t a = 0; a < dom[i].map.size() && in; ++a)
        in = r.contains(dom[i].map[a], cod[j].map[a]);
      if (in) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

// Lifting of a one-element subalgebra {d}: the points constant at d.
inline std::vector<int> lift_singleton(const SingletonRel& s, const MultisortedStructure& X,
                                       const AlterEgo& ego) {
  const int si = ego.sort_index(s.sort_id);
  std::vector<int> out;
  const auto& ps = X.points[static_cast<size_t>(si)];
  for (size_t i = 0; i < ps.size(); ++i) {
    bool constant = true;
    for (int v : ps[i].map)
      if (v != s.element) {
        constant = false;
        break;
      }
    if (constant) out.push_back(static_cast<int>(i));
  }
  return out;
}

struct EdResult {
  FinAlgebra algebra;                  // morphisms with pointwise operations
  std::vector<EgoMorphism> morphisms;  // lexicographically sorted
};

// Enumerates E(X) = all morphisms X -> M~ by backtracking over the points,
// propagating singleton pins first, then arc consistency over the functional
// constraints from G and the binary constraints from R. Solutions come out
// in lexicographic order of the flattened value vector.
inline EdResult ed_algebra(const MultisortedStructure& X, const AlterEgo& ego,
                           long long max_cells = kDefaultMaxCells) {
  const size_t ns = ego.sorts.size();
  std::vector<int> offset(ns + 1, 0);
  for (size_t s = 0; s < ns; ++s)
    offset[s + 1] = offset[s] + static_cast<int>(X.points[s].size());
  const int nv = offset[ns];

  std::vector<std::vector<char>> dom(static_cast<size_t>(nv));
  for (size_t s = 0; s < ns; ++s)
    for (size_t i = 0; i < X.points[s].size(); ++i)
      dom[static_cast<size_t>(offset[s]) + i].assign(static_cast<size_t>(ego.sorts[s].size), 1);

  for (const auto& srel : ego.S) {
    const int si = ego.sort_index(srel.sort_id);
    for (int i : lift_singleton(srel, X, ego)) {
      auto& d = dom[static_cast<size_t>(offset[static_cast<size_t>(si)] + i)];
      std::fill(d.begin(), d.end(), 0);
      d[static_cast<size_t>(srel.element)] = 1;
    }
  }

  // Every constraint as a binary relation between two variables.
  struct Arc {
    int u, v;
    std::vector<std::pair<int, int>> pairs;  // sorted
  };
  std::vector<Arc> arcs;
  for (const auto& g : ego.G) {
    const int ds = ego.sort_index(g.dom_id), cs = ego.sort_index(g.cod_id);
    const auto lifted = lift_hom(g, X, ego);
    for (size_t i = 0; i < lifted.size(); ++i) {
      Arc a{offset[static_cast<size_t>(ds)] + static_cast<int>(i),
            offset[static_cast<size_t>(cs)] + lifted[i],
            {}};
      if (a.u == a.v) {
        // g o x = x, so the value at x must be a fixpoint of g
        auto& d = dom[static_cast<size_t>(a.u)];
        for (int m = 0; m < ego.sorts[static_cast<size_t>(ds)].size; ++m)
          if (g.map[static_cast<size_t>(m)] != m) d[static_cast<size_t>(m)] = 0;
        continue;
      }
      for (int m = 0; m < ego.sorts[static_cast<size_t>(ds)].size; ++m)
        a.pairs.emplace_back(m, g.map[static_cast<size_t>(m)]);
      arcs.push_back(std::move(a));
    }
  }
  for (const auto& r : ego.R) {
    const int ds = ego.sort_index(r.dom_sort), cs = ego.sort_index(r.cod_sort);
    for (auto [i, j] : lift_relation(r, X, ego)) {
      const int u = offset[static_cast<size_t>(ds)] + i;
      const int v = offset[static_cast<size_t>(cs)] + j;
      if (u == v) {
        auto& d = dom[static_cast<size_t>(u)];
        for (size_t m = 0; m < d.size(); ++m)
          if (d[m] && !r.contains(static_cast<int>(m), static_cast<int>(m))) d[m] = 0;
        continue;
      }
      arcs.push_back(Arc{u, v, r.pairs});
    }
  }

  // revise u against v under the arc's pair set
  auto revise = [](std::vector<char>& du, const std::vector<char>& dv,
                   const std::vector<std::pair<int, int>>& pairs, bool forward) {
    bool changed = false;
    for (size_t a = 0; a < du.size(); ++a) {
      if (!du[a]) continue;
      bool supported = false;
      for (const auto& [p, q] : pairs) {
        const int mine = forward ? p : q, theirs = forward ? q : p;
        if (mine == static_cast<int>(a) && dv[static_cast<size_t>(theirs)]) {
          supported = true;
          break;
        }
      }
      if (!supported) {
        du[a] = 0;
        changed = true;
      }
    }
    return changed;
  };

  auto propagate = [&](std::vector<std::vector<char>>& d) {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& a : arcs) {
        if (revise(d[static_cast<size_t>(a.u)], d[static_cast<size_t>(a.v)], a.pairs, true))
          again = true;
        if (revise(d[static_cast<size_t>(a.v)], d[static_cast<size_t>(a.u)], a.pairs, false))
          again = true;
      }
      for (const auto& d1 : d)
        if (std::find(d1.begin(), d1.end(), 1) == d1.end()) return false;
    }
    return true;
  };

  std::vector<EgoMorphism> found;
  long long nodes = 0;
  auto emit = [&](const std::vector<std::vector<char>>& d) {
    EgoMorphism m;
    m.values.resize(ns);
    for (size_t s = 0; s < ns; ++s) {
      m.values[s].resize(X.points[s].size());
      for (size_t i = 0; i < X.points[s].size(); ++i) {
        const auto& di = d[static_cast<size_t>(offset[s]) + i];
        m.values[s][i] =
            static_cast<int>(std::find(di.begin(), di.end(), 1) - di.begin());
      }
    }
    found.push_back(std::move(m));
  };
  auto solve = [&](auto&& self, std::vector<std::vector<char>> d) -> void {
    if (++nodes > max_cells)
      throw ResourceLimit("ed_algebra: search exceeded the node bound of " + std::to_string(max_cells));
    if (!propagate(d)) return;
    int var = -1;
    for (int v = 0; v < nv && var < 0; ++v)
      if (std::count(d[static_cast<size_t>(v)].begin(), d[static_cast<size_t>(v)].end(), 1) > 1)
        var = v;
    if (var < 0) {
      emit(d);
      return;
    }
    for (size_t val = 0; val < d[static_cast<size_t>(var)].size(); ++val) {
      if (!d[static_cast<size_t>(var)][val]) continue;
      auto d2 = d;
      std::fill(d2[static_cast<size_t>(var)].begin(), d2[static_cast<size_t>(var)].end(), 0);
      d2[static_cast<size_t>(var)][val] = 1;
      self(self, std::move(d2));
    }
  };
  if (nv == 0) {
    found.push_back(EgoMorphism{std::vector<std::vector<int>>(ns)});
  } else {
    solve(solve, dom);
  }

  if (found.empty()) throw std::logic_error("ed_algebra: no morphisms at all");

  EdResult out;
  out.morphisms = std::move(found);
  const int n = static_cast<int>(out.morphisms.size());
  FinAlgebra E;
  E.id = "ED(" + X.algebra_id + ")";
  E.size = n;
  E.sig = ego.sorts[0].sig;
  E.tables.resize(E.sig.ops.size());
  auto locate = [&](const EgoMorphism& m) {
    const auto it = std::lower_bound(out.morphisms.begin(), out.morphisms.end(), m);
    if (it == out.morphisms.end() || !(*it == m))
      throw std::logic_error("ed_algebra: pointwise operation leaves the morphism set");
    return static_cast<int>(it - out.morphisms.begin());
  };
  for (size_t op = 0; op < E.sig.ops.size(); ++op) {
    const int k = E.sig.ops[op].arity;
    const long long cells = FinAlgebra::table_cells(k, n);
    if (cells > max_cells)
      throw ResourceLimit("ed_algebra: operation tables exceed the cell bound of " +
                          std::to_string(max_cells));
    E.tables[op].resize(static_cast<size_t>(cells));
    size_t w = 0;
    for_each_tuple(k, n, [&](std::span<const int> args) {
      EgoMorphism res;
      res.values.resize(ns);
      for (size_t s = 0; s < ns; ++s) {
        res.values[s].resize(X.points[s].size());
        std::vector<int> elems(static_cast<size_t>(k));
        for (size_t i = 0; i < X.points[s].size(); ++i) {
          for (int t = 0; t < k; ++t)
            elems[static_cast<size_t>(t)] =
                out.morphisms[static_cast<size_t>(args[static_cast<size_t>(t)])].values[s][i];
          res.values[s][i] = ego.sorts[s].apply(static_cast<int>(op), elems);
        }
      }
      E.tables[op][w++] = locate(res);
    });
  }
  E.finish();
  E.validate();
  out.algebra = std::move(E);
  return out;
}

inline EdResult ed_algebra(const FinAlgebra& A, const AlterEgo& ego,
                           long long max_cells = kDefaultMaxCells) {
  return ed_algebra(dual_D(A, ego), ego, max_cells);
}

// e_A(a): the evaluation morphism x |-> x(a).
inline EgoMorphism evaluation_at(int a, const MultisortedStructure& X) {
  EgoMorphism m;
  m.values.resize(X.points.size());
  for (size_t s = 0; s < X.points.size(); ++s) {
    m.values[s].resize(X.points[s].size());
    for (size_t i = 0; i < X.points[s].size(); ++i)
      m.values[s][i] = X.points[s][i].map[static_cast<size_t>(a)];
  }
  return m;
}

enum class DualityVerdict { iso, not_injective, not_surjective };

inline const char* to_string(DualityVerdict v) {
  switch (v) {
    case DualityVerdict::iso: return "iso";
    case DualityVerdict::not_injective: return "not_injective";
    default: return "not_surjective";
  }
}

struct DualityReport {
  std::string algebra_id;
  std::vector<int> sort_sizes;  // |X_M| per sort
  int ed_size = 0;
  DualityVerdict verdict = DualityVerdict::iso;
  std::vector<EgoMorphism> evaluation;          // e_A(a) per element of A
  std::optional<std::pair<int, int>> collision;  // elements with equal evaluation
  std::vector<int> unreached;                    // morphism indices missed by e_A
};

// Is e_A a bijection onto E D(A)? Injectivity can only fail when A lies
// outside the quasivariety; surjectivity is the content of the duality.
inline DualityReport duality_check(const FinAlgebra& A, const AlterEgo& ego,
                                   long long max_cells = kDefaultMaxCells) {
  const MultisortedStructure X = dual_D(A, ego);
  EdResult ed = ed_algebra(X, ego, max_cells);
  DualityReport rep;
  rep.algebra_id = A.id;
  for (const auto& p : X.points) rep.sort_sizes.push_back(static_cast<int>(p.size()));
  rep.ed_size = static_cast<int>(ed.morphisms.size());
  std::vector<char> hit(ed.morphisms.size(), 0);
  for (int a = 0; a < A.size; ++a) {
    EgoMorphism m = evaluation_at(a, X);
    const auto it = std::lower_bound(ed.morphisms.begin(), ed.morphisms.end(), m);
    if (it == ed.morphisms.end() || !(*it == m))
      throw std::logic_error("duality_check: evaluation is not a morphism");
    hit[static_cast<size_t>(it - ed.morphisms.begin())] = 1;
    for (int b = 0; b < a; ++b)
      if (!rep.collision && rep.evaluation[static_cast<size_t>(b)] == m)
        rep.collision = std::make_pair(b, a);
    rep.evaluation.push_back(std::move(m));
  }
  for (size_t i = 0; i < hit.size(); ++i)
    if (!hit[i]) rep.unreached.push_back(static_cast<int>(i));
  if (rep.collision) rep.verdict = DualityVerdict::not_injective;
  else if (!rep.unreached.empty()) rep.verdict = DualityVerdict::not_surjective;
  else rep.verdict = DualityVerdict::iso;
  return rep;
}

// Delta(alpha) as a 0/1 labelling of the Priestley dual of the lattice
// reduct, defined at every point realised as a composite carrier; -1 marks
// points no composite reaches (possible only when joint surjectivity fails).
struct DeltaMap {
  std::vector<int> bits;  // parallel to the DualSpace points
};

inline DeltaMap delta(const EgoMorphism& alpha, const MultisortedStructure& X,
                      const AlterEgo& ego, const DualSpace& H) {
  std::map<std::vector<int>, int> hindex;
  for (size_t i = 0; i < H.points.size(); ++i) hindex[H.points[i].bits] = static_cast<int>(i);
  DeltaMap d;
  d.bits.assign(H.points.size(), -1);
  std::vector<int> src(H.points.size(), -1);  // Y index that defined each point
  int y = 0;
  for (size_t s = 0; s < ego.sorts.size(); ++s)
    for (size_t i = 0; i < X.points[s].size(); ++i)
      for (size_t w = 0; w < ego.carriers.per_sort[s].size(); ++w, ++y) {
        const Carrier comp = compose_carrier(ego.carriers.per_sort[s][w], X.points[s][i]);
        const auto it = hindex.find(comp.bits);
        if (it == hindex.end())
          throw std::logic_error("delta: composite carrier is not a lattice hom point");
        const int v =
            ego.carriers.per_sort[s][w].bits[static_cast<size_t>(alpha.values[s][i])];
        if (d.bits[static_cast<size_t>(it->second)] == -1) {
          d.bits[static_cast<size_t>(it->second)] = v;
          src[static_cast<size_t>(it->second)] = y;
        } else if (d.bits[static_cast<size_t>(it->second)] != v) {
          throw WellDefinednessViolation(src[static_cast<size_t>(it->second)], y,
                                         "delta: composites agree but values differ");
        }
      }
  for (size_t i = 0; i < H.points.size(); ++i)
    for (size_t j = 0; j < H.points.size(); ++j)
      if (H.poset.leq[i][j] && d.bits[i] == 1 && d.bits[j] == 0)
        throw WellDefinednessViolation(src[i], src[j],
                                       "delta: order not preserved between composites");
  if (H.poset.top && d.bits[static_cast<size_t>(*H.poset.top)] == 0)
    throw WellDefinednessViolation(src[static_cast<size_t>(*H.poset.top)], -1,
                                   "delta: the constant 1 map is not sent to 1");
  if (H.poset.bottom && d.bits[static_cast<size_t>(*H.poset.bottom)] == 1)
    throw WellDefinednessViolation(src[static_cast<size_t>(*H.poset.bottom)], -1,
                                   "delta: the constant 0 map is not sent to 0");
  return d;
}

inline DeltaMap delta(const EgoMorphism& alpha, const FinAlgebra& A, const AlterEgo& ego) {
  return delta(alpha, dual_D(A, ego), ego, hu_dual(u_reduct(A)));
}

// Total, order-preserving, and fixing the two constants: the properties a
// certified instance guarantees.
inline bool delta_total(const DeltaMap& d) {
  for (int b : d.bits)
    if (b < 0) return false;
  return true;
}

}  // namespace pigdual
