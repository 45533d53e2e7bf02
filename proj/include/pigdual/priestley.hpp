#pragma once

// Priestley-style duality for finite lattices in two flavours: no bounds in
// the signature (maps to the 2-chain may be either constant), and the
// one-bound variant where maps must send the top to 1. Duals are finite
// pointed posets; topology is trivial at this scale and is not represented.
//
// The dual of B is not built by filtering all 2^|B| maps: the non-constant
// lattice homs to the 2-chain are exactly the characteristic maps of the
// principal filters at join-irreducible elements, which keeps the
// construction polynomial. The exhaustive filter survives in the test suite
// as an independent oracle.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finalg.hpp"

namespace pigdual {

enum class Variant { du, d1 };

struct Carrier {
  std::string source_id;
  std::vector<int> bits;  // value in {0,1} per element of the source
  bool operator==(const Carrier&) const = default;
  bool operator<(const Carrier& o) const { return bits < o.bits; }
};

inline bool carrier_valid(const Carrier& w, const FinAlgebra& B, Variant v = Variant::du) {
  if (static_cast<int>(w.bits.size()) != B.size) return false;
  for (int b : w.bits)
    if (b != 0 && b != 1) return false;
  for (int x = 0; x < B.size; ++x)
    for (int y = 0; y < B.size; ++y) {
      if (w.bits[static_cast<size_t>(B.meet(x, y))] != (w.bits[static_cast<size_t>(x)] & w.bits[static_cast<size_t>(y)]))
        return false;
      if (w.bits[static_cast<size_t>(B.join(x, y))] != (w.bits[static_cast<size_t>(x)] | w.bits[static_cast<size_t>(y)]))
        return false;
    }
  if (v == Variant::d1 && w.bits[static_cast<size_t>(B.top())] != 1) return false;
  return true;
}

enum class PosetVariant { unpointed, upper_pointed, doubly_pointed };

struct PointedPoset {
  int size = 0;
  std::vector<std::vector<char>> leq;  // leq[i][j]: i <= j
  std::optional<int> top, bottom;
  std::vector<std::string> labels;  // optional, empty or one per element
  PosetVariant variant = PosetVariant::unpointed;

  void validate() const {
    if (static_cast<int>(leq.size()) != size) throw InputError("poset: order matrix size mismatch");
    for (const auto& row : leq)
      if (static_cast<int>(row.size()) != size) throw InputError("poset: order matrix size mismatch");
    for (int i = 0; i < size; ++i) {
      if (!leq[i][i]) throw InputError("poset: order not reflexive");
      for (int j = 0; j < size; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) throw InputError("poset: order not antisymmetric");
        for (int k = 0; k < size; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) throw InputError("poset: order not transitive");
      }
    }
    if (top) {
      if (*top < 0 || *top >= size) throw InputError("poset: top out of range");
      for (int i = 0; i < size; ++i)
        if (!leq[i][*top]) throw InputError("poset: designated top is not the maximum");
    }
    if (bottom) {
      if (*bottom < 0 || *bottom >= size) throw InputError("poset: bottom out of range");
      for (int i = 0; i < size; ++i)
        if (!leq[*bottom][i]) throw InputError("poset: designated bottom is not the minimum");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != size)
      throw InputError("poset: label count mismatch");
  }

  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i == j || !leq[i][j]) continue;
        bool direct = true;
        for (int k = 0; k < size && direct; ++k)
          if (k != i && k != j && leq[i][k] && leq[k][j]) direct = false;
        if (direct) out.emplace_back(i, j);
      }
    return out;
  }
};

struct DualSpace {
  PointedPoset poset;
  std::vector<Carrier> points;  // parallel to poset elements
};

// Elements whose strict down-set has a maximum. The bottom of a finite
// lattice never qualifies (empty down-set).
inline std::vector<int> join_irreducibles(const FinAlgebra& B) {
  std::vector<int> out;
  for (int x = 0; x < B.size; ++x) {
    std::vector<int> below;
    for (int y = 0; y < B.size; ++y)
      if (y != x && B.leq(y, x)) below.push_back(y);
    if (below.empty()) continue;
    for (int m : below) {
      bool is_max = true;
      for (int y : below)
        if (!B.leq(y, m)) {
          is_max = false;
          break;
        }
      if (is_max) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

namespace detail {
inline std::string bits_label(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}
}  // namespace detail

// The dual poset of B: all lattice homs into the 2-chain (variant d1 keeps
// only those sending the top to 1), ordered pointwise, points in
// lexicographic bit order and labelled by their bit strings.
inline DualSpace hu_dual(const FinAlgebra& B, Variant v = Variant::du) {
  B.validate();  // the reduct must be a distributive lattice
  std::vector<Carrier> pts;
  if (v == Variant::du) pts.push_back(Carrier{B.id, std::vector<int>(static_cast<size_t>(B.size), 0)});
  pts.push_back(Carrier{B.id, std::vector<int>(static_cast<size_t>(B.size), 1)});
  for (int j : join_irreducibles(B)) {
    Carrier w{B.id, std::vector<int>(static_cast<size_t>(B.size), 0)};
    for (int x = 0; x < B.size; ++x) w.bits[static_cast<size_t>(x)] = B.leq(j, x) ? 1 : 0;
    pts.push_back(std::move(w));
  }
  std::sort(pts.begin(), pts.end());

  DualSpace D;
  D.points = pts;
  D.poset.size = static_cast<int>(pts.size());
  D.poset.leq.assign(pts.size(), std::vector<char>(pts.size(), 0));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      bool le = true;
      for (int x = 0; x < B.size && le; ++x)
        if (pts[i].bits[static_cast<size_t>(x)] > pts[j].bits[static_cast<size_t>(x)]) le = false;
      D.poset.leq[i][j] = le ? 1 : 0;
    }
  for (size_t i = 0; i < pts.size(); ++i) {
    D.poset.labels.push_back(detail::bits_label(pts[i].bits));
    bool all1 = true, all0 = true;
    for (int b : pts[i].bits) (b ? all0 : all1) = false;
    if (all1) D.poset.top = static_cast<int>(i);
    if (v == Variant::du && all0) D.poset.bottom = static_cast<int>(i);
  }
  D.poset.variant = (v == Variant::du) ? PosetVariant::doubly_pointed : PosetVariant::upper_pointed;
  D.poset.validate();
  return D;
}

struct KuResult {
  FinAlgebra algebra;                     // meet = intersection, join = union
  std::vector<std::vector<char>> upsets;  // element i as a membership row over Y
};

// The lattice of admissible up-sets of Y: up-sets containing the top and,
// in the unbounded variant, omitting the bottom. Elements are enumerated by
// descending linear extension (each inclusion only constrains already
// decided points) and sorted lexicographically.
inline KuResult ku_dual(const PointedPoset& Y, Variant v = Variant::du) {
  Y.validate();
  if (!Y.top) throw InputError("ku_dual: poset has no designated top");
  if (v == Variant::du && !Y.bottom) throw InputError("ku_dual: poset has no designated bottom");
  const int n = Y.size;

  // Descending linear extension: every element is placed after everything
  // strictly above it.
  std::vector<int> order;
  std::vector<char> placed(static_cast<size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    for (int i = 0; i < n; ++i) {
      if (placed[static_cast<size_t>(i)]) continue;
      bool ready = true;
      for (int j = 0; j < n && ready; ++j)
        if (j != i && Y.leq[i][j] && !placed[static_cast<size_t>(j)]) ready = false;
      if (ready) {
        order.push_back(i);
        placed[static_cast<size_t>(i)] = 1;
        break;
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw InputError("ku_dual: order is not acyclic");

  std::vector<std::vector<char>> upsets;
  std::vector<char> state(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      upsets.push_back(state);
      return;
    }
    const int x = order[static_cast<size_t>(pos)];
    const bool must_in = Y.top && x == *Y.top;
    const bool must_out = v == Variant::du && Y.bottom && x == *Y.bottom;
    if (!must_in) {
      state[static_cast<size_t>(x)] = 0;
      self(self, pos + 1);
    }
    if (!must_out) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j)
        if (j != x && Y.leq[x][j] && !state[static_cast<size_t>(j)]) ok = false;
      if (ok) {
        state[static_cast<size_t>(x)] = 1;
        self(self, pos + 1);
        state[static_cast<size_t>(x)] = 0;
      }
    }
  };
  rec(rec, 0);
  std::sort(upsets.begin(), upsets.end());
  if (upsets.empty()) throw InputError("ku_dual: no admissible up-sets");

  std::map<std::vector<char>, int> index;
  for (size_t i = 0; i < upsets.size(); ++i) index.emplace(upsets[i], static_cast<int>(i));
  const int N = static_cast<int>(upsets.size());
  FinAlgebra L;
  L.id = "upsets";
  L.size = N;
  L.sig = lattice_signature();
  L.tables.assign(2, std::vector<int>(static_cast<size_t>(N) * N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<char> mt(static_cast<size_t>(n)), jn(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) {
        mt[static_cast<size_t>(x)] = upsets[static_cast<size_t>(a)][static_cast<size_t>(x)] &
                                     upsets[static_cast<size_t>(b)][static_cast<size_t>(x)];
        jn[static_cast<size_t>(x)] = upsets[static_cast<size_t>(a)][static_cast<size_t>(x)] |
                                     upsets[static_cast<size_t>(b)][static_cast<size_t>(x)];
      }
      L.tables[0][static_cast<size_t>(a) * N + b] = index.at(mt);
      L.tables[1][static_cast<size_t>(a) * N + b] = index.at(jn);
    }
  L.finish();
  return KuResult{std::move(L), std::move(upsets)};
}

struct DoubleDualReport {
  bool iso = false;
  std::vector<int> witness;  // b in B -> element of the double dual
  std::string failure;       // empty when iso
};

// Evaluation of B into the admissible up-sets of its dual; reports the
// witness map and the first broken requirement if the evaluation is not a
// lattice isomorphism (matching tops in the one-bound variant).
inline DoubleDualReport double_dual_check(const FinAlgebra& B, Variant v = Variant::du) {
  DoubleDualReport rep;
  const DualSpace H = hu_dual(B, v);
  const KuResult K = ku_dual(H.poset, v);
  std::map<std::vector<char>, int> index;
  for (size_t i = 0; i < K.upsets.size(); ++i) index.emplace(K.upsets[i], static_cast<int>(i));
  rep.witness.assign(static_cast<size_t>(B.size), -1);
  for (int b = 0; b < B.size; ++b) {
    std::vector<char> phi(H.points.size());
    for (size_t i = 0; i < H.points.size(); ++i)
      phi[i] = static_cast<char>(H.points[i].bits[static_cast<size_t>(b)]);
    auto it = index.find(phi);
    if (it == index.end()) {
      rep.failure = "evaluation of element " + std::to_string(b) + " is not an admissible up-set";
      return rep;
    }
    rep.witness[static_cast<size_t>(b)] = it->second;
  }
  if (B.size != K.algebra.size) {
    rep.failure = "double dual has " + std::to_string(K.algebra.size) + " elements, source has " +
                  std::to_string(B.size);
    return rep;
  }
  std::vector<char> hit(static_cast<size_t>(K.algebra.size), 0);
  for (int w : rep.witness) {
    if (hit[static_cast<size_t>(w)]) {
      rep.failure = "evaluation is not injective";
      return rep;
    }
    hit[static_cast<size_t>(w)] = 1;
  }
  for (int x = 0; x < B.size; ++x)
    for (int y = 0; y < B.size; ++y) {
      if (rep.witness[static_cast<size_t>(B.meet(x, y))] !=
          K.algebra.meet(rep.witness[static_cast<size_t>(x)], rep.witness[static_cast<size_t>(y)])) {
        rep.failure = "meet not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
        return rep;
      }
      if (rep.witness[static_cast<size_t>(B.join(x, y))] !=
          K.algebra.join(rep.witness[static_cast<size_t>(x)], rep.witness[static_cast<size_t>(y)])) {
        rep.failure = "join not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
        return rep;
      }
    }
  if (v == Variant::d1 && rep.witness[static_cast<size_t>(B.top())] != K.algebra.top()) {
    rep.failure = "top not preserved";
    return rep;
  }
  rep.iso = true;
  return rep;
}

// Least-lexicographic order isomorphism matching distinguished points, or
// nothing. Backtracking with degree/height fingerprints.
inline std::optional<std::vector<int>> poset_order_iso(const PointedPoset& P, const PointedPoset& Q) {
  P.validate();
  Q.validate();
  if (P.size != Q.size) return std::nullopt;
  if (P.top.has_value() != Q.top.has_value() || P.bottom.has_value() != Q.bottom.has_value())
    return std::nullopt;
  const int n = P.size;

  auto fingerprint = [](const PointedPoset& X) {
    std::vector<std::array<int, 3>> fp(static_cast<size_t>(X.size), {0, 0, 0});
    for (int i = 0; i < X.size; ++i)
      for (int j = 0; j < X.size; ++j) {
        if (X.leq[j][i]) fp[static_cast<size_t>(i)][0]++;
        if (X.leq[i][j]) fp[static_cast<size_t>(i)][1]++;
      }
    // Height: longest chain strictly below, by repeated relaxation.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < X.size; ++i)
        for (int j = 0; j < X.size; ++j)
          if (i != j && X.leq[j][i] &&
              fp[static_cast<size_t>(i)][2] < fp[static_cast<size_t>(j)][2] + 1) {
            fp[static_cast<size_t>(i)][2] = fp[static_cast<size_t>(j)][2] + 1;
            changed = true;
          }
    }
    return fp;
  };
  const auto fp = fingerprint(P), fq = fingerprint(Q);

  std::vector<int> img(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int m = 0; m < n; ++m) {
      if (used[static_cast<size_t>(m)] || fp[static_cast<size_t>(i)] != fq[static_cast<size_t>(m)])
        continue;
      if ((P.top && *P.top == i) != (Q.top && *Q.top == m)) continue;
      if ((P.bottom && *P.bottom == i) != (Q.bottom && *Q.bottom == m)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int mj = img[static_cast<size_t>(j)];
        if (static_cast<bool>(P.leq[i][j]) != static_cast<bool>(Q.leq[m][mj]) ||
            static_cast<bool>(P.leq[j][i]) != static_cast<bool>(Q.leq[mj][m]))
          ok = false;
      }
      if (!ok) continue;
      img[static_cast<size_t>(i)] = m;
      used[static_cast<size_t>(m)] = 1;
      if (self(self, i + 1)) return true;
      img[static_cast<size_t>(i)] = -1;
      used[static_cast<size_t>(m)] = 0;
    }
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

// Hasse diagram in DOT, low-to-high edges, distinguished points double-framed.
inline std::string poset_to_dot(const PointedPoset& P, const std::string& name) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string dot = "digraph \"" + escape(name) + "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < P.size; ++i) {
    const std::string label = P.labels.empty() ? std::to_string(i) : P.labels[static_cast<size_t>(i)];
    dot += "  n" + std::to_string(i) + " [label=\"" + escape(label) + "\"";
    if ((P.top && *P.top == i) || (P.bottom && *P.bottom == i)) dot += ", peripheries=2";
    dot += "];\n";
  }
  for (const auto& [lo, hi] : P.covers())
    dot += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  dot += "}\n";
  return dot;
}

}  // namespace pigdual
