#pragma once

// Finite algebras with a distributive-lattice reduct: tables, homomorphisms,
// subuniverses, products, and free algebras at desk scale. Elements of an
// n-element algebra are the dense indices 0..n-1; operation tables are
// flattened row-major. The lattice order is derived from the meet table
// (x <= y iff x meet y = x) and is never stored separately.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace pigdual {

struct OpSymbol {
  std::string name;
  int arity = 0;
  bool operator==(const OpSymbol&) const = default;
};

struct Signature {
  std::vector<OpSymbol> ops;
  std::string meet_name = "meet";
  std::string join_name = "join";

  bool operator==(const Signature&) const = default;

  int index_of(std::string_view name) const {
    for (int i = 0; i < static_cast<int>(ops.size()); ++i)
      if (ops[i].name == name) return i;
    return -1;
  }

  void validate() const {
    std::set<std::string> seen;
    for (const auto& op : ops) {
      if (op.name.empty()) throw InputError("signature: empty operation name");
      if (op.arity < 0) throw InputError("signature: negative arity on " + op.name);
      if (!seen.insert(op.name).second) throw InputError("signature: duplicate operation " + op.name);
    }
    const int m = index_of(meet_name);
    const int j = index_of(join_name);
    if (m < 0 || ops[m].arity != 2) throw InputError("signature: meet operation '" + meet_name + "' missing or not binary");
    if (j < 0 || ops[j].arity != 2) throw InputError("signature: join operation '" + join_name + "' missing or not binary");
  }
};

// Visits all argument tuples over {0..n-1}^arity in lexicographic order.
template <class F>
inline void for_each_tuple(int arity, int n, F&& visit) {
  std::vector<int> t(std::max(arity, 1), 0);
  if (arity == 0) {
    visit(std::span<const int>(t.data(), 0));
    return;
  }
  for (;;) {
    visit(std::span<const int>(t.data(), static_cast<size_t>(arity)));
    int i = arity - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

struct FinAlgebra {
  std::string id;
  int size = 0;
  Signature sig;
  std::vector<std::vector<int>> tables;  // parallel to sig.ops
  int meet_op = -1, join_op = -1;        // resolved by finish()

  static size_t table_cells(int arity, int n) {
    size_t c = 1;
    for (int i = 0; i < arity; ++i) c *= static_cast<size_t>(n);
    return c;
  }

  size_t flat_index(int op, std::span<const int> args) const {
    size_t idx = 0;
    for (int a : args) idx = idx * static_cast<size_t>(size) + static_cast<size_t>(a);
    (void)op;
    return idx;
  }

  int apply(int op, std::span<const int> args) const { return tables[op][flat_index(op, args)]; }
  int apply1(int op, int a) const { return tables[op][static_cast<size_t>(a)]; }
  int apply2(int op, int a, int b) const {
    return tables[op][static_cast<size_t>(a) * size + static_cast<size_t>(b)];
  }

  int meet(int a, int b) const { return apply2(meet_op, a, b); }
  int join(int a, int b) const { return apply2(join_op, a, b); }
  bool leq(int a, int b) const { return meet(a, b) == a; }

  // Resolves meet/join and checks table shapes and entry ranges.
  void finish() {
    sig.validate();
    if (size <= 0) throw InputError("algebra " + id + ": size must be positive");
    if (tables.size() != sig.ops.size()) throw InputError("algebra " + id + ": one table per operation required");
    for (size_t i = 0; i < tables.size(); ++i) {
      const size_t want = table_cells(sig.ops[i].arity, size);
      if (tables[i].size() != want)
        throw InputError("algebra " + id + ": table for " + sig.ops[i].name + " has wrong shape");
      for (int v : tables[i])
        if (v < 0 || v >= size)
          throw InputError("algebra " + id + ": table entry out of range in " + sig.ops[i].name);
    }
    meet_op = sig.index_of(sig.meet_name);
    join_op = sig.index_of(sig.join_name);
  }

  // Full invariant: the meet/join reduct is a distributive lattice.
  void validate() const {
    if (meet_op < 0 || join_op < 0) throw InputError("algebra " + id + ": finish() not run");
    for (int x = 0; x < size; ++x) {
      if (meet(x, x) != x || join(x, x) != x)
        throw InputError("algebra " + id + ": lattice reduct not idempotent");
      for (int y = 0; y < size; ++y) {
        if (meet(x, y) != meet(y, x) || join(x, y) != join(y, x))
          throw InputError("algebra " + id + ": lattice reduct not commutative");
        if (meet(x, join(x, y)) != x || join(x, meet(x, y)) != x)
          throw InputError("algebra " + id + ": lattice reduct fails absorption");
        for (int z = 0; z < size; ++z) {
          if (meet(meet(x, y), z) != meet(x, meet(y, z)) || join(join(x, y), z) != join(x, join(y, z)))
            throw InputError("algebra " + id + ": lattice reduct not associative");
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
            throw InputError("algebra " + id + ": lattice reduct not distributive");
        }
      }
    }
  }

  int top() const {
    int t = 0;
    for (int x = 1; x < size; ++x) t = join(t, x);
    return t;
  }
  int bottom() const {
    int b = 0;
    for (int x = 1; x < size; ++x) b = meet(b, x);
    return b;
  }
};

inline FinAlgebra make_algebra(std::string id, int size, Signature sig,
                               std::vector<std::vector<int>> tables) {
  FinAlgebra a{std::move(id), size, std::move(sig), std::move(tables)};
  a.finish();
  a.validate();
  return a;
}

struct Hom {
  std::string dom_id, cod_id;
  std::vector<int> map;
  bool operator==(const Hom&) const = default;
};

struct SubUniverse {
  std::string parent_id;
  std::vector<int> members;  // sorted ascending
};

// --- closure machinery ---------------------------------------------------

namespace detail {

// Adds operation values until the membership bitmap is closed.
inline void close_inplace(const FinAlgebra& A, std::vector<char>& in) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int op = 0; op < static_cast<int>(A.sig.ops.size()); ++op) {
      const int k = A.sig.ops[op].arity;
      for_each_tuple(k, A.size, [&](std::span<const int> t) {
        for (int a : t)
          if (!in[a]) return;
        const int v = A.apply(op, t);
        if (!in[v]) {
          in[v] = 1;
          changed = true;
        }
      });
    }
  }
}

struct Violation {
  int op;
  std::vector<int> args;
  int value;
};

// First (op, tuple) with arguments inside the set and value outside it.
inline std::optional<Violation> first_violation(const FinAlgebra& A, const std::vector<char>& in) {
  for (int op = 0; op < static_cast<int>(A.sig.ops.size()); ++op) {
    const int k = A.sig.ops[op].arity;
    std::optional<Violation> found;
    for_each_tuple(k, A.size, [&](std::span<const int> t) {
      if (found) return;
      for (int a : t)
        if (!in[a]) return;
      const int v = A.apply(op, t);
      if (!in[v]) found = Violation{op, std::vector<int>(t.begin(), t.end()), v};
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline std::vector<int> members_of(const std::vector<char>& in) {
  std::vector<int> m;
  for (int i = 0; i < static_cast<int>(in.size()); ++i)
    if (in[i]) m.push_back(i);
  return m;
}

}  // namespace detail

inline bool is_closed(const FinAlgebra& A, const std::vector<int>& members) {
  std::vector<char> in(A.size, 0);
  for (int m : members) in.at(static_cast<size_t>(m)) = 1;
  return !detail::first_violation(A, in).has_value();
}

inline SubUniverse subuniverse_generated(const FinAlgebra& A, const std::vector<int>& seed) {
  if (seed.empty()) throw InputError("subuniverse_generated: empty seed");
  std::vector<char> in(A.size, 0);
  for (int s : seed) {
    if (s < 0 || s >= A.size) throw InputError("subuniverse_generated: seed element out of range");
    in[s] = 1;
  }
  detail::close_inplace(A, in);
  return SubUniverse{A.id, detail::members_of(in)};
}

// Greedy generating set: repeatedly adjoin the least element outside the
// closure of what has been chosen (nullary operation values are free).
inline std::vector<int> generating_set(const FinAlgebra& A) {
  std::vector<char> in(A.size, 0);
  bool seeded = false;
  for (int op = 0; op < static_cast<int>(A.sig.ops.size()); ++op)
    if (A.sig.ops[op].arity == 0) {
      in[A.tables[op][0]] = 1;
      seeded = true;
    }
  if (seeded) detail::close_inplace(A, in);
  std::vector<int> gens;
  for (int e = 0; e < A.size; ++e)
    if (!in[e]) {
      gens.push_back(e);
      in[e] = 1;
      detail::close_inplace(A, in);
    }
  return gens;
}

inline bool is_hom(const Hom& f, const FinAlgebra& A, const FinAlgebra& B) {
  if (static_cast<int>(f.map.size()) != A.size) throw InputError("is_hom: map length mismatch");
  if (!(A.sig == B.sig)) throw InputError("is_hom: signature mismatch");
  for (int v : f.map)
    if (v < 0 || v >= B.size) throw InputError("is_hom: image out of range");
  bool ok = true;
  for (int op = 0; op < static_cast<int>(A.sig.ops.size()) && ok; ++op) {
    const int k = A.sig.ops[op].arity;
    std::vector<int> mapped(static_cast<size_t>(std::max(k, 1)));
    for_each_tuple(k, A.size, [&](std::span<const int> t) {
      if (!ok) return;
      for (int i = 0; i < k; ++i) mapped[static_cast<size_t>(i)] = f.map[static_cast<size_t>(t[i])];
      if (f.map[static_cast<size_t>(A.apply(op, t))] !=
          B.apply(op, std::span<const int>(mapped.data(), static_cast<size_t>(k))))
        ok = false;
    });
  }
  return ok;
}

// All homomorphisms A -> B, in lexicographic order of their map vectors.
// Backtracks over images of a generating set; each choice is propagated to
// the generated closure, so conflicts prune whole branches.
inline std::vector<Hom> hom_set(const FinAlgebra& A, const FinAlgebra& B) {
  if (!(A.sig == B.sig)) throw InputError("hom_set: signature mismatch");
  const std::vector<int> gens = generating_set(A);

  // Propagates forced images; returns false on conflict.
  auto propagate = [&](std::vector<int>& img) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int op = 0; op < static_cast<int>(A.sig.ops.size()); ++op) {
        const int k = A.sig.ops[op].arity;
        bool bad = false;
        std::vector<int> mapped(static_cast<size_t>(std::max(k, 1)));
        for_each_tuple(k, A.size, [&](std::span<const int> t) {
          if (bad) return;
          for (int i = 0; i < k; ++i) {
            const int m = img[static_cast<size_t>(t[i])];
            if (m < 0) return;
            mapped[static_cast<size_t>(i)] = m;
          }
          const int v = A.apply(op, t);
          const int w = B.apply(op, std::span<const int>(mapped.data(), static_cast<size_t>(k)));
          if (img[static_cast<size_t>(v)] < 0) {
            img[static_cast<size_t>(v)] = w;
            changed = true;
          } else if (img[static_cast<size_t>(v)] != w) {
            bad = true;
          }
        });
        if (bad) return false;
      }
    }
    return true;
  };

  std::vector<Hom> out;
  std::vector<int> img(static_cast<size_t>(A.size), -1);
  if (!propagate(img)) return out;  // nullary clash between A and B

  auto rec = [&](auto&& self, size_t g, const std::vector<int>& cur) -> void {
    if (g == gens.size()) {
      for (int v : cur)
        if (v < 0) return;  // unreachable: gens generate A
      out.push_back(Hom{A.id, B.id, cur});
      return;
    }
    if (cur[static_cast<size_t>(gens[g])] >= 0) {
      self(self, g + 1, cur);
      return;
    }
    for (int b = 0; b < B.size; ++b) {
      std::vector<int> next = cur;
      next[static_cast<size_t>(gens[g])] = b;
      if (propagate(next)) self(self, g + 1, next);
    }
  };
  rec(rec, 0, img);
  std::sort(out.begin(), out.end(), [](const Hom& x, const Hom& y) { return x.map < y.map; });
  return out;
}

inline std::vector<int> one_element_subuniverses(const FinAlgebra& A) {
  std::vector<int> out;
  for (int e = 0; e < A.size; ++e) {
    bool ok = true;
    for (int op = 0; op < static_cast<int>(A.sig.ops.size()) && ok; ++op) {
      std::vector<int> t(static_cast<size_t>(std::max(A.sig.ops[op].arity, 1)), e);
      if (A.apply(op, std::span<const int>(t.data(), static_cast<size_t>(A.sig.ops[op].arity))) != e)
        ok = false;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

// All maximal subuniverses of A contained in `allowed`. Branch-and-remove:
// a violating instance (args inside, value outside) is repaired by deleting
// one of its argument elements; every maximal closed subset survives on some
// branch, and an inclusion sweep discards the non-maximal leftovers.
inline std::vector<SubUniverse> maximal_subuniverses_within(const FinAlgebra& A,
                                                            const std::vector<int>& allowed) {
  std::vector<char> start(A.size, 0);
  for (int a : allowed) {
    if (a < 0 || a >= A.size) throw InputError("maximal_subuniverses_within: element out of range");
    start[a] = 1;
  }
  std::set<std::vector<char>> seen;
  std::set<std::vector<int>> closed;
  std::vector<std::vector<char>> stack{start};
  while (!stack.empty()) {
    std::vector<char> cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    auto viol = detail::first_violation(A, cur);
    if (!viol) {
      auto mem = detail::members_of(cur);
      if (!mem.empty()) closed.insert(std::move(mem));
      continue;
    }
    std::set<int> branch(viol->args.begin(), viol->args.end());
    for (int e : branch) {
      std::vector<char> next = cur;
      next[static_cast<size_t>(e)] = 0;
      stack.push_back(std::move(next));
    }
  }
  std::vector<SubUniverse> out;
  for (const auto& c : closed) {
    bool maximal = true;
    for (const auto& d : closed) {
      if (&c == &d || d.size() <= c.size()) continue;
      if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(SubUniverse{A.id, c});
  }
  return out;  // std::set iteration keeps members lexicographic
}

// Induced algebra on a closed subset, reindexed along sorted members.
inline FinAlgebra induced_algebra(const FinAlgebra& A, const std::vector<int>& members,
                                  const std::string& id) {
  std::vector<int> mem = members;
  std::sort(mem.begin(), mem.end());
  mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
  if (mem.empty()) throw InputError("induced_algebra: empty member set");
  if (!is_closed(A, mem)) throw InputError("induced_algebra: member set is not closed");
  std::vector<int> back(static_cast<size_t>(A.size), -1);
  for (int i = 0; i < static_cast<int>(mem.size()); ++i) back[static_cast<size_t>(mem[i])] = i;
  FinAlgebra S;
  S.id = id;
  S.size = static_cast<int>(mem.size());
  S.sig = A.sig;
  S.tables.resize(A.sig.ops.size());
  for (int op = 0; op < static_cast<int>(A.sig.ops.size()); ++op) {
    const int k = A.sig.ops[op].arity;
    S.tables[op].resize(FinAlgebra::table_cells(k, S.size));
    std::vector<int> orig(static_cast<size_t>(std::max(k, 1)));
    size_t w = 0;
    for_each_tuple(k, S.size, [&](std::span<const int> t) {
      for (int i = 0; i < k; ++i) orig[static_cast<size_t>(i)] = mem[static_cast<size_t>(t[i])];
      S.tables[op][w++] = back[static_cast<size_t>(
          A.apply(op, std::span<const int>(orig.data(), static_cast<size_t>(k))))];
    });
  }
  S.finish();
  return S;
}

// --- products -------------------------------------------------------------

struct ProductAlgebra {
  FinAlgebra algebra;
  std::vector<int> factor_sizes;

  std::vector<int> decode(int idx) const {
    std::vector<int> t(factor_sizes.size());
    for (int i = static_cast<int>(factor_sizes.size()) - 1; i >= 0; --i) {
      t[static_cast<size_t>(i)] = idx % factor_sizes[static_cast<size_t>(i)];
      idx /= factor_sizes[static_cast<size_t>(i)];
    }
    return t;
  }
  int encode(std::span<const int> t) const {
    int idx = 0;
    for (size_t i = 0; i < factor_sizes.size(); ++i) idx = idx * factor_sizes[i] + t[i];
    return idx;
  }
};

inline ProductAlgebra product(const std::vector<FinAlgebra>& factors) {
  if (factors.empty()) throw InputError("product: empty factor sequence");
  for (const auto& f : factors)
    if (!(f.sig == factors[0].sig)) throw InputError("product: signature mismatch across factors");
  long long n = 1;
  std::string id;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    n *= f.size;
    if (n > (1LL << 30)) throw ResourceLimit("product: universe exceeds 2^30 elements");
    sizes.push_back(f.size);
    if (!id.empty()) id += "*";
    id += f.id;
  }
  ProductAlgebra P;
  P.factor_sizes = sizes;
  P.algebra.id = id;
  P.algebra.size = static_cast<int>(n);
  P.algebra.sig = factors[0].sig;
  P.algebra.tables.resize(P.algebra.sig.ops.size());
  const int N = P.algebra.size;
  for (int op = 0; op < static_cast<int>(P.algebra.sig.ops.size()); ++op) {
    const int k = P.algebra.sig.ops[op].arity;
    P.algebra.tables[op].resize(FinAlgebra::table_cells(k, N));
    std::vector<std::vector<int>> dec(static_cast<size_t>(std::max(k, 1)));
    std::vector<int> comp(static_cast<size_t>(std::max(k, 1)));
    std::vector<int> res(factors.size());
    size_t w = 0;
    for_each_tuple(k, N, [&](std::span<const int> t) {
      for (int i = 0; i < k; ++i) dec[static_cast<size_t>(i)] = P.decode(t[i]);
      for (size_t f = 0; f < factors.size(); ++f) {
        for (int i = 0; i < k; ++i) comp[static_cast<size_t>(i)] = dec[static_cast<size_t>(i)][f];
        res[f] = factors[f].apply(op, std::span<const int>(comp.data(), static_cast<size_t>(k)));
      }
      P.algebra.tables[op][w++] = P.encode(res);
    });
  }
  P.algebra.finish();
  return P;
}

inline ProductAlgebra power(const FinAlgebra& A, int k) {
  if (k <= 0) throw InputError("power: exponent must be positive");
  ProductAlgebra P = product(std::vector<FinAlgebra>(static_cast<size_t>(k), A));
  P.algebra.id = A.id + "^" + std::to_string(k);
  return P;
}

// --- free algebras ----------------------------------------------------------

struct FreeAlgebra {
  FinAlgebra algebra;
  std::vector<int> generators;              // indices of the free generators
  std::vector<std::vector<int>> elements;   // tuple form of each element
};

constexpr long long kDefaultMaxCells = 10'000'000;

// Free algebra on k generators in the quasivariety generated by `sorts`:
// the subalgebra of the product of all M^(M^k) generated by the projection
// tuples. The closure lives in tuple space; the ambient power is never
// materialised, but its size is still bounded before any work starts.
inline FreeAlgebra free_algebra(const std::vector<FinAlgebra>& sorts, int k,
                                long long max_cells = kDefaultMaxCells) {
  if (sorts.empty()) throw InputError("free_algebra: no sorts");
  if (k <= 0) throw InputError("free_algebra: generator count must be positive");
  for (const auto& s : sorts)
    if (!(s.sig == sorts[0].sig)) throw InputError("free_algebra: signature mismatch across sorts");

  double ambient_log10 = 0;
  for (const auto& s : sorts) ambient_log10 += std::pow(s.size, k) * std::log10(s.size);
  if (ambient_log10 > std::log10(static_cast<double>(max_cells)))
    throw ResourceLimit("free_algebra: ambient power exceeds the size bound of " +
                        std::to_string(max_cells));

  // One coordinate per (sort, k-tuple over that sort), tuples in lex order.
  std::vector<int> coord_sort;
  std::vector<std::vector<int>> coord_w;
  for (size_t s = 0; s < sorts.size(); ++s)
    for_each_tuple(k, sorts[s].size, [&](std::span<const int> w) {
      coord_sort.push_back(static_cast<int>(s));
      coord_w.emplace_back(w.begin(), w.end());
    });
  const size_t C = coord_sort.size();

  const Signature& sig = sorts[0].sig;
  auto cells_for = [&](size_t n) {
    double total = 0;
    for (const auto& op : sig.ops) total += std::pow(static_cast<double>(n), op.arity);
    return total;
  };

  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<int>> elems;
  auto add = [&](std::vector<int> t) -> int {
    auto it = index_of.find(t);
    if (it != index_of.end()) return it->second;
    const int idx = static_cast<int>(elems.size());
    index_of.emplace(t, idx);
    elems.push_back(std::move(t));
    if (cells_for(elems.size()) > static_cast<double>(max_cells))
      throw ResourceLimit("free_algebra: result tables exceed the cell bound of " +
                          std::to_string(max_cells));
    return idx;
  };

  std::vector<int> gen_raw;
  for (int g = 0; g < k; ++g) {
    std::vector<int> t(C);
    for (size_t c = 0; c < C; ++c) t[c] = coord_w[c][static_cast<size_t>(g)];
    gen_raw.push_back(add(std::move(t)));
  }
  for (int op = 0; op < static_cast<int>(sig.ops.size()); ++op)
    if (sig.ops[op].arity == 0) {
      std::vector<int> t(C);
      for (size_t c = 0; c < C; ++c) t[c] = sorts[static_cast<size_t>(coord_sort[c])].tables[op][0];
      add(std::move(t));
    }

  auto apply_tuplewise = [&](int op, std::span<const int> arg_idx) {
    std::vector<int> t(C);
    std::vector<int> comp(arg_idx.size());
    for (size_t c = 0; c < C; ++c) {
      for (size_t i = 0; i < arg_idx.size(); ++i) comp[i] = elems[static_cast<size_t>(arg_idx[i])][c];
      t[c] = sorts[static_cast<size_t>(coord_sort[c])].apply(
          op, std::span<const int>(comp.data(), comp.size()));
    }
    return t;
  };

  // Closure: apply every operation to every tuple touching the frontier.
  size_t settled = 0;
  while (settled < elems.size()) {
    const size_t frontier_lo = settled;
    settled = elems.size();
    for (int op = 0; op < static_cast<int>(sig.ops.size()); ++op) {
      const int ar = sig.ops[op].arity;
      if (ar == 0) continue;
      const size_t hi = settled;
      std::vector<int> args(static_cast<size_t>(ar), 0);
      auto rec = [&](auto&& self, int pos, bool touches) -> void {
        if (pos == ar) {
          if (touches) add(apply_tuplewise(op, std::span<const int>(args.data(), args.size())));
          return;
        }
        for (size_t a = 0; a < hi; ++a) {
          args[static_cast<size_t>(pos)] = static_cast<int>(a);
          self(self, pos + 1, touches || a >= frontier_lo);
        }
      };
      rec(rec, 0, frontier_lo == 0);
    }
  }

  // Canonical order: lexicographic on tuples.
  std::vector<int> order(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return elems[static_cast<size_t>(a)] < elems[static_cast<size_t>(b)]; });
  std::vector<int> rank(elems.size());
  for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);

  FreeAlgebra F;
  F.elements.resize(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) F.elements[static_cast<size_t>(rank[i])] = elems[i];
  for (int g : gen_raw) F.generators.push_back(rank[static_cast<size_t>(g)]);

  std::string sid;
  for (const auto& s : sorts) {
    if (!sid.empty()) sid += ",";
    sid += s.id;
  }
  F.algebra.id = "F" + std::to_string(k) + "(" + sid + ")";
  F.algebra.size = static_cast<int>(elems.size());
  F.algebra.sig = sig;
  F.algebra.tables.resize(sig.ops.size());
  std::map<std::vector<int>, int> lookup;
  for (size_t i = 0; i < F.elements.size(); ++i) lookup.emplace(F.elements[i], static_cast<int>(i));
  for (int op = 0; op < static_cast<int>(sig.ops.size()); ++op) {
    const int ar = sig.ops[op].arity;
    F.algebra.tables[op].resize(FinAlgebra::table_cells(ar, F.algebra.size));
    size_t w = 0;
    std::vector<int> comp(static_cast<size_t>(std::max(ar, 1)));
    for_each_tuple(ar, F.algebra.size, [&](std::span<const int> t) {
      std::vector<int> img(C);
      for (size_t c = 0; c < C; ++c) {
        for (int i = 0; i < ar; ++i) comp[static_cast<size_t>(i)] = F.elements[static_cast<size_t>(t[i])][c];
        img[c] = sorts[static_cast<size_t>(coord_sort[c])].apply(
            op, std::span<const int>(comp.data(), static_cast<size_t>(ar)));
      }
      F.algebra.tables[op][w++] = lookup.at(img);
    });
  }
  F.algebra.finish();
  return F;
}

// --- small constructions ----------------------------------------------------

inline Signature lattice_signature() {
  return Signature{{{"meet", 2}, {"join", 2}}, "meet", "join"};
}

inline FinAlgebra chain_lattice(int n, const std::string& id) {
  if (n <= 0) throw InputError("chain_lattice: size must be positive");
  std::vector<int> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[static_cast<size_t>(a) * n + b] = std::min(a, b);
      join[static_cast<size_t>(a) * n + b] = std::max(a, b);
    }
  return make_algebra(id, n, lattice_signature(), {meet, join});
}

inline FinAlgebra trivial_algebra(const Signature& sig, const std::string& id) {
  std::vector<std::vector<int>> tables;
  for (const auto& op : sig.ops) tables.emplace_back(FinAlgebra::table_cells(op.arity, 1), 0);
  return make_algebra(id, 1, sig, std::move(tables));
}

// The distributive-lattice reduct: same universe, meet and join only.
inline FinAlgebra u_reduct(const FinAlgebra& A) {
  FinAlgebra B;
  B.id = "U(" + A.id + ")";
  B.size = A.size;
  B.sig = lattice_signature();
  B.tables = {A.tables[static_cast<size_t>(A.meet_op)], A.tables[static_cast<size_t>(A.join_op)]};
  B.finish();
  return B;
}

}  // namespace pigdual
