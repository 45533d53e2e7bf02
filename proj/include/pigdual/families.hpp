#pragma once

// Ready-made algebras and certified piggyback setups: the Kleene 3-chain
// with its two-sorted ego, and the Sugihara chains in their odd, 3-sorted
// even, and brute-force even configurations.

#include <optional>
#include <string>
#include <vector>

#include "piggyback.hpp"

namespace pigdual {

struct FamilySetup {
  std::vector<FinAlgebra> sorts;
  CarrierAssignment carriers;
  std::vector<Hom> G;
  std::string notes;
};

// The Kleene chain 0 < a < 1 (indices 0, 1, 2) with an involutive negation
// fixing a.
inline FinAlgebra kleene_algebra(const std::string& id = "3") {
  Signature sig = lattice_signature();
  sig.ops.push_back({"neg", 1});
  return make_algebra(id, 3, sig,
                      {{0, 0, 0, 0, 1, 1, 0, 1, 2},
                       {0, 1, 2, 1, 1, 2, 2, 2, 2},
                       {2, 1, 0}});
}

// Two copies of the Kleene chain; a goes to 1 under the minus carrier and
// to 0 under the plus carrier; G holds the two identity cross maps.
inline FamilySetup kleene_setup() {
  FamilySetup f;
  f.sorts = {kleene_algebra("3-"), kleene_algebra("3+")};
  f.carriers.per_sort = {{Carrier{"3-", {0, 1, 1}}}, {Carrier{"3+", {0, 0, 1}}}};
  f.G = {Hom{"3-", "3+", {0, 1, 2}}, Hom{"3+", "3-", {0, 1, 2}}};
  f.notes = "Kleene chain, two sorts, one carrier each";
  if (check_sep(f.sorts, f.G, f.carriers)) throw std::logic_error("kleene_setup: separation lost");
  const Pointing p = check_pointed(f.sorts, f.carriers);
  if (!p.s1 || !p.s0) throw std::logic_error("kleene_setup: pointedness lost");
  return f;
}

// Value of index i in the k-element Sugihara chain. Odd chains run from -n
// to n; even chains omit 0.
inline int sugihara_value(int k, int i) {
  const int n = k / 2;
  if (k % 2 == 1) return i - n;
  return i < n ? i - n : i - n + 1;
}

inline int sugihara_index(int k, int v) {
  const int n = k / 2;
  if (k % 2 == 1) return v + n;
  return v < 0 ? v + n : v + n - 1;
}

// The k-element Sugihara chain: min, max, negation a |-> -a, and the
// implication a -> b = (-a) v b when a <= b and (-a) ^ b otherwise.
inline FinAlgebra sugihara_algebra(int k, std::string id = "") {
  if (k < 2) throw InputError("sugihara_algebra: need at least two elements");
  if (id.empty()) id = "Z" + std::to_string(k);
  Signature sig = lattice_signature();
  sig.ops.push_back({"neg", 1});
  sig.ops.push_back({"imp", 2});
  std::vector<int> meet(static_cast<size_t>(k) * k), join(static_cast<size_t>(k) * k),
      neg(static_cast<size_t>(k)), imp(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) neg[static_cast<size_t>(i)] = k - 1 - i;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      meet[static_cast<size_t>(i) * k + j] = std::min(i, j);
      join[static_cast<size_t>(i) * k + j] = std::max(i, j);
      const int a = sugihara_value(k, i), b = sugihara_value(k, j);
      const int r = a <= b ? std::max(-a, b) : std::min(-a, b);
      imp[static_cast<size_t>(i) * k + j] = sugihara_index(k, r);
    }
  return make_algebra(id, k, sig, {meet, join, neg, imp});
}

enum class SugiharaMode { odd, even, isp_even_bruteforce };

// Certified Sugihara setups.
//   odd(n):   P^-, P^+ copies of Z_{2n+1}; carriers cut at >= 0 and >= 1.
//   even(n):  P^-, P^+ copies of Z_{2n-1} with the odd carriers, plus Q, a
//             copy of Z_{2n} cut strictly above 0.
//   isp_even_bruteforce(n): one copy of Z_{2n} per non-constant carrier of
//             the 2n-chain, plus the two pointing sorts unless suppressed.
// G is every inter-sort homomorphism. Construction re-checks separation,
// and pointedness whenever the setup promises it.
inline FamilySetup sugihara_setup(SugiharaMode mode, int n, bool include_trivial_sorts = true) {
  FamilySetup f;
  auto threshold_bits = [](int k, int t) {
    std::vector<int> bits(static_cast<size_t>(k), 0);
    for (int i = t; i < k; ++i) bits[static_cast<size_t>(i)] = 1;
    return bits;
  };
  bool expect_pointed = true;
  if (mode == SugiharaMode::odd) {
    if (n < 1) throw InputError("sugihara_setup: odd mode needs n >= 1");
    const int k = 2 * n + 1;
    f.sorts = {sugihara_algebra(k, "P-"), sugihara_algebra(k, "P+")};
    f.carriers.per_sort = {{Carrier{"P-", threshold_bits(k, n)}},
                           {Carrier{"P+", threshold_bits(k, n + 1)}}};
    f.notes = "Sugihara odd chain setup, n=" + std::to_string(n);
  } else if (mode == SugiharaMode::even) {
    if (n < 2) throw InputError("sugihara_setup: even mode needs n >= 2");
    const int kp = 2 * n - 1, kq = 2 * n;
    f.sorts = {sugihara_algebra(kp, "P-"), sugihara_algebra(kp, "P+"),
               sugihara_algebra(kq, "Q")};
    f.carriers.per_sort = {{Carrier{"P-", threshold_bits(kp, n - 1)}},
                           {Carrier{"P+", threshold_bits(kp, n)}},
                           {Carrier{"Q", threshold_bits(kq, n)}}};
    f.notes = "Sugihara even chain setup, three sorts, n=" + std::to_string(n);
  } else {
    if (n < 2) throw InputError("sugihara_setup: brute-force even mode needs n >= 2");
    const int k = 2 * n;
    for (int t = 1; t < k; ++t) {
      const std::string id = "Z" + std::to_string(k) + ".t" + std::to_string(t);
      f.sorts.push_back(sugihara_algebra(k, id));
      f.carriers.per_sort.push_back({Carrier{id, threshold_bits(k, t)}});
    }
    f.notes = "Sugihara even chain brute-force setup, n=" + std::to_string(n);
    if (include_trivial_sorts) {
      auto [sorts2, carriers2] = add_trivial_sorts(std::move(f.sorts), std::move(f.carriers));
      f.sorts = std::move(sorts2);
      f.carriers = std::move(carriers2);
    } else {
      expect_pointed = false;
      f.notes += ", pointing sorts suppressed";
    }
  }
  f.G = all_inter_sort_homs(f.sorts);
  if (check_sep(f.sorts, f.G, f.carriers))
    throw std::logic_error("sugihara_setup: separation lost");
  if (expect_pointed) {
    const Pointing p = check_pointed(f.sorts, f.carriers);
    if (!p.s1 || !p.s0) throw std::logic_error("sugihara_setup: pointedness lost");
  }
  return f;
}

}  // namespace pigdual
