#pragma once

// Brute-force reference implementations. Slow on purpose: each one answers
// the same question as a library routine by exhaustive enumeration, so the
// two can disagree only if one of them is wrong.

#include <algorithm>
#include <vector>

#include "pigdual/finalg.hpp"
#include "pigdual/priestley.hpp"

namespace oracles {

using pigdual::FinAlgebra;
using pigdual::Hom;

// Filter every map |A| -> |B|.
inline std::vector<Hom> hom_set_bruteforce(const FinAlgebra& A, const FinAlgebra& B) {
  std::vector<Hom> out;
  pigdual::for_each_tuple(A.size, B.size, [&](std::span<const int> t) {
    Hom h{A.id, B.id, std::vector<int>(t.begin(), t.end())};
    if (pigdual::is_hom(h, A, B)) out.push_back(std::move(h));
  });
  return out;
}

// Every nonempty closed subset, as sorted member lists in lexicographic
// order. Usable up to around 20 elements.
inline std::vector<std::vector<int>> all_subuniverses(const FinAlgebra& A) {
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << A.size); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < A.size; ++i)
      if (mask & (1ul << i)) members.push_back(i);
    if (pigdual::is_closed(A, members)) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Inclusion-maximal closed subsets of one allowed set, by filtering every
// subset of it.
inline std::vector<std::vector<int>> maximal_within_bruteforce(const FinAlgebra& A,
                                                               const std::vector<int>& allowed) {
  const int k = static_cast<int>(allowed.size());
  std::vector<std::vector<int>> closed;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if (mask & (1ul << i)) members.push_back(allowed[static_cast<size_t>(i)]);
    std::sort(members.begin(), members.end());
    if (pigdual::is_closed(A, members)) closed.push_back(std::move(members));
  }
  std::vector<std::vector<int>> out;
  for (const auto& c : closed) {
    bool maximal = true;
    for (const auto& d : closed)
      if (c != d && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every 0/1 vector over B that respects meet and join, in lexicographic
// order: the points of the unbounded Priestley dual.
inline std::vector<std::vector<int>> hu_bruteforce(const FinAlgebra& B) {
  std::vector<std::vector<int>> out;
  pigdual::for_each_tuple(B.size, 2, [&](std::span<const int> t) {
    for (int x = 0; x < B.size; ++x)
      for (int y = 0; y < B.size; ++y) {
        if (t[static_cast<size_t>(B.meet(x, y))] !=
            std::min(t[static_cast<size_t>(x)], t[static_cast<size_t>(y)]))
          return;
        if (t[static_cast<size_t>(B.join(x, y))] !=
            std::max(t[static_cast<size_t>(x)], t[static_cast<size_t>(y)]))
          return;
      }
    out.emplace_back(t.begin(), t.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles
