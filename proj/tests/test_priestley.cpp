#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pigdual/families.hpp"
#include "pigdual/priestley.hpp"

using namespace pigdual;

namespace {

FinAlgebra square_lattice() {
  // 2 x 2: elements 0 = bottom, 1 and 2 incomparable, 3 = top
  return make_algebra("2^2", 4, lattice_signature(),
                      {{0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3},
                       {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3}});
}

}  // namespace

TEST_CASE("join irreducibles of standard lattices") {
  REQUIRE(join_irreducibles(chain_lattice(2, "C2")) == std::vector<int>{1});
  REQUIRE(join_irreducibles(chain_lattice(5, "C5")) == std::vector<int>{1, 2, 3, 4});
  REQUIRE(join_irreducibles(square_lattice()) == std::vector<int>{1, 2});
  REQUIRE(join_irreducibles(chain_lattice(1, "C1")).empty());
}

TEST_CASE("hu_dual of a chain is a chain of characters") {
  const FinAlgebra C3 = chain_lattice(3, "C3");
  const DualSpace H = hu_dual(C3);
  REQUIRE(H.points.size() == 4);  // two join-irreducibles plus both constants
  REQUIRE(H.poset.variant == PosetVariant::doubly_pointed);

  // characters as bit vectors over C3, sorted: 000, 001, 011, 111
  REQUIRE(H.points[0].bits == std::vector<int>{0, 0, 0});
  REQUIRE(H.points[1].bits == std::vector<int>{0, 0, 1});
  REQUIRE(H.points[2].bits == std::vector<int>{0, 1, 1});
  REQUIRE(H.points[3].bits == std::vector<int>{1, 1, 1});
  REQUIRE(H.poset.bottom == 0);
  REQUIRE(H.poset.top == 3);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) REQUIRE(H.poset.leq[p][q] == (p <= q));
}

TEST_CASE("hu_dual matches the brute-force character filter on a corpus") {
  const std::vector<FinAlgebra> corpus = {
      chain_lattice(1, "C1"), chain_lattice(2, "C2"),       chain_lattice(4, "C4"),
      square_lattice(),       u_reduct(kleene_algebra()),   u_reduct(sugihara_algebra(4)),
  };
  for (const auto& B : corpus) {
    const DualSpace H = hu_dual(B);
    const auto slow = oracles::hu_bruteforce(B);
    REQUIRE(H.points.size() == slow.size());
    for (size_t i = 0; i < H.points.size(); ++i) REQUIRE(H.points[i].bits == slow[i]);
    REQUIRE(static_cast<int>(H.points.size()) ==
            static_cast<int>(join_irreducibles(B).size()) + 2);
  }
}

TEST_CASE("hu_dual of the square is the dual diamond") {
  const DualSpace H = hu_dual(square_lattice());
  REQUIRE(H.points.size() == 4);
  // characters chi_up(1) = 0101 and chi_up(2) = 0011 are incomparable
  const auto& leq = H.poset.leq;
  int bot = *H.poset.bottom, top = *H.poset.top;
  std::vector<int> mid;
  for (int p = 0; p < 4; ++p)
    if (p != bot && p != top) mid.push_back(p);
  REQUIRE(mid.size() == 2);
  REQUIRE_FALSE(leq[mid[0]][mid[1]]);
  REQUIRE_FALSE(leq[mid[1]][mid[0]]);
  REQUIRE(leq[bot][mid[0]]);
  REQUIRE(leq[mid[1]][top]);
}

TEST_CASE("one-bound variant drops the zero character") {
  const FinAlgebra C3 = chain_lattice(3, "C3");
  const DualSpace H1 = hu_dual(C3, Variant::d1);
  REQUIRE(H1.points.size() == 3);
  REQUIRE(H1.poset.variant == PosetVariant::upper_pointed);
  REQUIRE(H1.poset.top == 2);
  REQUIRE_FALSE(H1.poset.bottom.has_value());
  for (const auto& pt : H1.points) REQUIRE(pt.bits[C3.size - 1] == 1);  // all preserve the top
}

TEST_CASE("carrier_valid checks hom and variant constraints") {
  const FinAlgebra C3 = chain_lattice(3, "C3");
  REQUIRE(carrier_valid(Carrier{"C3", {0, 1, 1}}, C3));
  REQUIRE(carrier_valid(Carrier{"C3", {0, 0, 0}}, C3));
  REQUIRE_FALSE(carrier_valid(Carrier{"C3", {1, 0, 1}}, C3));       // not monotone
  REQUIRE_FALSE(carrier_valid(Carrier{"C3", {0, 0, 0}}, C3, Variant::d1));  // must hit 1 at top
  REQUIRE(carrier_valid(Carrier{"C3", {0, 0, 1}}, C3, Variant::d1));
  REQUIRE_FALSE(carrier_valid(Carrier{"C3", {0, 1}}, C3));          // wrong length
}

TEST_CASE("ku_dual recovers the lattice of proper up-sets") {
  const FinAlgebra C3 = chain_lattice(3, "C3");
  const DualSpace H = hu_dual(C3);
  const KuResult K = ku_dual(H.poset);
  REQUIRE(K.algebra.size == 3);  // up-sets of a 4-chain containing top, missing bottom
  REQUIRE_NOTHROW(K.algebra.validate());

  const DoubleDualReport rep = double_dual_check(C3);
  REQUIRE(rep.iso);
  REQUIRE(rep.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("double dual holds across the corpus in both variants") {
  const std::vector<FinAlgebra> corpus = {
      chain_lattice(1, "C1"),     chain_lattice(2, "C2"),
      chain_lattice(3, "C3"),     chain_lattice(5, "C5"),
      square_lattice(),           u_reduct(kleene_algebra()),
      u_reduct(sugihara_algebra(4)),
  };
  for (const auto& B : corpus) {
    CAPTURE(B.id);
    REQUIRE(double_dual_check(B, Variant::du).iso);
    REQUIRE(double_dual_check(B, Variant::d1).iso);
  }
}

TEST_CASE("poset_order_iso detects isomorphism and its absence") {
  const DualSpace H3 = hu_dual(chain_lattice(3, "C3"));
  const DualSpace H3b = hu_dual(u_reduct(kleene_algebra()));  // also a 4-chain
  REQUIRE(poset_order_iso(H3.poset, H3b.poset).has_value());

  const DualSpace Hsq = hu_dual(square_lattice());  // diamond, same size
  REQUIRE_FALSE(poset_order_iso(H3.poset, Hsq.poset).has_value());

  const DualSpace H2 = hu_dual(chain_lattice(2, "C2"));
  REQUIRE_FALSE(poset_order_iso(H3.poset, H2.poset).has_value());
}

TEST_CASE("pointed poset validation") {
  PointedPoset P;
  P.size = 2;
  P.leq = {{1, 1}, {0, 1}};
  P.top = 1;
  P.bottom = 0;
  P.labels = {"a", "b"};
  P.variant = PosetVariant::doubly_pointed;
  REQUIRE_NOTHROW(P.validate());
  REQUIRE(P.covers() == std::vector<std::pair<int, int>>{{0, 1}});

  P.top = 0;  // not actually a maximum
  REQUIRE_THROWS_AS(P.validate(), InputError);
}

TEST_CASE("dot output names the graph and marks the points") {
  const DualSpace H = hu_dual(chain_lattice(3, "C3"));
  const std::string dot = poset_to_dot(H.poset, "H_C3");
  REQUIRE(dot.find("digraph \"H_C3\"") != std::string::npos);
  REQUIRE(dot.find("peripheries") != std::string::npos);
  REQUIRE(dot.find("->") != std::string::npos);
}
