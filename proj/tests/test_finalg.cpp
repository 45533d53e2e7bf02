#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pigdual/families.hpp"
#include "pigdual/finalg.hpp"

using namespace pigdual;

TEST_CASE("make_algebra validates shape and lattice axioms") {
  REQUIRE_NOTHROW(chain_lattice(3, "C3"));
  REQUIRE_NOTHROW(kleene_algebra());

  SECTION("table count mismatch") {
    REQUIRE_THROWS_AS(make_algebra("bad", 2, lattice_signature(), {{0, 0, 0, 1}}), InputError);
  }
  SECTION("table length mismatch") {
    REQUIRE_THROWS_AS(
        make_algebra("bad", 2, lattice_signature(), {{0, 0, 0}, {0, 1, 1, 1}}), InputError);
  }
  SECTION("value out of range") {
    REQUIRE_THROWS_AS(
        make_algebra("bad", 2, lattice_signature(), {{0, 0, 0, 5}, {0, 1, 1, 1}}), InputError);
  }
  SECTION("non-lattice tables") {
    // meet not commutative
    REQUIRE_THROWS_AS(
        make_algebra("bad", 2, lattice_signature(), {{0, 1, 0, 1}, {0, 1, 1, 1}}), InputError);
  }
  SECTION("missing meet symbol") {
    Signature sig{{{"mul", 2}}, "meet", "join"};
    REQUIRE_THROWS_AS(make_algebra("bad", 1, sig, {{0}}), InputError);
  }
}

TEST_CASE("for_each_tuple enumerates in lexicographic order") {
  std::vector<std::vector<int>> seen;
  for_each_tuple(2, 2, [&](std::span<const int> t) { seen.emplace_back(t.begin(), t.end()); });
  REQUIRE(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  int count = 0;
  for_each_tuple(0, 5, [&](std::span<const int> t) {
    REQUIRE(t.empty());
    ++count;
  });
  REQUIRE(count == 1);
}

TEST_CASE("meet, join, leq on chains") {
  const FinAlgebra C4 = chain_lattice(4, "C4");
  REQUIRE(C4.meet(1, 3) == 1);
  REQUIRE(C4.join(1, 3) == 3);
  REQUIRE(C4.leq(0, 3));
  REQUIRE_FALSE(C4.leq(2, 1));
  REQUIRE(C4.top() == 3);
  REQUIRE(C4.bottom() == 0);
}

TEST_CASE("subuniverse generation and closure") {
  const FinAlgebra K = kleene_algebra();
  REQUIRE(is_closed(K, {0, 2}));
  REQUIRE_FALSE(is_closed(K, {0}));  // neg(0) = 2 escapes
  REQUIRE(subuniverse_generated(K, {0}).members == std::vector<int>{0, 2});
  REQUIRE(subuniverse_generated(K, {1}).members == std::vector<int>{1});
  REQUIRE(subuniverse_generated(K, {0, 1}).members == std::vector<int>{0, 1, 2});
  REQUIRE_THROWS_AS(subuniverse_generated(K, {}), InputError);

  const auto gens = generating_set(K);
  REQUIRE(subuniverse_generated(K, gens).members == std::vector<int>{0, 1, 2});
}

TEST_CASE("hom_set agrees with the brute-force filter on small pairs") {
  const FinAlgebra K = kleene_algebra();
  const FinAlgebra Z3 = sugihara_algebra(3);
  const FinAlgebra Z4 = sugihara_algebra(4);
  const FinAlgebra Z5 = sugihara_algebra(5);
  const FinAlgebra C2 = chain_lattice(2, "C2");
  const FinAlgebra C3 = chain_lattice(3, "C3");

  auto check = [](const FinAlgebra& A, const FinAlgebra& B) {
    const auto fast = hom_set(A, B);
    const auto slow = oracles::hom_set_bruteforce(A, B);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i].map == slow[i].map);
  };
  check(K, K);
  check(Z3, Z3);
  check(Z4, Z4);
  check(Z5, Z5);
  check(C2, C3);
  check(C3, C2);
  check(Z3, Z5);
  check(Z5, Z3);
}

TEST_CASE("frozen endomorphism sets") {
  const FinAlgebra K = kleene_algebra();
  const auto endk = hom_set(K, K);
  REQUIRE(endk.size() == 2);
  REQUIRE(endk[0].map == std::vector<int>{0, 1, 2});
  REQUIRE(endk[1].map == std::vector<int>{1, 1, 1});

  const auto end4 = hom_set(sugihara_algebra(4), sugihara_algebra(4));
  REQUIRE(end4.size() == 1);
  REQUIRE(end4[0].map == std::vector<int>{0, 1, 2, 3});

  // Z5: identity, the constant at 0, and the two maps that collapse the
  // middle three elements while pinning or shrinking the endpoints.
  const auto end5 = hom_set(sugihara_algebra(5), sugihara_algebra(5));
  REQUIRE(end5.size() == 4);
  REQUIRE(end5[0].map == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(end5[1].map == std::vector<int>{0, 2, 2, 2, 4});
  REQUIRE(end5[2].map == std::vector<int>{1, 2, 2, 2, 3});
  REQUIRE(end5[3].map == std::vector<int>{2, 2, 2, 2, 2});
}

TEST_CASE("is_hom rejects shape mismatches") {
  const FinAlgebra K = kleene_algebra();
  const FinAlgebra C3 = chain_lattice(3, "C3");
  REQUIRE_THROWS_AS(is_hom(Hom{"3", "3", {0, 1}}, K, K), InputError);
  REQUIRE_THROWS_AS(is_hom(Hom{"3", "C3", {0, 1, 2}}, K, C3), InputError);  // signatures differ
  REQUIRE(is_hom(Hom{"3", "3", {0, 1, 2}}, K, K));
  REQUIRE_FALSE(is_hom(Hom{"3", "3", {2, 1, 0}}, K, K));  // reverses order
}

TEST_CASE("one-element subuniverses") {
  REQUIRE(one_element_subuniverses(kleene_algebra()) == std::vector<int>{1});
  REQUIRE(one_element_subuniverses(sugihara_algebra(4)).empty());
  REQUIRE(one_element_subuniverses(sugihara_algebra(3)) == std::vector<int>{1});
  REQUIRE(one_element_subuniverses(sugihara_algebra(5)) == std::vector<int>{2});
  REQUIRE(one_element_subuniverses(chain_lattice(3, "C3")) == std::vector<int>{0, 1, 2});
}

TEST_CASE("maximal subuniverses within an allowed set match brute force") {
  const FinAlgebra K2 = power(kleene_algebra(), 2).algebra;
  auto check = [&](const std::vector<int>& allowed) {
    const auto fast = maximal_subuniverses_within(K2, allowed);
    const auto slow = oracles::maximal_within_bruteforce(K2, allowed);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i].members == slow[i]);
  };
  check({0, 1, 2, 3, 4, 5, 6, 7, 8});
  check({0, 4, 8});
  check({0, 2, 6, 8});
  check({1, 3, 5, 7});
  check({});
  check({4});
}

TEST_CASE("induced algebra re-indexes a closed subset") {
  const FinAlgebra K = kleene_algebra();
  const FinAlgebra S = induced_algebra(K, {0, 2}, "sub");
  REQUIRE(S.size == 2);
  REQUIRE(S.apply1(2, 0) == 1);  // neg swaps the two endpoints
  REQUIRE_THROWS_AS(induced_algebra(K, {0}, "bad"), InputError);
}

TEST_CASE("products and powers") {
  const FinAlgebra K = kleene_algebra();
  const ProductAlgebra P = power(K, 2);
  REQUIRE(P.algebra.size == 9);
  REQUIRE(P.algebra.id == "3^2");
  for (int i = 0; i < 9; ++i) REQUIRE(P.encode(P.decode(i)) == i);
  // componentwise meet: (0,a) meet (a,1) = (0,a)
  const std::vector<int> xa{0, 1}, ab{1, 2};
  const int x = P.encode(xa), y = P.encode(ab);
  REQUIRE(P.algebra.meet(x, y) == P.encode(xa));
  REQUIRE(P.algebra.join(x, y) == P.encode(ab));

  REQUIRE_THROWS_AS(product({K, chain_lattice(2, "C2")}), InputError);
  REQUIRE_THROWS_AS(power(K, 0), InputError);
}

TEST_CASE("free algebra over the Kleene chain") {
  const FreeAlgebra F1 = free_algebra({kleene_algebra()}, 1);
  REQUIRE(F1.algebra.size == 4);
  REQUIRE(F1.generators.size() == 1);
  // the generator, its negation, and the two lattice combinations
  REQUIRE(hom_set(F1.algebra, kleene_algebra()).size() == 3);

  const FreeAlgebra F1b = free_algebra(kleene_setup().sorts, 1);
  REQUIRE(F1b.algebra.size == 4);

  SECTION("resource guard") {
    REQUIRE_THROWS_AS(free_algebra({kleene_algebra()}, 2, 10), ResourceLimit);
  }
  SECTION("empty sort list") {
    REQUIRE_THROWS_AS(free_algebra({}, 1), InputError);
  }
}

TEST_CASE("u_reduct keeps only the lattice structure") {
  const FinAlgebra K = kleene_algebra();
  const FinAlgebra U = u_reduct(K);
  REQUIRE(U.sig.ops.size() == 2);
  REQUIRE(U.size == 3);
  REQUIRE(U.id == "U(3)");
  REQUIRE_NOTHROW(U.validate());
  REQUIRE(U.meet(0, 2) == 0);
}

TEST_CASE("trivial algebra carries every operation as a constant") {
  const FinAlgebra T = trivial_algebra(kleene_algebra().sig, "t");
  REQUIRE(T.size == 1);
  REQUIRE(T.apply2(T.meet_op, 0, 0) == 0);
  REQUIRE(is_closed(T, {0}));
}
