#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "pigdual/families.hpp"
#include "pigdual/piggyback.hpp"

using namespace pigdual;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

const Pairs kRelMM = {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}};
const Pairs kRelMP = {{0, 0}, {2, 2}};
const Pairs kRelPM = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
const Pairs kRelPP = {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}};

}  // namespace

TEST_CASE("piggyback relations over the Kleene chain are the frozen four") {
  const FamilySetup setup = kleene_setup();
  const Carrier& wm = setup.carriers.per_sort[0][0];
  const Carrier& wp = setup.carriers.per_sort[1][0];
  const FinAlgebra& M = setup.sorts[0];
  const FinAlgebra& P = setup.sorts[1];

  auto single = [](std::vector<PigRelation> rs) {
    REQUIRE(rs.size() == 1);
    return rs[0].pairs;
  };
  REQUIRE(single(piggyback_relations(M, M, wm, wm)) == kRelMM);
  REQUIRE(single(piggyback_relations(M, P, wm, wp)) == kRelMP);
  REQUIRE(single(piggyback_relations(P, M, wp, wm)) == kRelPM);
  REQUIRE(single(piggyback_relations(P, P, wp, wp)) == kRelPP);
}

TEST_CASE("piggyback relations agree with the brute-force maximal search") {
  const FamilySetup setup = kleene_setup();
  const FinAlgebra& M = setup.sorts[0];
  const Carrier& wm = setup.carriers.per_sort[0][0];
  const Carrier& wp = setup.carriers.per_sort[1][0];

  for (const auto* w : {&wm, &wp}) {
    for (const auto* w2 : {&wm, &wp}) {
      const ProductAlgebra P2 = product({M, M});
      std::vector<int> allowed;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (w->bits[static_cast<size_t>(a)] <= w2->bits[static_cast<size_t>(b)])
            allowed.push_back(a * 3 + b);
      const auto slow = oracles::maximal_within_bruteforce(P2.algebra, allowed);
      const auto fast = piggyback_relations(M, M, *w, *w2);
      REQUIRE(fast.size() == slow.size());
      for (size_t i = 0; i < fast.size(); ++i) {
        Pairs decoded;
        for (int m : slow[i]) decoded.emplace_back(m / 3, m % 3);
        REQUIRE(fast[i].pairs == decoded);
      }
    }
  }
}

TEST_CASE("separation holds for the Kleene setup and fails for one sort alone") {
  const FamilySetup setup = kleene_setup();
  REQUIRE_FALSE(check_sep(setup.sorts, setup.G, setup.carriers).has_value());

  const std::vector<FinAlgebra> one = {setup.sorts[0]};
  const CarrierAssignment omega{{setup.carriers.per_sort[0]}};
  const auto w = check_sep(one, all_inter_sort_homs(one), omega);
  REQUIRE(w.has_value());
  REQUIRE(w->sort_id == "3-");
  REQUIRE(w->a == 1);
  REQUIRE(w->b == 2);
}

TEST_CASE("pointedness witnesses for the Kleene setup") {
  const FamilySetup setup = kleene_setup();
  const Pointing p = check_pointed(setup.sorts, setup.carriers);
  REQUIRE(p.s1.has_value());
  REQUIRE(p.s1->sort_id == "3-");
  REQUIRE(p.s1->element == 1);
  REQUIRE(p.s1->carrier == 0);
  REQUIRE(p.s0.has_value());
  REQUIRE(p.s0->sort_id == "3+");
  REQUIRE(p.s0->element == 1);
  REQUIRE(p.s0->carrier == 0);
}

TEST_CASE("all_inter_sort_homs covers every ordered pair of sorts") {
  const FamilySetup setup = kleene_setup();
  const auto homs = all_inter_sort_homs(setup.sorts);
  REQUIRE(homs.size() == 8);  // 2 homs for each of the 4 ordered sort pairs
  REQUIRE(homs[0].dom_id == "3-");
  REQUIRE(homs[0].cod_id == "3-");
  REQUIRE(homs.back().dom_id == "3+");
  REQUIRE(homs.back().cod_id == "3+");
}

TEST_CASE("build_alter_ego certifies and assembles the Kleene ego") {
  const FamilySetup setup = kleene_setup();
  const AlterEgo ego = build_alter_ego(setup.sorts, setup.G, setup.carriers);
  REQUIRE(ego.sorts.size() == 2);
  REQUIRE(ego.G.size() == 2);
  REQUIRE(ego.R.size() == 4);
  REQUIRE(ego.R[0].dom_sort == "3-");
  REQUIRE(ego.R[0].cod_sort == "3-");
  REQUIRE(ego.R[0].pairs == kRelMM);
  REQUIRE(ego.R[1].pairs == kRelMP);
  REQUIRE(ego.R[2].pairs == kRelPM);
  REQUIRE(ego.R[3].pairs == kRelPP);
  REQUIRE(ego.S == std::vector<SingletonRel>{{"3-", 1}, {"3+", 1}});
  REQUIRE(ego.R[2].contains(1, 2));
  REQUIRE_FALSE(ego.R[2].contains(0, 2));
  REQUIRE(ego.sort_index("3+") == 1);
  REQUIRE_THROWS_AS(ego.sort_index("absent"), InputError);
}

TEST_CASE("build_alter_ego reports the broken hypothesis") {
  const FamilySetup setup = kleene_setup();

  SECTION("separation failure") {
    const std::vector<FinAlgebra> one = {setup.sorts[0]};
    const CarrierAssignment omega{{setup.carriers.per_sort[0]}};
    REQUIRE_THROWS_AS(build_alter_ego(one, std::nullopt, omega), SepFailed);
  }
  SECTION("missing constant-0 witness") {
    const FinAlgebra t = trivial_algebra(setup.sorts[0].sig, "t");
    const CarrierAssignment omega{{{Carrier{"t", {1}}}}};
    REQUIRE_THROWS_AS(build_alter_ego({t}, std::nullopt, omega), MissingS0);
  }
  SECTION("missing constant-1 witness") {
    const FinAlgebra t = trivial_algebra(setup.sorts[0].sig, "t");
    const CarrierAssignment omega{{{Carrier{"t", {0}}}}};
    REQUIRE_THROWS_AS(build_alter_ego({t}, std::nullopt, omega), MissingS1);
  }
}

TEST_CASE("add_trivial_sorts repairs pointedness exactly once") {
  const FamilySetup setup = kleene_setup();
  auto [sorts1, omega1] = add_trivial_sorts(setup.sorts, setup.carriers);
  REQUIRE(sorts1.size() == 4);
  REQUIRE(sorts1[2].id == "triv1");
  REQUIRE(sorts1[3].id == "triv0");
  REQUIRE(omega1.per_sort[2][0].bits == std::vector<int>{1});
  REQUIRE(omega1.per_sort[3][0].bits == std::vector<int>{0});

  auto [sorts2, omega2] = add_trivial_sorts(sorts1, omega1);
  REQUIRE(sorts2.size() == 4);  // both constants already present

  SECTION("name clash gets a fresh id") {
    FinAlgebra clash = setup.sorts[0];
    clash.id = "triv1";
    CarrierAssignment omega{{setup.carriers.per_sort[0]}};
    omega.per_sort[0][0].source_id = "triv1";
    auto [sorts3, omega3] = add_trivial_sorts({clash}, omega);
    REQUIRE(sorts3.size() == 3);
    REQUIRE(sorts3[1].id == "triv1_");
    REQUIRE(sorts3[2].id == "triv0");
  }
}

TEST_CASE("compose_carrier pulls a carrier back along a hom") {
  const FamilySetup setup = kleene_setup();
  const Carrier& wp = setup.carriers.per_sort[1][0];   // (0,0,1) over 3+
  const Carrier pulled = compose_carrier(wp, setup.G[0]);  // along 3- -> 3+ identity
  REQUIRE(pulled.source_id == "3-");
  REQUIRE(pulled.bits == std::vector<int>{0, 0, 1});

  const Carrier squashed = compose_carrier(wp, Hom{"3-", "3+", {1, 1, 1}});
  REQUIRE(squashed.bits == std::vector<int>{0, 0, 0});
}

TEST_CASE("sort and carrier validation rejects malformed input") {
  const FamilySetup setup = kleene_setup();

  SECTION("no sorts") {
    REQUIRE_THROWS_AS(validate_sorts_and_carriers({}, CarrierAssignment{}), InputError);
  }
  SECTION("carrier list count mismatch") {
    REQUIRE_THROWS_AS(
        validate_sorts_and_carriers(setup.sorts, CarrierAssignment{{setup.carriers.per_sort[0]}}),
        InputError);
  }
  SECTION("duplicate sort ids") {
    auto sorts = setup.sorts;
    sorts[1].id = "3-";
    auto omega = setup.carriers;
    omega.per_sort[1][0].source_id = "3-";
    REQUIRE_THROWS_AS(validate_sorts_and_carriers(sorts, omega), InputError);
  }
  SECTION("carrier is not a lattice hom") {
    auto omega = setup.carriers;
    omega.per_sort[0][0].bits = {1, 0, 1};
    REQUIRE_THROWS_AS(validate_sorts_and_carriers(setup.sorts, omega), InputError);
  }
  SECTION("signature mismatch across sorts") {
    std::vector<FinAlgebra> sorts = {setup.sorts[0], chain_lattice(2, "C2")};
    CarrierAssignment omega{{setup.carriers.per_sort[0], {Carrier{"C2", {0, 1}}}}};
    REQUIRE_THROWS_AS(validate_sorts_and_carriers(sorts, omega), InputError);
  }
}
