#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "dimer/fukaya.hpp"
#include "helpers.hpp"

using namespace dimer;

namespace {

struct FSetup {
  DimerModel m;
  QuiverData q;
  AInfCategory c;
  MatchingSet ms;
};

FSetup fsetup(const std::string& name) {
  FSetup s;
  s.m = catalog_model(name);
  s.q = dual_quiver(s.m);
  s.c = build_category(s.m, s.q);
  s.ms = enumerate_matchings(s.m);
  return s;
}

int arr(const FSetup& s, const std::string& id) {
  return s.c.arrow_index(s.m.edge_index.at(id));
}

int dual(const FSetup& s, const std::string& id) {
  return s.c.dual_index(s.m.edge_index.at(id));
}

}  // namespace

TEST_CASE("twisted boundary orbits and genus of the catalog models") {
  struct Expected {
    const char* name;
    int orbits, euler, genus;
  };
  for (Expected e : {Expected{"g0", 3, 2, 0}, Expected{"g0div", 3, 2, 0},
                     Expected{"p2", 3, 0, 1}, Expected{"p2div", 3, 0, 1},
                     Expected{"f0", 4, 0, 1}}) {
    INFO(e.name);
    DimerModel m = catalog_model(e.name);
    RibbonSurface s = build_surface(m);
    CHECK(static_cast<int>(s.orbits.size()) == e.orbits);
    CHECK(s.euler == e.euler);
    CHECK(s.genus == e.genus);

    // The orbits partition the darts.
    std::vector<int> hits(2 * m.edge_count(), 0);
    for (const auto& orbit : s.orbits) {
      for (DartId d : orbit) ++hits[d];
    }
    CHECK(std::count(hits.begin(), hits.end(), 1) ==
          static_cast<long>(hits.size()));
  }
}

TEST_CASE("twisted orbits of the one-face model pair opposite darts") {
  DimerModel m = catalog_model("g0");
  RibbonSurface s = build_surface(m);
  REQUIRE(s.orbits.size() == 3);
  CHECK(s.orbits[0] == std::vector<DartId>{0, 3});
  CHECK(s.orbits[1] == std::vector<DartId>{1, 4});
  CHECK(s.orbits[2] == std::vector<DartId>{2, 5});
}

TEST_CASE("vanishing cycles and intersection counts") {
  auto g0 = fsetup("g0");
  VanishingCycles vc = vanishing_cycles(g0.m, g0.q);
  REQUIRE(vc.cycles.size() == 1);
  CHECK(vc.cycles[0].size() == 6);  // each loop edge is visited twice
  CHECK(vc.self_count[0] == 3);
  CHECK(intersection_count(vc, g0.q, 0, 0) == 3);

  auto p2 = fsetup("p2");
  VanishingCycles pc = vanishing_cycles(p2.m, p2.q);
  REQUIRE(pc.cycles.size() == 3);
  for (int v = 0; v < 3; ++v) {
    CHECK(pc.cycles[v].size() == 6);
    CHECK(pc.self_count[v] == 0);
  }
  CHECK(intersection_count(pc, p2.q, 0, 1) == 3);
  CHECK(intersection_count(pc, p2.q, 0, 2) == 3);
  CHECK(intersection_count(pc, p2.q, 1, 2) == 3);

  auto f0 = fsetup("f0");
  VanishingCycles fc = vanishing_cycles(f0.m, f0.q);
  CHECK(intersection_count(fc, f0.q, 0, 1) == 2);
  CHECK(intersection_count(fc, f0.q, 0, 2) == 2);
  CHECK(intersection_count(fc, f0.q, 2, 3) == 2);
  CHECK(intersection_count(fc, f0.q, 1, 3) == 2);
  CHECK(intersection_count(fc, f0.q, 0, 3) == 0);
  CHECK(intersection_count(fc, f0.q, 1, 2) == 0);
}

TEST_CASE("total intersection count equals the edge count") {
  for (const char* name : {"g0", "g0div", "p2", "p2div", "f0"}) {
    INFO(name);
    auto s = fsetup(name);
    VanishingCycles vc = vanishing_cycles(s.m, s.q);
    int total = 0;
    for (int v = 0; v < s.q.faces.face_count(); ++v) {
      for (int w = v; w < s.q.faces.face_count(); ++w) {
        total += intersection_count(vc, s.q, v, w);
      }
    }
    CHECK(total == s.m.edge_count());
  }
}

TEST_CASE("self-crossings, loops, and missing internal matchings coincide") {
  for (const char* name : {"g0", "g0div", "p2", "p2div", "f0"}) {
    INFO(name);
    auto s = fsetup(name);
    VanishingCycles vc = vanishing_cycles(s.m, s.q);
    bool self_crossing = false;
    for (int c : vc.self_count) {
      if (c > 0) self_crossing = true;
    }
    bool loops = false;
    for (const Arrow& a : s.q.arrows) {
      if (a.src == a.tgt) loops = true;
    }
    bool has_internal = false;
    for (const auto& d : s.ms.matchings) {
      if (is_internal(s.q, d)) has_internal = true;
    }
    CHECK(self_crossing == loops);
    CHECK(loops == !has_internal);
  }
}

TEST_CASE("graded intersection points of the z family") {
  auto s = fsetup("p2");
  std::vector<int> dz = s.ms.matchings[5];
  std::vector<int> order = order_from_matching(s.q, dz);
  MaslovData md = assign_maslov(s.m, s.q, dz, order);

  int index1 = 0, index2 = 0;
  for (const auto& p : md.points) {
    if (p.maslov == 1) ++index1;
    if (p.maslov == 2) ++index2;
  }
  CHECK(index1 == 6);
  CHECK(index2 == 3);
  CHECK(md.degree_check.ok());

  // x0 runs between the cycles at faces 1 and 0; face 0 is later in the
  // order [1, 0, 2].  The matched z0 runs between faces 2 and 1.
  const GradedIntersection& px = md.points[s.m.edge_index.at("x0")];
  CHECK(px.maslov == 1);
  CHECK(px.cycle_high == 0);
  CHECK(px.cycle_low == 1);
  const GradedIntersection& pz = md.points[s.m.edge_index.at("z0")];
  CHECK(pz.maslov == 2);
  CHECK(pz.cycle_high == 2);
  CHECK(pz.cycle_low == 1);

  CHECK_THROWS_AS(assign_maslov(s.m, s.q, s.ms.matchings[1], order),
                  std::invalid_argument);
}

TEST_CASE("the degree count fails everywhere for the flat assignment") {
  auto s = fsetup("p2");
  std::vector<int> dz = s.ms.matchings[5];
  std::vector<int> mu(s.m.edge_count(), 1);
  VerificationReport rep = check_maslov_degrees(s.m, dz, mu);
  CHECK(static_cast<int>(rep.violations.size()) == s.m.node_count());
}

TEST_CASE("surface and algebra sides agree on every internal matching") {
  for (const char* name : {"p2", "p2div", "f0"}) {
    INFO(name);
    auto s = fsetup(name);
    for (const auto& matching : s.ms.matchings) {
      if (!is_internal(s.q, matching)) continue;
      std::vector<int> order = order_from_matching(s.q, matching);
      DirectedCategory alg = directed_subcategory(s.c, order);
      DirectedCategory fuk =
          build_directed_fukaya(s.m, s.q, s.c, matching, order);
      ComparisonReport cmp = compare_categories(s.c, alg, fuk);
      CHECK(cmp.ok());
      // The surface-side table independently satisfies the quadratic
      // relations and degree balance.
      CHECK(verify_ainf_relations(s.c, 0, &fuk.ops, &fuk.survives).ok());
      CHECK(check_degree_balance(s.c, &fuk.ops).ok());
    }
  }
}

TEST_CASE("the subdivided family merges its divalent contributions") {
  auto s = fsetup("p2div");
  std::vector<int> dp = s.ms.matchings[5];  // z0a, z0c, z1, z2
  std::vector<int> order = order_from_matching(s.q, dp);
  DirectedCategory fuk = build_directed_fukaya(s.m, s.q, s.c, dp, order);
  CHECK(fuk.ops.at({arr(s, "z0b")}) ==
        std::map<int, int>{{dual(s, "z0a"), 1}, {dual(s, "z0c"), -1}});
}

TEST_CASE("a sign flip at one black node is localized by the comparison") {
  auto s = fsetup("p2");
  std::vector<int> dz = s.ms.matchings[5];
  std::vector<int> order = order_from_matching(s.q, dz);
  DirectedCategory alg = directed_subcategory(s.c, order);

  int b0 = s.m.node_index.at("b0");
  DirectedCategory fuk =
      build_directed_fukaya(s.m, s.q, s.c, dz, order, b0);
  ComparisonReport cmp = compare_categories(s.c, alg, fuk);
  REQUIRE(cmp.mismatches.size() == 1);
  // b0 carries the matched edge z2 and the unmatched x0, y1.
  CHECK(cmp.mismatches[0].find("[y1]") != std::string::npos);
  CHECK(cmp.mismatches[0].find("z2^") != std::string::npos);

  auto f = fsetup("f0");
  std::vector<int> da = f.ms.matchings[0];
  std::vector<int> forder = order_from_matching(f.q, da);
  DirectedCategory falg = directed_subcategory(f.c, forder);
  DirectedCategory ffuk = build_directed_fukaya(
      f.m, f.q, f.c, da, forder, f.m.node_index.at("bA"));
  CHECK(compare_categories(f.c, falg, ffuk).mismatches.size() == 1);
}

TEST_CASE("comparing categories over different orders is rejected") {
  auto s = fsetup("p2");
  std::vector<int> dz = s.ms.matchings[5];
  std::vector<int> dx = s.ms.matchings[0];
  DirectedCategory a =
      directed_subcategory(s.c, order_from_matching(s.q, dz));
  DirectedCategory b =
      directed_subcategory(s.c, order_from_matching(s.q, dx));
  CHECK_THROWS_AS(compare_categories(s.c, a, b), std::invalid_argument);
}
