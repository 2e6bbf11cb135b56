#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dimer/quiver.hpp"
#include "helpers.hpp"

using namespace dimer;

static std::vector<int> edges_by_name(const DimerModel& m,
                                      std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(m.edge_index.at(n));
  return out;
}

TEST_CASE("dual quiver of the three-edge model is three loops on one vertex") {
  DimerModel m = catalog_model("g0");
  QuiverData q = dual_quiver(m);
  REQUIRE(q.vertex_count == 1);
  REQUIRE(q.arrows.size() == 3);
  for (const Arrow& a : q.arrows) {
    CHECK(a.src == 0);
    CHECK(a.tgt == 0);
  }
  CHECK(q.node_cycle[m.node_index.at("w")] == edges_by_name(m, {"e1", "e2", "e3"}));
  CHECK(q.node_cycle[m.node_index.at("b")] == edges_by_name(m, {"e1", "e3", "e2"}));
}

TEST_CASE("dual quiver of the nine-edge model") {
  DimerModel m = catalog_model("p2");
  QuiverData q = dual_quiver(m);
  REQUIRE(q.vertex_count == 3);
  // All three x arrows are parallel, as are the y and z families.
  int fx_src = q.arrows[m.edge_index.at("x0")].src;
  int fx_tgt = q.arrows[m.edge_index.at("x0")].tgt;
  CHECK(fx_src != fx_tgt);
  for (const char* name : {"x1", "x2"}) {
    CHECK(q.arrows[m.edge_index.at(name)].src == fx_src);
    CHECK(q.arrows[m.edge_index.at(name)].tgt == fx_tgt);
  }
  int fy_src = q.arrows[m.edge_index.at("y0")].src;
  int fy_tgt = q.arrows[m.edge_index.at("y0")].tgt;
  int fz_src = q.arrows[m.edge_index.at("z0")].src;
  int fz_tgt = q.arrows[m.edge_index.at("z0")].tgt;
  // x, y, z compose to a 3-cycle through all three vertices.
  CHECK(fy_src == fx_tgt);
  CHECK(fz_src == fy_tgt);
  CHECK(fz_tgt == fx_src);
  CHECK(std::set<int>({fx_src, fy_src, fz_src}) == std::set<int>({0, 1, 2}));

  CHECK(q.node_cycle[m.node_index.at("w0")] == edges_by_name(m, {"x0", "y0", "z0"}));
  CHECK(q.node_cycle[m.node_index.at("b0")] == edges_by_name(m, {"x0", "y1", "z2"}));
}

TEST_CASE("node cycles are composable closed cycles visiting each edge once") {
  for (const CatalogEntry& entry : catalog()) {
    DimerModel m = parse(entry.text);
    QuiverData q = dual_quiver(m);
    INFO("model " << entry.name);
    std::vector<int> white_hits(m.edge_count(), 0), black_hits(m.edge_count(), 0);
    for (int n = 0; n < m.node_count(); ++n) {
      const std::vector<int>& cyc = q.node_cycle[n];
      REQUIRE_FALSE(cyc.empty());
      CHECK(path_composable(q, cyc));
      CHECK(path_source(q, cyc) == path_target(q, cyc));
      for (int e : cyc) {
        ++(m.nodes[n].color == NodeColor::White ? white_hits : black_hits)[e];
      }
    }
    for (int e = 0; e < m.edge_count(); ++e) {
      CHECK(white_hits[e] == 1);
      CHECK(black_hits[e] == 1);
    }
  }
}

TEST_CASE("potential lists white cycles positively and black cycles negatively") {
  DimerModel m = catalog_model("g0");
  QuiverData q = dual_quiver(m);
  Potential p = build_potential(m, q);
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms[0].coeff == 1);
  CHECK(p.terms[0].arrows == edges_by_name(m, {"e1", "e2", "e3"}));
  CHECK(p.terms[1].coeff == -1);
  CHECK(p.terms[1].arrows == edges_by_name(m, {"e1", "e3", "e2"}));

  DimerModel p2 = catalog_model("p2");
  QuiverData q2 = dual_quiver(p2);
  Potential pot2 = build_potential(p2, q2);
  REQUIRE(pot2.terms.size() == 6);
  for (int i = 0; i < 3; ++i) CHECK(pot2.terms[i].coeff == 1);
  for (int i = 3; i < 6; ++i) CHECK(pot2.terms[i].coeff == -1);
  CHECK(pot2.terms[0].arrows == edges_by_name(p2, {"x0", "y0", "z0"}));
  CHECK(pot2.terms[3].arrows == edges_by_name(p2, {"x0", "y1", "z2"}));
}

TEST_CASE("cyclic derivative collects one complement per occurrence") {
  // Cycle stored first-applied first: [a, b, a, c] with a = 0, b = 1, c = 2.
  std::vector<int> cycle = {0, 1, 0, 2};
  auto d = cyclic_derivative(cycle, 0);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == std::vector<int>{1, 0, 2});
  CHECK(d[1] == std::vector<int>{2, 0, 1});
  CHECK(cyclic_derivative(cycle, 1) ==
        std::vector<std::vector<int>>{{0, 2, 0}});
  CHECK(cyclic_derivative(cycle, 7).empty());

  // The multiset of complements does not depend on the chosen rotation.
  std::vector<int> rotated = {1, 0, 2, 0};
  auto dr = cyclic_derivative(rotated, 0);
  std::multiset<std::vector<int>> got(dr.begin(), dr.end());
  CHECK(got == std::multiset<std::vector<int>>{{1, 0, 2}, {2, 0, 1}});
}

TEST_CASE("relations pair the two complements of each arrow") {
  DimerModel m = catalog_model("g0");
  QuiverData q = dual_quiver(m);
  std::vector<Relation> rels = build_relations(m, q);
  REQUIRE(rels.size() == 3);
  CHECK(rels[m.edge_index.at("e1")].white_path == edges_by_name(m, {"e2", "e3"}));
  CHECK(rels[m.edge_index.at("e1")].black_path == edges_by_name(m, {"e3", "e2"}));
  CHECK(rels[m.edge_index.at("e2")].white_path == edges_by_name(m, {"e3", "e1"}));
  CHECK(rels[m.edge_index.at("e2")].black_path == edges_by_name(m, {"e1", "e3"}));

  for (const CatalogEntry& entry : catalog()) {
    DimerModel cm = parse(entry.text);
    QuiverData cq = dual_quiver(cm);
    INFO("model " << entry.name);
    for (const Relation& r : build_relations(cm, cq)) {
      // Both sides run from the arrow's target back to its source.
      CHECK(path_composable(cq, r.white_path));
      CHECK(path_composable(cq, r.black_path));
      CHECK(path_source(cq, r.white_path) == cq.arrows[r.arrow].tgt);
      CHECK(path_target(cq, r.white_path) == cq.arrows[r.arrow].src);
      CHECK(path_source(cq, r.black_path) == cq.arrows[r.arrow].tgt);
      CHECK(path_target(cq, r.black_path) == cq.arrows[r.arrow].src);
    }
  }

  // Divalent nodes give single-arrow relation sides.
  DimerModel gd = catalog_model("g0div");
  QuiverData qd = dual_quiver(gd);
  std::vector<Relation> rd = build_relations(gd, qd);
  CHECK(rd[gd.edge_index.at("e4")].white_path == edges_by_name(gd, {"e3"}));
  CHECK(rd[gd.edge_index.at("e4")].black_path == edges_by_name(gd, {"e5"}));
}

TEST_CASE("canonical cycle rotation is least under name rank") {
  DimerModel m = catalog_model("g0");
  QuiverData q = dual_quiver(m);
  std::vector<int> rotated = edges_by_name(m, {"e3", "e1", "e2"});
  CHECK(canonical_cycle(q, rotated) == edges_by_name(m, {"e1", "e2", "e3"}));
  std::vector<int> single = edges_by_name(m, {"e2"});
  CHECK(canonical_cycle(q, single) == single);
}
