#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dimer/consistency.hpp"
#include "dimer/faces.hpp"
#include "dimer/zigzag.hpp"
#include "helpers.hpp"

using namespace dimer;

static std::multiset<std::pair<int, int>> class_multiset(const ZigzagData& zd) {
  return {zd.classes.begin(), zd.classes.end()};
}

TEST_CASE("zigzag orbits of the three-edge model") {
  DimerModel m = catalog_model("g0");
  ZigzagData zd = trace_zigzags(m);
  REQUIRE(zd.path_count() == 3);
  for (const auto& p : zd.paths) CHECK(p.size() == 2);
  CHECK(class_multiset(zd) ==
        std::multiset<std::pair<int, int>>{{0, -1}, {1, 0}, {-1, 1}});

  std::set<DartId> first(zd.paths[0].begin(), zd.paths[0].end());
  CHECK(first == std::set<DartId>{dart_by_name(m, "e1", true),
                                  dart_by_name(m, "e3", false)});
}

TEST_CASE("zigzag orbits across the catalog") {
  struct Expected {
    const char* name;
    std::multiset<std::pair<int, int>> classes;
  };
  for (const Expected& want :
       {Expected{"g0", {{0, -1}, {1, 0}, {-1, 1}}},
        Expected{"g0div", {{0, -1}, {1, 0}, {-1, 1}}},
        Expected{"p2", {{2, 1}, {-1, 1}, {-1, -2}}},
        Expected{"p2div", {{2, 1}, {-1, 1}, {-1, -2}}},
        Expected{"f0", {{-1, 1}, {1, -1}, {1, 1}, {-1, -1}}}}) {
    DimerModel m = catalog_model(want.name);
    ZigzagData zd = trace_zigzags(m);
    INFO("model " << want.name);
    CHECK(class_multiset(zd) == want.classes);

    // Orbits partition the darts.
    std::size_t total = 0;
    for (const auto& p : zd.paths) total += p.size();
    CHECK(total == 2 * static_cast<std::size_t>(m.edge_count()));
    for (int z : zd.zigzag_of) CHECK(z >= 0);

    // Classes sum to zero.
    std::pair<int, int> sum{0, 0};
    for (auto [x, y] : zd.classes) {
      sum.first += x;
      sum.second += y;
    }
    CHECK(sum == std::pair{0, 0});

    // Zigzag paths really are closed walks, so the class recomputes.
    for (int z = 0; z < zd.path_count(); ++z) {
      CHECK(homology_class(m, zd.paths[z]) == zd.classes[z]);
    }
  }
}

TEST_CASE("the catalog models are zigzag-consistent") {
  for (const CatalogEntry& entry : catalog()) {
    INFO("model " << entry.name);
    ConsistencyReport r = check_consistency(parse(entry.text));
    CHECK(r.consistent());
    CHECK(r.verdict() == "zigzag-consistent");
  }
}

TEST_CASE("a null-homologous zigzag is detected with a witness") {
  DimerModel m = parse(read_fixture("bad_digon.dimer"));
  REQUIRE(validate(m).empty());
  ConsistencyReport r = check_consistency(m);
  CHECK_FALSE(r.consistent());
  CHECK(r.verdict() == "not-zigzag-consistent");
  CHECK(r.nondegenerate);
  CHECK(r.no_repeated_edge);
  REQUIRE(r.null_zigzags.size() == 1);

  ZigzagData zd = trace_zigzags(m);
  const auto& path = zd.paths[r.null_zigzags[0]];
  std::set<int> edges;
  for (DartId d : path) edges.insert(dart_edge(d));
  CHECK(edges == std::set<int>{m.edge_index.at("e2"), m.edge_index.at("e3"),
                               m.edge_index.at("e4"), m.edge_index.at("e5")});
}

TEST_CASE("an edge in no matching is detected with a witness") {
  // w2 can only pair with b1, so f1 can never be used.
  std::string text = R"(dimer v1
node b1 black
node b2 black
node w1 white
node w2 white
edge f1 b1 w1 0 0
edge f2 b1 w2 1 0
edge f2x b1 w2 0 1
edge f3 b2 w1 0 0
edge f3x b2 w1 1 0
rot b1 f1 f2 f2x
rot b2 f3 f3x
rot w1 f1 f3 f3x
rot w2 f2 f2x
)";
  DimerModel m = parse(text);
  MatchingSet ms = enumerate_matchings(m);
  CHECK(ms.count() == 4);
  ConsistencyReport r = check_consistency(m);
  CHECK_FALSE(r.nondegenerate);
  CHECK(r.unmatchable == std::vector<std::string>{"f1"});
  CHECK_FALSE(r.consistent());
}
