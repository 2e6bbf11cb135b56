#pragma once

#include <string>
#include <vector>

#include "dimer/model.hpp"

namespace dimer {

// Headline statistics stored alongside each entry; the catalog command
// recomputes them and reports any drift.
struct CatalogStats {
  int black = 0;
  int white = 0;
  int edges = 0;
  int faces = 0;
  int matchings = 0;
  int internal = 0;

  bool operator==(const CatalogStats&) const = default;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  CatalogStats expected;
  std::string text;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"g0",
       "one black and one white node joined by three edges; a single hexagonal face",
       {1, 1, 3, 1, 3, 0},
       R"(dimer v1
node b black
node w white
edge e1 b w 0 0
edge e2 b w 1 0
edge e3 b w 0 1
rot b e1 e3 e2
rot w e1 e3 e2
)"},
      {"g0div",
       "the three-edge model with one edge subdivided through a divalent node pair",
       {2, 2, 5, 1, 3, 0},
       R"(dimer v1
node b black
node w white
node w2 white
node b2 black
edge e1 b w 0 0
edge e2 b w 1 0
edge e3 b w2 0 1
edge e4 b2 w2 0 0
edge e5 b2 w 0 0
rot b e1 e3 e2
rot w e1 e5 e2
rot w2 e3 e4
rot b2 e4 e5
)"},
      {"p2",
       "three black and three white nodes, nine edges, three hexagonal faces",
       {3, 3, 9, 3, 6, 3},
       R"(dimer v1
node w0 white
node w1 white
node w2 white
node b0 black
node b1 black
node b2 black
edge x0 b0 w0 0 0
edge x1 b1 w1 0 0
edge x2 b2 w2 0 0
edge y0 b2 w0 0 0
edge y1 b0 w1 0 0
edge y2 b1 w2 0 0
edge z0 b1 w0 -1 -1
edge z1 b2 w1 1 0
edge z2 b0 w2 0 1
rot w0 x0 z0 y0
rot w1 x1 z1 y1
rot w2 x2 z2 y2
rot b0 x0 y1 z2
rot b1 x1 y2 z0
rot b2 x2 y0 z1
)"},
      {"p2div",
       "the nine-edge model with one edge subdivided through a divalent node pair",
       {4, 4, 11, 3, 6, 3},
       R"(dimer v1
node w0 white
node w1 white
node w2 white
node w3 white
node b0 black
node b1 black
node b2 black
node b3 black
edge x0 b0 w0 0 0
edge x1 b1 w1 0 0
edge x2 b2 w2 0 0
edge y0 b2 w0 0 0
edge y1 b0 w1 0 0
edge y2 b1 w2 0 0
edge z0a b1 w3 -1 -1
edge z0b b3 w3 0 0
edge z0c b3 w0 0 0
edge z1 b2 w1 1 0
edge z2 b0 w2 0 1
rot w0 x0 z0c y0
rot w1 x1 z1 y1
rot w2 x2 z2 y2
rot w3 z0a z0b
rot b0 x0 y1 z2
rot b1 x1 y2 z0a
rot b2 x2 y0 z1
rot b3 z0b z0c
)"},
      {"f0",
       "two black and two white nodes, eight edges, four square faces",
       {2, 2, 8, 4, 8, 4},
       R"(dimer v1
node w0 white
node w1 white
node bA black
node bB black
edge a0 bA w0 0 0
edge a1 bB w1 0 0
edge b0 bB w0 0 1
edge b1 bA w1 0 -1
edge c0 bA w0 1 0
edge c1 bB w1 -1 0
edge d0 bB w0 0 0
edge d1 bA w1 0 0
rot w0 a0 d0 c0 b0
rot w1 a1 d1 c1 b1
rot bA a0 b1 c0 d1
rot bB a1 b0 c1 d0
)"},
  };
  return entries;
}

inline const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace dimer
