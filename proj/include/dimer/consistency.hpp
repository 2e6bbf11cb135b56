#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimer/matchings.hpp"
#include "dimer/model.hpp"
#include "dimer/zigzag.hpp"

namespace dimer {

// The three-part gate a model must pass for its quiver algebra to behave:
//  (a) every edge lies in some perfect matching,
//  (b) no zigzag path is null-homologous,
//  (c) no zigzag path traverses an edge twice.
struct ConsistencyReport {
  bool nondegenerate = true;
  std::vector<std::string> unmatchable;  // edge ids violating (a)

  bool no_null_zigzag = true;
  std::vector<int> null_zigzags;  // zigzag indices violating (b)

  bool no_repeated_edge = true;
  std::vector<std::pair<int, std::string>> repeated;  // (zigzag, edge id) for (c)

  bool consistent() const {
    return nondegenerate && no_null_zigzag && no_repeated_edge;
  }
  std::string verdict() const {
    return consistent() ? "zigzag-consistent" : "not-zigzag-consistent";
  }
};

inline ConsistencyReport check_consistency(const DimerModel& m,
                                           const MatchingSet& ms,
                                           const ZigzagData& zd) {
  ConsistencyReport r;
  for (int e : unmatchable_edges(m, ms)) {
    r.unmatchable.push_back(m.edges[e].id);
  }
  r.nondegenerate = r.unmatchable.empty();

  for (int z = 0; z < zd.path_count(); ++z) {
    if (zd.classes[z] == std::pair{0, 0}) {
      r.null_zigzags.push_back(z);
    }
    std::map<int, int> edge_count;
    for (DartId d : zd.paths[z]) ++edge_count[dart_edge(d)];
    for (const auto& [e, k] : edge_count) {
      if (k > 1) r.repeated.emplace_back(z, m.edges[e].id);
    }
  }
  r.no_null_zigzag = r.null_zigzags.empty();
  r.no_repeated_edge = r.repeated.empty();
  return r;
}

inline ConsistencyReport check_consistency(const DimerModel& m) {
  return check_consistency(m, enumerate_matchings(m), trace_zigzags(m));
}

}  // namespace dimer
