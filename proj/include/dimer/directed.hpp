#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "dimer/matchings.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

namespace detail {

// Kahn traversal of the arrows outside the matching, preferring the smallest
// available face id.  Returns the visit order, or an empty vector when the
// complement contains a directed cycle.
inline std::vector<int> complement_topo_order(const QuiverData& q,
                                              const std::vector<int>& matching) {
  std::vector<char> dropped(q.arrows.size(), 0);
  for (int e : matching) dropped[e] = 1;
  std::vector<int> indegree(q.vertex_count, 0);
  for (size_t e = 0; e < q.arrows.size(); ++e) {
    if (!dropped[e]) ++indegree[q.arrows[e].tgt];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < q.vertex_count; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (size_t e = 0; e < q.arrows.size(); ++e) {
      if (dropped[e] || q.arrows[e].src != v) continue;
      if (--indegree[q.arrows[e].tgt] == 0) ready.push(q.arrows[e].tgt);
    }
  }
  if (static_cast<int>(order.size()) != q.vertex_count) order.clear();
  return order;
}

}  // namespace detail

// A matching is internal when deleting its arrows leaves an acyclic quiver.
inline bool is_internal(const QuiverData& q, const std::vector<int>& matching) {
  return !detail::complement_topo_order(q, matching).empty();
}

// Total order on faces certifying internality: every arrow outside the
// matching ascends, every matching arrow descends.
inline std::vector<int> order_from_matching(const QuiverData& q,
                                            const std::vector<int>& matching) {
  std::vector<int> order = detail::complement_topo_order(q, matching);
  if (order.empty()) {
    throw std::invalid_argument(
        "matching is not internal: complement quiver has a directed cycle");
  }
  return order;
}

struct DirectedQuiver {
  std::vector<int> matching;         // deleted arrows, ascending edge indices
  std::vector<int> order;            // faces in ascending position
  std::vector<int> rank;             // rank[face] = position in order
  std::vector<int> arrows;           // surviving arrows, ascending edge indices
  std::vector<Relation> relations;   // one per deleted arrow
};

inline DirectedQuiver directed_quiver(const QuiverData& q,
                                      const std::vector<Relation>& rels,
                                      const std::vector<int>& matching) {
  DirectedQuiver d;
  d.matching = matching;
  std::sort(d.matching.begin(), d.matching.end());
  d.order = order_from_matching(q, d.matching);
  d.rank.assign(q.vertex_count, -1);
  for (int i = 0; i < static_cast<int>(d.order.size()); ++i) {
    d.rank[d.order[i]] = i;
  }

  std::vector<char> in_matching(q.arrows.size(), 0);
  for (int e : d.matching) in_matching[e] = 1;
  for (size_t e = 0; e < q.arrows.size(); ++e) {
    int rs = d.rank[q.arrows[e].src];
    int rt = d.rank[q.arrows[e].tgt];
    if (in_matching[e] != (rs > rt ? 1 : 0)) {
      throw std::logic_error(
          "order does not separate matching arrows from the rest");
    }
    if (!in_matching[e]) d.arrows.push_back(static_cast<int>(e));
  }

  for (int e : d.matching) {
    const Relation& rel = rels[e];
    for (const auto& side : {rel.white_path, rel.black_path}) {
      for (int a : side) {
        if (in_matching[a]) {
          throw std::logic_error("relation side meets the matching");
        }
      }
    }
    d.relations.push_back(rel);
  }
  return d;
}

}  // namespace dimer
