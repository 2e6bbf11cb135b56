#pragma once

#include <utility>
#include <vector>

#include "dimer/model.hpp"

namespace dimer {

// Zigzag traversal: a dart entering a white node via edge e continues along
// the successor of e in the rotation there; a dart entering a black node
// continues along the predecessor.  Orbits alternate maximally left and
// right, so they are the zigzag paths of the model.
inline DartId zigzag_next(const DimerModel& m, DartId d) {
  int n = dart_head(m, d);
  int e;
  bool leave_black_to_white;
  if (m.nodes[n].color == NodeColor::White) {
    e = rotation_succ(m, n, dart_edge(d));
    leave_black_to_white = false;
  } else {
    e = rotation_pred(m, n, dart_edge(d));
    leave_black_to_white = true;
  }
  return make_dart(e, leave_black_to_white);
}

struct ZigzagData {
  // paths[z] lists the darts of one zigzag orbit, starting from its
  // numerically smallest dart.
  std::vector<std::vector<DartId>> paths;
  // classes[z] is the homology class of paths[z].
  std::vector<std::pair<int, int>> classes;
  // zigzag_of[d] is the orbit containing dart d.
  std::vector<int> zigzag_of;

  int path_count() const { return static_cast<int>(paths.size()); }
};

inline ZigzagData trace_zigzags(const DimerModel& m) {
  int dart_count = 2 * m.edge_count();
  ZigzagData zd;
  zd.zigzag_of.assign(dart_count, -1);
  for (DartId start = 0; start < dart_count; ++start) {
    if (zd.zigzag_of[start] != -1) continue;
    int z = zd.path_count();
    std::vector<DartId> cycle;
    DartId d = start;
    do {
      zd.zigzag_of[d] = z;
      cycle.push_back(d);
      d = zigzag_next(m, d);
    } while (d != start);
    int dx = 0;
    int dy = 0;
    for (DartId dd : cycle) {
      auto [cx, cy] = dart_class(m, dd);
      dx += cx;
      dy += cy;
    }
    zd.paths.push_back(std::move(cycle));
    zd.classes.emplace_back(dx, dy);
  }
  return zd;
}

}  // namespace dimer
