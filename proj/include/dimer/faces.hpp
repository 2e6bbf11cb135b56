#pragma once

#include <string>
#include <vector>

#include "dimer/model.hpp"

namespace dimer {

// Face traversal: a dart entering node n via edge e continues along the
// predecessor of e in the counterclockwise rotation at n, for both colors.
// Orbits of this step are the face boundaries; each face is traversed with
// the face on its left.
inline DartId face_next(const DimerModel& m, DartId d) {
  int n = dart_head(m, d);
  int e = rotation_pred(m, n, dart_edge(d));
  bool leave_black_to_white = m.nodes[n].color == NodeColor::Black;
  return make_dart(e, leave_black_to_white);
}

struct FaceData {
  // faces[f] lists the boundary darts in traversal order, starting from the
  // numerically smallest dart of the orbit.
  std::vector<std::vector<DartId>> faces;
  // face_of[d] is the face whose boundary contains dart d.
  std::vector<int> face_of;

  int face_count() const { return static_cast<int>(faces.size()); }
};

inline FaceData trace_faces(const DimerModel& m) {
  int dart_count = 2 * m.edge_count();
  FaceData fd;
  fd.face_of.assign(dart_count, -1);
  for (DartId start = 0; start < dart_count; ++start) {
    if (fd.face_of[start] != -1) continue;
    int f = fd.face_count();
    std::vector<DartId> cycle;
    DartId d = start;
    do {
      fd.face_of[d] = f;
      cycle.push_back(d);
      d = face_next(m, d);
    } while (d != start);
    fd.faces.push_back(std::move(cycle));
  }
  return fd;
}

// Structural checks beyond what the parser enforces.  Returns a list of
// problems; an empty list means the model is a dimer model on the torus.
inline std::vector<std::string> validate(const DimerModel& m) {
  std::vector<std::string> problems;
  if (m.black_count() == 0) problems.push_back("no black nodes");
  if (m.white_count() == 0) problems.push_back("no white nodes");
  if (!problems.empty()) return problems;

  // Connectivity over the underlying graph.
  std::vector<char> seen(m.node_count(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    for (int e : m.rotation[n]) {
      int other = m.edges[e].black == n ? m.edges[e].white : m.edges[e].black;
      if (!seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (int n = 0; n < m.node_count(); ++n) {
    if (!seen[n]) {
      problems.push_back("graph is disconnected: node '" + m.nodes[n].id +
                         "' unreachable from '" + m.nodes[0].id + "'");
      return problems;
    }
  }

  // Euler characteristic of the surface cut out by the rotation system must
  // be 0, i.e. the embedding really lives on the torus.
  FaceData fd = trace_faces(m);
  int chi = m.node_count() - m.edge_count() + fd.face_count();
  if (chi != 0) {
    problems.push_back("Euler characteristic is " + std::to_string(chi) +
                       " (nodes " + std::to_string(m.node_count()) + " - edges " +
                       std::to_string(m.edge_count()) + " + faces " +
                       std::to_string(fd.face_count()) + "), expected 0 for the torus");
  }
  return problems;
}

}  // namespace dimer
