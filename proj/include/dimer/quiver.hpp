#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer/faces.hpp"
#include "dimer/model.hpp"

namespace dimer {

// Arrows of the dual quiver are indexed by the edges of the model.  The
// arrow dual to edge e runs from the face left of the white-to-black
// traversal to the face left of the black-to-white traversal.
struct Arrow {
  int src = -1;
  int tgt = -1;
};

// Paths and cycles store arrows first-applied first: the composite
// a_n ... a_2 a_1 (apply a_1, then a_2, ...) is stored as [a_1, a_2, ..., a_n].
struct QuiverData {
  int vertex_count = 0;
  std::vector<Arrow> arrows;  // by edge index
  // Per model node, its boundary arrows as one composable closed cycle in
  // first-applied order, starting at the arrow of smallest name rank.
  std::vector<std::vector<int>> node_cycle;
  // Rank of each edge id in lexicographic order, used for canonical forms.
  std::vector<int> name_rank;
  FaceData faces;
};

inline int path_source(const QuiverData& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw std::invalid_argument("empty path has no fixed source");
  return q.arrows[arrows.front()].src;
}
inline int path_target(const QuiverData& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw std::invalid_argument("empty path has no fixed target");
  return q.arrows[arrows.back()].tgt;
}
inline bool path_composable(const QuiverData& q, const std::vector<int>& arrows) {
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrows[arrows[i]].tgt != q.arrows[arrows[i + 1]].src) return false;
  }
  return true;
}

// Rotates a closed cycle of arrows to its canonical representative: the
// rotation that is lexicographically least under name rank.
inline std::vector<int> canonical_cycle(const QuiverData& q,
                                        std::vector<int> cycle) {
  if (cycle.size() <= 1) return cycle;
  auto rank_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (q.name_rank[a[i]] != q.name_rank[b[i]]) {
        return q.name_rank[a[i]] < q.name_rank[b[i]];
      }
    }
    return false;
  };
  std::vector<int> best = cycle;
  for (std::size_t r = 1; r < cycle.size(); ++r) {
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    if (rank_less(cycle, best)) best = cycle;
  }
  return best;
}

inline QuiverData dual_quiver(const DimerModel& m) {
  QuiverData q;
  q.faces = trace_faces(m);
  q.vertex_count = q.faces.face_count();
  q.arrows.resize(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    q.arrows[e].src = q.faces.face_of[make_dart(e, false)];
    q.arrows[e].tgt = q.faces.face_of[make_dart(e, true)];
  }

  std::vector<std::string> ids;
  for (const Edge& e : m.edges) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  q.name_rank.resize(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    q.name_rank[e] = static_cast<int>(
        std::lower_bound(ids.begin(), ids.end(), m.edges[e].id) - ids.begin());
  }

  // The cycle of arrows around a node steps to the rotation predecessor at a
  // white node and to the successor at a black node; these are exactly the
  // face-sharing consecutive pairs, so each cycle is composable and closed.
  q.node_cycle.resize(m.node_count());
  for (int n = 0; n < m.node_count(); ++n) {
    bool white = m.nodes[n].color == NodeColor::White;
    int start = *std::min_element(
        m.rotation[n].begin(), m.rotation[n].end(),
        [&](int a, int b) { return q.name_rank[a] < q.name_rank[b]; });
    std::vector<int> cycle;
    int e = start;
    do {
      cycle.push_back(e);
      e = white ? rotation_pred(m, n, e) : rotation_succ(m, n, e);
    } while (e != start);
    if (!path_composable(q, cycle) ||
        path_target(q, cycle) != path_source(q, cycle)) {
      throw std::logic_error("node cycle is not a closed path");
    }
    q.node_cycle[n] = std::move(cycle);
  }
  return q;
}

// The potential: sum of white node cycles minus sum of black node cycles,
// each in canonical rotation.  Terms are listed white first, then black,
// in model node order.
struct CyclicTerm {
  std::vector<int> arrows;  // first-applied order, canonical rotation
  int coeff = 1;
};

struct Potential {
  std::vector<CyclicTerm> terms;
};

inline Potential build_potential(const DimerModel& m, const QuiverData& q) {
  Potential p;
  for (int pass = 0; pass < 2; ++pass) {
    NodeColor want = pass == 0 ? NodeColor::White : NodeColor::Black;
    for (int n = 0; n < m.node_count(); ++n) {
      if (m.nodes[n].color != want) continue;
      p.terms.push_back(
          {canonical_cycle(q, q.node_cycle[n]), want == NodeColor::White ? 1 : -1});
    }
  }
  return p;
}

// Cyclic derivative of a single cyclic term with respect to arrow a: one
// complementary path per occurrence of a, each read off cyclically starting
// just after the occurrence.  Every term runs from tgt(a) to src(a).
inline std::vector<std::vector<int>> cyclic_derivative(
    const std::vector<int>& cycle, int arrow) {
  std::vector<std::vector<int>> out;
  int len = static_cast<int>(cycle.size());
  for (int j = 0; j < len; ++j) {
    if (cycle[j] != arrow) continue;
    std::vector<int> rest;
    for (int k = 1; k < len; ++k) rest.push_back(cycle[(j + k) % len]);
    out.push_back(std::move(rest));
  }
  return out;
}

// One relation per arrow: the complementary path of a in its white node
// cycle equals the complementary path in its black node cycle.
struct Relation {
  int arrow;
  std::vector<int> white_path;  // first-applied order
  std::vector<int> black_path;
};

inline std::vector<Relation> build_relations(const DimerModel& m,
                                             const QuiverData& q) {
  std::vector<Relation> rels(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) rels[e].arrow = e;
  for (int n = 0; n < m.node_count(); ++n) {
    bool white = m.nodes[n].color == NodeColor::White;
    for (int e : q.node_cycle[n]) {
      std::vector<std::vector<int>> d = cyclic_derivative(q.node_cycle[n], e);
      if (d.size() != 1) {
        throw std::logic_error("edge must occur exactly once in its node cycle");
      }
      (white ? rels[e].white_path : rels[e].black_path) = d[0];
    }
  }
  return rels;
}

}  // namespace dimer
