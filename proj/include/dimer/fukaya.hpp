#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer/ainf.hpp"
#include "dimer/ainf_verify.hpp"
#include "dimer/directed.hpp"
#include "dimer/faces.hpp"
#include "dimer/model.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

// Boundary-orbit tracing with the twisted rule: entering a white node the
// walk turns as for faces (rotation predecessor), entering a black node it
// turns the other way (rotation successor).  Capping the orbits with disks
// yields the closed surface on which the vanishing-cycle model lives.
struct RibbonSurface {
  std::vector<std::vector<DartId>> orbits;
  int euler = 0;
  int genus = 0;
};

inline DartId twisted_next(const DimerModel& m, DartId d) {
  int node = dart_head(m, d);
  int e = dart_edge(d);
  bool white = m.nodes[node].color == NodeColor::White;
  int leave = white ? rotation_pred(m, node, e) : rotation_succ(m, node, e);
  return make_dart(leave, !white);
}

inline RibbonSurface build_surface(const DimerModel& m) {
  RibbonSurface s;
  int dart_count = 2 * m.edge_count();
  std::vector<char> seen(dart_count, 0);
  for (DartId d0 = 0; d0 < dart_count; ++d0) {
    if (seen[d0]) continue;
    std::vector<DartId> orbit;
    DartId d = d0;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = twisted_next(m, d);
    } while (d != d0);
    s.orbits.push_back(std::move(orbit));
  }
  s.euler = m.node_count() - m.edge_count() +
            static_cast<int>(s.orbits.size());
  if ((2 - s.euler) % 2 != 0) {
    throw std::logic_error("twisted surface has odd Euler characteristic");
  }
  s.genus = (2 - s.euler) / 2;
  return s;
}

// The cycle attached to face v visits, in boundary order, one point on each
// arrow dual to a boundary edge of v.  Two cycles meet once for every edge
// shared by their faces; a cycle crosses itself once for every loop edge,
// an edge with the same face on both sides.
struct VanishingCycles {
  std::vector<std::vector<int>> cycles;  // per face, edge indices in order
  std::vector<int> self_count;           // per face, number of loop edges
};

inline VanishingCycles vanishing_cycles(const DimerModel& m,
                                        const QuiverData& q) {
  VanishingCycles vc;
  vc.cycles.resize(q.faces.face_count());
  vc.self_count.assign(q.faces.face_count(), 0);
  for (int f = 0; f < q.faces.face_count(); ++f) {
    for (DartId d : q.faces.faces[f]) {
      vc.cycles[f].push_back(dart_edge(d));
    }
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    if (q.arrows[e].src == q.arrows[e].tgt) ++vc.self_count[q.arrows[e].src];
  }
  return vc;
}

// Geometric intersection number of the cycles at faces v and w: shared
// boundary edges for v != w, loop count for v == w.
inline int intersection_count(const VanishingCycles& vc, const QuiverData& q,
                              int v, int w) {
  if (v == w) return vc.self_count[v];
  int count = 0;
  for (size_t e = 0; e < q.arrows.size(); ++e) {
    int a = q.arrows[e].src, b = q.arrows[e].tgt;
    if ((a == v && b == w) || (a == w && b == v)) ++count;
  }
  return count;
}

// Graded intersection points of the vanishing-cycle collection relative to
// an internal matching: every edge carries one point, of index 1 off the
// matching and index 2 on it, seen inside hom(C_high, C_low) for the
// endpoint faces ordered by the certifying total order.
struct GradedIntersection {
  int edge;
  int cycle_high;  // endpoint face later in the order
  int cycle_low;
  int maslov;
};

// Disk count at a node of valence k + 1: the matched edge must carry
// index sum_i mu(e_i) + (2 - k) over the k unmatched edges.
inline VerificationReport check_maslov_degrees(const DimerModel& m,
                                               const std::vector<int>& matching,
                                               const std::vector<int>& mu) {
  std::vector<char> matched(m.edge_count(), 0);
  for (int e : matching) matched[e] = 1;
  VerificationReport rep;
  for (int n = 0; n < m.node_count(); ++n) {
    int base = -1;
    int sum = 0;
    int k = static_cast<int>(m.rotation[n].size()) - 1;
    for (int e : m.rotation[n]) {
      if (matched[e]) {
        base = e;
      } else {
        sum += mu[e];
      }
    }
    ++rep.checked;
    if (base < 0) {
      rep.violations.push_back(
          {"disk-degree", "node '" + m.nodes[n].id + "' has no matched edge"});
      continue;
    }
    if (mu[base] != sum + 2 - k) {
      rep.violations.push_back(
          {"disk-degree",
           "node '" + m.nodes[n].id + "': index " + std::to_string(mu[base]) +
               " on '" + m.edges[base].id + "' vs " +
               std::to_string(sum + 2 - k) + " from the unmatched edges"});
    }
  }
  return rep;
}

struct MaslovData {
  std::vector<GradedIntersection> points;
  VerificationReport degree_check;
};

inline MaslovData assign_maslov(const DimerModel& m, const QuiverData& q,
                                const std::vector<int>& matching,
                                const std::vector<int>& order) {
  if (!is_internal(q, matching)) {
    throw std::invalid_argument("matching is not internal");
  }
  std::vector<int> rank(q.vertex_count, 0);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
  std::vector<char> matched(m.edge_count(), 0);
  for (int e : matching) matched[e] = 1;

  MaslovData out;
  std::vector<int> mu(m.edge_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    int s = q.arrows[e].src, t = q.arrows[e].tgt;
    GradedIntersection p;
    p.edge = e;
    p.maslov = matched[e] ? 2 : 1;
    p.cycle_high = rank[s] > rank[t] ? s : t;
    p.cycle_low = rank[s] > rank[t] ? t : s;
    mu[e] = p.maslov;
    out.points.push_back(p);
  }
  out.degree_check = check_maslov_degrees(m, matching, mu);
  return out;
}

// Directed category computed from the surface side alone: for each node the
// boundary edges are read in the twisted cyclic order starting at the
// matched edge e_0, giving one operation m_k(e_k, ..., e_1) = eps * e_0^
// on the index-1 points, plus strict units.  The basis indexing of c is
// reused so the result can be compared entry by entry with the directed
// subcategory; no operation of c is consulted.
inline DirectedCategory build_directed_fukaya(const DimerModel& m,
                                              const QuiverData& q,
                                              const AInfCategory& c,
                                              const std::vector<int>& matching,
                                              const std::vector<int>& order,
                                              int flip_node = -1) {
  if (!is_internal(q, matching)) {
    throw std::invalid_argument("matching is not internal");
  }
  std::vector<char> matched(m.edge_count(), 0);
  for (int e : matching) matched[e] = 1;

  DirectedCategory dir;
  dir.object_sequence.assign(order.rbegin(), order.rend());
  dir.survives.assign(c.basis_count(), 0);
  for (int x = 0; x < c.basis_count(); ++x) {
    const BasisMorphism& bm = c.basis[x];
    if (bm.kind == MorKind::Id) {
      dir.survives[x] = 1;
    } else if (bm.kind == MorKind::Arrow) {
      dir.survives[x] = matched[bm.carrier] ? 0 : 1;
    } else if (bm.kind == MorKind::DualArrow) {
      dir.survives[x] = matched[bm.carrier] ? 1 : 0;
    }
  }

  for (int x = 0; x < c.basis_count(); ++x) {
    if (!dir.survives[x]) continue;
    const BasisMorphism& bm = c.basis[x];
    add_op(dir.ops, {c.id_index(bm.src), x}, x, 1);
    if (bm.kind != MorKind::Id) {
      add_op(dir.ops, {x, c.id_index(bm.tgt)}, x, bm.degree % 2 == 0 ? 1 : -1);
    }
  }

  for (int n = 0; n < m.node_count(); ++n) {
    bool white = m.nodes[n].color == NodeColor::White;
    int base = -1;
    for (int e : m.rotation[n]) {
      if (matched[e]) base = e;
    }
    if (base < 0) {
      throw std::logic_error("node '" + m.nodes[n].id + "' has no matched edge");
    }
    std::vector<int> key;
    int e = base;
    for (size_t step = 1; step < m.rotation[n].size(); ++step) {
      e = white ? rotation_succ(m, n, e) : rotation_pred(m, n, e);
      key.push_back(c.arrow_index(e));
    }
    int eps = white ? 1 : -1;
    if (n == flip_node) eps = -eps;
    add_op(dir.ops, std::move(key), c.dual_index(base), eps);
  }
  detail::prune_zeros(dir.ops);
  return dir;
}

struct ComparisonReport {
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Entry-by-entry comparison of two directed categories over the same basis
// indexing, signs included.
inline ComparisonReport compare_categories(const AInfCategory& c,
                                           const DirectedCategory& lhs,
                                           const DirectedCategory& rhs) {
  if (lhs.object_sequence != rhs.object_sequence) {
    throw std::invalid_argument("object sequences differ");
  }
  ComparisonReport rep;
  for (int x = 0; x < c.basis_count(); ++x) {
    if (lhs.survives[x] != rhs.survives[x]) {
      rep.mismatches.push_back("basis element " + c.basis[x].name +
                               " survives on one side only");
    }
  }
  std::vector<const std::vector<int>*> keys;
  for (const auto& [key, combo] : lhs.ops) keys.push_back(&key);
  for (const auto& [key, combo] : rhs.ops) {
    if (!lhs.ops.count(key)) keys.push_back(&key);
  }
  std::sort(keys.begin(), keys.end(),
            [](const auto* a, const auto* b) { return *a < *b; });
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const auto* a, const auto* b) { return *a == *b; }),
             keys.end());
  for (const auto* key : keys) {
    auto lit = lhs.ops.find(*key);
    auto rit = rhs.ops.find(*key);
    std::map<int, int> empty;
    const std::map<int, int>& lv = lit == lhs.ops.end() ? empty : lit->second;
    const std::map<int, int>& rv = rit == rhs.ops.end() ? empty : rit->second;
    if (lv != rv) {
      rep.mismatches.push_back("operation on " + morphism_list_name(c, *key) +
                               ": " + combo_name(c, lv) + " vs " +
                               combo_name(c, rv));
    }
  }
  return rep;
}

}  // namespace dimer
