#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer/model.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

// Morphism basis of the category attached to the quiver with potential.
// For faces v, w the graded hom space hom(v, w) has basis
//   degree 0: id_v               (only when v = w)
//   degree 1: [a] for arrows a with t(a) = v and s(a) = w   (opposite to a)
//   degree 2: a^ for arrows a with s(a) = v and t(a) = w    (along a)
//   degree 3: id_v^              (only when v = w)
enum class MorKind { Id, Arrow, DualArrow, DualId };

struct BasisMorphism {
  MorKind kind;
  int carrier;  // face for Id/DualId, edge index for Arrow/DualArrow
  int src = -1;
  int tgt = -1;
  int degree = 0;
  std::string name;
};

// Operation table: key = input tuple of basis indices in first-applied order
// (the written operation m_k(x_k, ..., x_1) applies x_1 first and is stored
// under [x_1, ..., x_k]); value = integer combination of basis indices.
using OpsTable = std::map<std::vector<int>, std::map<int, int>>;

struct AInfCategory {
  int object_count = 0;
  int edge_count = 0;
  int max_valence = 0;
  std::vector<BasisMorphism> basis;
  // partner[x] is the unique basis element with nonzero pairing against x;
  // all pairing values are +1 and the pairing is symmetric on its support.
  std::vector<int> partner;
  OpsTable ops;

  int id_index(int face) const { return face; }
  int arrow_index(int edge) const { return object_count + edge; }
  int dual_index(int edge) const { return object_count + edge_count + edge; }
  int dual_id_index(int face) const {
    return object_count + 2 * edge_count + face;
  }
  int basis_count() const { return static_cast<int>(basis.size()); }

  int pairing(int x, int y) const { return partner[x] == y ? 1 : 0; }
};

struct BuildOptions {
  // Per-color disk signs: white node cycles contribute +1, black -1.  The
  // black sign is exposed so verification suites can probe sign mutations.
  int white_sign = 1;
  int black_sign = -1;
};

inline void add_op(OpsTable& ops, std::vector<int> key, int out, int coeff) {
  if (coeff == 0) return;
  ops[std::move(key)][out] += coeff;
}

namespace detail {

inline void prune_zeros(OpsTable& ops) {
  for (auto it = ops.begin(); it != ops.end();) {
    for (auto vt = it->second.begin(); vt != it->second.end();) {
      if (vt->second == 0) {
        vt = it->second.erase(vt);
      } else {
        ++vt;
      }
    }
    if (it->second.empty()) {
      it = ops.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace detail

// Builds the cyclic category of the quiver with potential.  Operations:
//   units       m2(x, id_src) = x,  m2(id_tgt, x) = (-1)^{deg x} x
//   pair        m2([a], a^) = +id_{s(a)}^,  m2(a^, [a]) = -id_{t(a)}^
//   node disks  for each node with composition cycle (g_0, ..., g_{m-1}) and
//               each j, the arity m-1 operation on the window running from
//               the cycle successor of g_j around to its predecessor, with
//               value eps(node) * g_j^; contributions on equal keys add.
inline AInfCategory build_category(const DimerModel& m, const QuiverData& q,
                                   const BuildOptions& opts = {}) {
  for (int n = 0; n < m.node_count(); ++n) {
    if (m.rotation[n].size() < 2) {
      throw std::invalid_argument("node '" + m.nodes[n].id +
                                  "' has valence < 2");
    }
  }

  AInfCategory c;
  c.object_count = q.vertex_count;
  c.edge_count = m.edge_count();
  for (int n = 0; n < m.node_count(); ++n) {
    c.max_valence = std::max(c.max_valence, static_cast<int>(m.rotation[n].size()));
  }

  for (int v = 0; v < c.object_count; ++v) {
    c.basis.push_back({MorKind::Id, v, v, v, 0, "1_" + std::to_string(v)});
  }
  for (int e = 0; e < c.edge_count; ++e) {
    c.basis.push_back({MorKind::Arrow, e, q.arrows[e].tgt, q.arrows[e].src, 1,
                       "[" + m.edges[e].id + "]"});
  }
  for (int e = 0; e < c.edge_count; ++e) {
    c.basis.push_back({MorKind::DualArrow, e, q.arrows[e].src, q.arrows[e].tgt,
                       2, m.edges[e].id + "^"});
  }
  for (int v = 0; v < c.object_count; ++v) {
    c.basis.push_back(
        {MorKind::DualId, v, v, v, 3, "1_" + std::to_string(v) + "^"});
  }
  c.partner.resize(c.basis_count());
  for (int v = 0; v < c.object_count; ++v) {
    c.partner[c.id_index(v)] = c.dual_id_index(v);
    c.partner[c.dual_id_index(v)] = c.id_index(v);
  }
  for (int e = 0; e < c.edge_count; ++e) {
    c.partner[c.arrow_index(e)] = c.dual_index(e);
    c.partner[c.dual_index(e)] = c.arrow_index(e);
  }

  // Units.
  for (int x = 0; x < c.basis_count(); ++x) {
    const BasisMorphism& bm = c.basis[x];
    add_op(c.ops, {c.id_index(bm.src), x}, x, 1);
    if (bm.kind != MorKind::Id) {
      add_op(c.ops, {x, c.id_index(bm.tgt)}, x, bm.degree % 2 == 0 ? 1 : -1);
    }
  }

  // Pair operations.
  for (int e = 0; e < c.edge_count; ++e) {
    add_op(c.ops, {c.dual_index(e), c.arrow_index(e)},
           c.dual_id_index(q.arrows[e].src), 1);
    add_op(c.ops, {c.arrow_index(e), c.dual_index(e)},
           c.dual_id_index(q.arrows[e].tgt), -1);
  }

  // Node disk operations, one per rotation of each node cycle.
  for (int n = 0; n < m.node_count(); ++n) {
    const std::vector<int>& cyc = q.node_cycle[n];
    int mm = static_cast<int>(cyc.size());
    int eps = m.nodes[n].color == NodeColor::White ? opts.white_sign
                                                   : opts.black_sign;
    for (int j = 0; j < mm; ++j) {
      std::vector<int> key;
      for (int step = 1; step < mm; ++step) {
        key.push_back(c.arrow_index(cyc[(j - step + mm * 2) % mm]));
      }
      add_op(c.ops, std::move(key), c.dual_index(cyc[j]), eps);
    }
  }

  detail::prune_zeros(c.ops);
  return c;
}

inline std::string morphism_list_name(const AInfCategory& c,
                                      const std::vector<int>& xs) {
  std::string out = "(";
  // Written order is last-applied first; storage is first-applied first.
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    if (it != xs.rbegin()) out += ", ";
    out += c.basis[*it].name;
  }
  return out + ")";
}

inline std::string combo_name(const AInfCategory& c,
                              const std::map<int, int>& combo) {
  if (combo.empty()) return "0";
  std::string out;
  for (const auto& [b, coeff] : combo) {
    if (coeff == 0) continue;
    if (!out.empty()) out += " ";
    if (coeff > 0) {
      out += out.empty() ? "" : "+ ";
      if (coeff != 1) out += std::to_string(coeff) + "*";
    } else {
      out += "- ";
      if (coeff != -1) out += std::to_string(-coeff) + "*";
    }
    out += c.basis[b].name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace dimer
