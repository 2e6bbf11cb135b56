#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer/ainf.hpp"

namespace dimer {

struct Violation {
  std::string check;
  std::string witness;
};

struct VerificationReport {
  long long checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline const std::map<int, int>* lookup_op(const OpsTable& ops,
                                           const std::vector<int>& key) {
  auto it = ops.find(key);
  return it == ops.end() ? nullptr : &it->second;
}

inline int parity_sign(long long exponent) {
  return ((exponent % 2) + 2) % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Degree balance: every table entry of arity k satisfies
// deg(output) = deg(inputs) + 2 - k.
inline VerificationReport check_degree_balance(const AInfCategory& c,
                                               const OpsTable* table = nullptr) {
  const OpsTable& ops = table ? *table : c.ops;
  VerificationReport rep;
  for (const auto& [key, combo] : ops) {
    int in_deg = 0;
    for (int x : key) in_deg += c.basis[x].degree;
    int k = static_cast<int>(key.size());
    for (const auto& [out, coeff] : combo) {
      if (coeff == 0) continue;
      ++rep.checked;
      if (c.basis[out].degree != in_deg + 2 - k) {
        rep.violations.push_back(
            {"degree-balance", "m" + std::to_string(k) +
                                   morphism_list_name(c, key) + " -> " +
                                   c.basis[out].name});
      }
    }
  }
  return rep;
}

namespace detail {

// Enumerates composable input sequences [x_1, ..., x_l] in first-applied
// order and feeds each to fn.
template <typename Fn>
void for_each_sequence(const AInfCategory& c, int max_len,
                       const std::vector<char>* mask, Fn&& fn) {
  std::vector<int> seq;
  auto rec = [&](auto&& self, int tail_tgt) -> void {
    if (!seq.empty()) fn(seq);
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int x = 0; x < c.basis_count(); ++x) {
      if (mask && !(*mask)[x]) continue;
      if (!seq.empty() && c.basis[x].src != tail_tgt) continue;
      seq.push_back(x);
      self(self, c.basis[x].tgt);
      seq.pop_back();
    }
  };
  rec(rec, -1);
}

}  // namespace detail

// Checks the quadratic relations of the operation family: for every
// composable sequence (a_l, ..., a_1) with l <= L,
//   sum over windows a_{i+j}..a_{i+1}  of
//     (-1)^{deg a_1 + ... + deg a_i - i}
//       m(a_l, ..., a_{i+j+1}, m(a_{i+j}, ..., a_{i+1}), a_i, ..., a_1) = 0.
// The default bound L = 2 * max_valence - 1 is exhaustive: a nonzero term
// needs both the inner window and the outer application to hit table keys,
// and every key has arity at most K = max(2, max_valence - 1); an inner key
// of arity j and outer key of arity l - j + 1 force l <= 2K - 1 <= L, so
// longer sequences contribute no nonzero term at all.
// Also audits the unit shape of the table: identity inputs occur only in the
// arity-2 unit entries, which must equal m2(x, id) = x and
// m2(id, x) = (-1)^{deg x} x.
inline VerificationReport verify_ainf_relations(
    const AInfCategory& c, int bound = 0, const OpsTable* table = nullptr,
    const std::vector<char>* mask = nullptr) {
  const OpsTable& ops = table ? *table : c.ops;
  VerificationReport rep;

  for (const auto& [key, combo] : ops) {
    bool has_id = false;
    for (int x : key) {
      if (c.basis[x].kind == MorKind::Id) has_id = true;
    }
    if (!has_id) continue;
    bool unit_shape = false;
    if (key.size() == 2) {
      int first = key[0], second = key[1];
      // stored [first-applied, last-applied]
      if (c.basis[first].kind == MorKind::Id && first == c.id_index(c.basis[second].src)) {
        unit_shape = combo.size() == 1 && combo.count(second) == 1 &&
                     combo.at(second) == 1;
      } else if (c.basis[second].kind == MorKind::Id &&
                 second == c.id_index(c.basis[first].tgt)) {
        int want = c.basis[first].degree % 2 == 0 ? 1 : -1;
        unit_shape = combo.size() == 1 && combo.count(first) == 1 &&
                     combo.at(first) == want;
      }
    }
    ++rep.checked;
    if (!unit_shape) {
      rep.violations.push_back(
          {"unitality", "entry " + morphism_list_name(c, key) +
                            " -> " + combo_name(c, combo)});
    }
  }

  int L = bound > 0 ? bound : 2 * c.max_valence - 1;
  int max_arity = 1;
  for (const auto& [key, combo] : ops) {
    max_arity = std::max(max_arity, static_cast<int>(key.size()));
  }
  detail::for_each_sequence(c, L, mask, [&](const std::vector<int>& seq) {
    int l = static_cast<int>(seq.size());
    std::map<int, int> residual;
    long long prefix_exp = 0;  // deg a_1 + ... + deg a_i - i
    for (int i = 0; i <= l - 1; ++i) {
      if (i > 0) prefix_exp += c.basis[seq[i - 1]].degree - 1;
      int sign = detail::parity_sign(prefix_exp);
      std::vector<int> window;
      for (int j = 1; i + j <= l && j <= max_arity; ++j) {
        window.push_back(seq[i + j - 1]);
        if (l - j + 1 > max_arity) continue;  // outer key cannot exist
        const auto* inner = detail::lookup_op(ops, window);
        if (!inner) continue;
        for (const auto& [mid, mc] : *inner) {
          if (mc == 0) continue;
          std::vector<int> outer;
          outer.insert(outer.end(), seq.begin(), seq.begin() + i);
          outer.push_back(mid);
          outer.insert(outer.end(), seq.begin() + i + j, seq.end());
          const auto* outer_val = detail::lookup_op(ops, outer);
          if (!outer_val) continue;
          for (const auto& [out, oc] : *outer_val) {
            residual[out] += sign * mc * oc;
          }
        }
      }
    }
    ++rep.checked;
    for (auto it = residual.begin(); it != residual.end();) {
      if (it->second == 0) {
        it = residual.erase(it);
      } else {
        ++it;
      }
    }
    if (!residual.empty()) {
      rep.violations.push_back(
          {"quadratic-relation", "sequence " + morphism_list_name(c, seq) +
                                     " residual " + combo_name(c, residual)});
    }
  });
  return rep;
}

namespace detail {

// Integer determinant via Bareiss elimination; matrices here are tiny.
inline long long int_det(std::vector<std::vector<long long>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

// Cyclic pairing suite:
//  (i)  for every object pair the pairing matrix between hom(v, w) and
//       hom(w, v) is unimodular (and in particular the dimensions agree,
//       giving dim hom^d(v, w) = dim hom^{3-d}(w, v)),
//  (ii) graded symmetry <x, y> = (-1)^{(deg x - 1)(deg y - 1)} <y, x>,
//  (iii) the rotation identity, for every cyclically composable tuple
//        (x_n, ..., x_1, x_0) at each arity n present in the table:
//        <m(x_n, ..., x_1), x_0> =
//          (-1)^{(deg x_n - 1) sum_{i<n} (deg x_i - 1)} <m(x_{n-1}, ..., x_0), x_n>.
inline VerificationReport verify_cyclicity(const AInfCategory& c) {
  VerificationReport rep;

  std::map<std::pair<int, int>, std::vector<int>> hom;
  for (int x = 0; x < c.basis_count(); ++x) {
    hom[{c.basis[x].src, c.basis[x].tgt}].push_back(x);
  }

  for (int v = 0; v < c.object_count; ++v) {
    for (int w = 0; w < c.object_count; ++w) {
      const auto& rows = hom[{v, w}];
      const auto& cols = hom[{w, v}];
      ++rep.checked;
      if (rows.size() != cols.size()) {
        rep.violations.push_back(
            {"pairing-nondegenerate",
             "hom(" + std::to_string(v) + "," + std::to_string(w) +
                 ") and hom(" + std::to_string(w) + "," + std::to_string(v) +
                 ") have different dimensions"});
        continue;
      }
      std::vector<std::vector<long long>> mat(
          rows.size(), std::vector<long long>(cols.size(), 0));
      for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < cols.size(); ++j) {
          mat[i][j] = c.pairing(rows[i], cols[j]);
        }
      }
      long long det = detail::int_det(mat);
      if (det != 1 && det != -1) {
        rep.violations.push_back(
            {"pairing-nondegenerate",
             "pairing matrix on hom(" + std::to_string(v) + "," +
                 std::to_string(w) + ") has determinant " +
                 std::to_string(det)});
      }
      for (int x : rows) {
        for (int y : cols) {
          ++rep.checked;
          int sign = detail::parity_sign(
              static_cast<long long>(c.basis[x].degree - 1) *
              (c.basis[y].degree - 1));
          if (c.pairing(x, y) != sign * c.pairing(y, x)) {
            rep.violations.push_back(
                {"pairing-symmetry",
                 "<" + c.basis[x].name + ", " + c.basis[y].name + ">"});
          }
        }
      }
    }
  }

  std::set<int> arities;
  for (const auto& [key, combo] : c.ops) {
    arities.insert(static_cast<int>(key.size()));
  }
  for (int n : arities) {
    // Cyclic chains [y_0, y_1, ..., y_n]: composable in storage order and
    // closing up, tgt(y_n) = src(y_0).
    std::vector<int> chain;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(chain.size()) == n + 1) {
        if (c.basis[chain.back()].tgt != c.basis[chain.front()].src) return;
        ++rep.checked;
        std::vector<int> lhs_key(chain.begin() + 1, chain.end());
        std::vector<int> rhs_key(chain.begin(), chain.end() - 1);
        int lhs = 0, rhs = 0;
        if (const auto* combo = detail::lookup_op(c.ops, lhs_key)) {
          auto it = combo->find(c.partner[chain.front()]);
          if (it != combo->end()) lhs = it->second;
        }
        if (const auto* combo = detail::lookup_op(c.ops, rhs_key)) {
          auto it = combo->find(c.partner[chain.back()]);
          if (it != combo->end()) rhs = it->second;
        }
        long long exponent = 0;
        for (int i = 0; i + 1 < static_cast<int>(chain.size()); ++i) {
          exponent += c.basis[chain[i]].degree - 1;
        }
        exponent *= c.basis[chain.back()].degree - 1;
        if (lhs != detail::parity_sign(exponent) * rhs) {
          rep.violations.push_back(
              {"cyclic-identity",
               "tuple " + morphism_list_name(c, chain) + " lhs " +
                   std::to_string(lhs) + " rhs sign*" + std::to_string(rhs)});
        }
        return;
      }
      for (int x = 0; x < c.basis_count(); ++x) {
        if (!chain.empty() && c.basis[x].src != c.basis[chain.back()].tgt) {
          continue;
        }
        chain.push_back(x);
        self(self);
        chain.pop_back();
      }
    };
    rec(rec);
  }
  return rep;
}

// Directed subcategory carved out by a total order on objects.  Objects are
// listed in inverse order; a basis element of hom(v, w) survives when v is
// strictly later than w in the given order, plus the identities on the
// diagonal.  Operation entries survive when all inputs do; their outputs
// then survive automatically (inputs chain strictly downward in the order,
// so every output component lives in a strictly descending hom).
struct DirectedCategory {
  std::vector<int> object_sequence;  // inverse of the defining order
  std::vector<char> survives;
  OpsTable ops;
};

inline DirectedCategory directed_subcategory(const AInfCategory& c,
                                             const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != c.object_count) {
    throw std::invalid_argument("order must list every object exactly once");
  }
  std::vector<int> rank(c.object_count, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (order[i] < 0 || order[i] >= c.object_count || rank[order[i]] != -1) {
      throw std::invalid_argument("order must list every object exactly once");
    }
    rank[order[i]] = i;
  }

  DirectedCategory dir;
  dir.object_sequence.assign(order.rbegin(), order.rend());
  dir.survives.assign(c.basis_count(), 0);
  for (int x = 0; x < c.basis_count(); ++x) {
    const BasisMorphism& bm = c.basis[x];
    if (bm.kind == MorKind::Id) {
      dir.survives[x] = 1;
    } else if (bm.kind != MorKind::DualId) {
      dir.survives[x] = rank[bm.src] > rank[bm.tgt] ? 1 : 0;
    }
  }
  for (const auto& [key, combo] : c.ops) {
    bool keep = true;
    for (int x : key) {
      if (!dir.survives[x]) keep = false;
    }
    if (!keep) continue;
    for (const auto& [out, coeff] : combo) {
      if (coeff != 0 && !dir.survives[out]) {
        throw std::logic_error("directed entry output does not survive");
      }
    }
    dir.ops[key] = combo;
  }
  return dir;
}

// Trivial extension structure of the full category over the directed one:
//  (i)  the pairing partners split every hom space into the directed part
//       and the dual of the opposite directed part, matching degrees d and
//       3 - d;
//  (ii) every operation entry of the full table is reachable from some
//       directed entry by iterated rotation through the pairing: from an
//       entry [x_1, ..., x_n] -> b, rotating moves to the key
//       [partner(b), x_1, ..., x_{n-1}].
struct TrivialExtensionReport {
  VerificationReport report;
  std::vector<std::vector<int>> orphans;  // unreachable keys of the full table
};

inline TrivialExtensionReport verify_trivial_extension(
    const AInfCategory& c, const DirectedCategory& dir) {
  TrivialExtensionReport out;
  VerificationReport& rep = out.report;

  for (int x = 0; x < c.basis_count(); ++x) {
    ++rep.checked;
    bool split = dir.survives[x] != dir.survives[c.partner[x]];
    bool degrees = c.basis[x].degree + c.basis[c.partner[x]].degree == 3;
    if (!split || !degrees) {
      rep.violations.push_back(
          {"graded-split", c.basis[x].name + " / " +
                               c.basis[c.partner[x]].name});
    }
  }

  std::set<std::vector<int>> reached;
  std::vector<std::vector<int>> frontier;
  for (const auto& [key, combo] : dir.ops) {
    if (c.ops.count(key) && reached.insert(key).second) {
      frontier.push_back(key);
    }
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& key : frontier) {
      const auto& combo = c.ops.at(key);
      for (const auto& [b, coeff] : combo) {
        if (coeff == 0) continue;
        std::vector<int> rotated;
        rotated.push_back(c.partner[b]);
        rotated.insert(rotated.end(), key.begin(), key.end() - 1);
        if (c.ops.count(rotated) && reached.insert(rotated).second) {
          next.push_back(rotated);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [key, combo] : c.ops) {
    ++rep.checked;
    if (!reached.count(key)) {
      out.orphans.push_back(key);
      rep.violations.push_back(
          {"rotation-reachability",
           "entry " + morphism_list_name(c, key) + " unreachable"});
    }
  }
  return out;
}

}  // namespace dimer
