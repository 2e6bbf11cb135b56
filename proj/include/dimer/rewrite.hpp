#pragma once

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer/matchings.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

enum class EquivalenceVerdict { Equivalent, Inequivalent, Unknown };

inline std::string to_string(EquivalenceVerdict v) {
  switch (v) {
    case EquivalenceVerdict::Equivalent: return "equivalent";
    case EquivalenceVerdict::Inequivalent: return "inequivalent";
    default: return "unknown";
  }
}

struct EquivalenceResult {
  EquivalenceVerdict verdict = EquivalenceVerdict::Unknown;
  // Number of single-relation rewrites connecting the paths when equivalent.
  int distance = -1;
  long long expansions = 0;
  std::string reason;
};

struct RewriteOptions {
  long long max_expansions = 10000;
  // Refute equivalence early via rewrite-invariant matching degrees.
  bool use_invariants = true;
};

namespace detail {

// One rewrite: replace an occurrence of `from` by `to`, both sides of one
// relation, anywhere in the word.
inline void push_rewrites(const std::vector<int>& word,
                          const std::vector<int>& from,
                          const std::vector<int>& to,
                          std::vector<std::vector<int>>& out) {
  if (from.empty() || from.size() > word.size()) return;
  for (std::size_t i = 0; i + from.size() <= word.size(); ++i) {
    bool hit = true;
    for (std::size_t k = 0; k < from.size(); ++k) {
      if (word[i + k] != from[k]) {
        hit = false;
        break;
      }
    }
    if (!hit) continue;
    std::vector<int> next;
    next.reserve(word.size() - from.size() + to.size());
    next.insert(next.end(), word.begin(), word.begin() + i);
    next.insert(next.end(), to.begin(), to.end());
    next.insert(next.end(), word.begin() + i + from.size(), word.end());
    out.push_back(std::move(next));
  }
}

inline std::vector<std::vector<int>> neighbors(
    const std::vector<int>& word, const std::vector<Relation>& rels) {
  std::vector<std::vector<int>> out;
  for (const Relation& r : rels) {
    push_rewrites(word, r.white_path, r.black_path, out);
    push_rewrites(word, r.black_path, r.white_path, out);
  }
  return out;
}

}  // namespace detail

// For a perfect matching D, the number of arrows of a path lying in D is
// unchanged by rewrites: both sides of a relation meet each matching exactly
// once more than the differentiated arrow does.
inline std::vector<int> matching_degree_vector(const MatchingSet& ms,
                                               const std::vector<int>& path) {
  std::vector<int> deg(ms.count(), 0);
  for (int i = 0; i < ms.count(); ++i) {
    for (int a : path) {
      const std::vector<int>& d = ms.matchings[i];
      if (std::binary_search(d.begin(), d.end(), a)) ++deg[i];
    }
  }
  return deg;
}

// Decides whether two nonempty paths are connected by relation rewrites,
// by bidirectional breadth-first search bounded by max_expansions dequeues.
inline EquivalenceResult paths_equivalent(const QuiverData& q,
                                          const std::vector<Relation>& rels,
                                          const MatchingSet& ms,
                                          const std::vector<int>& p1,
                                          const std::vector<int>& p2,
                                          RewriteOptions opts = {}) {
  if (p1.empty() || p2.empty()) {
    throw std::invalid_argument("paths_equivalent needs nonempty paths");
  }
  if (!path_composable(q, p1) || !path_composable(q, p2)) {
    throw std::invalid_argument("paths_equivalent needs composable paths");
  }
  EquivalenceResult res;
  if (p1 == p2) {
    res.verdict = EquivalenceVerdict::Equivalent;
    res.distance = 0;
    res.reason = "identical words";
    return res;
  }
  if (path_source(q, p1) != path_source(q, p2) ||
      path_target(q, p1) != path_target(q, p2)) {
    res.verdict = EquivalenceVerdict::Inequivalent;
    res.reason = "endpoints differ";
    return res;
  }
  if (opts.use_invariants &&
      matching_degree_vector(ms, p1) != matching_degree_vector(ms, p2)) {
    res.verdict = EquivalenceVerdict::Inequivalent;
    res.reason = "matching degree vectors differ";
    return res;
  }

  // dist[s] maps word -> rewrite distance from p1 (side 0) or p2 (side 1).
  std::map<std::vector<int>, int> dist[2];
  std::deque<std::vector<int>> frontier[2];
  dist[0][p1] = 0;
  dist[1][p2] = 0;
  frontier[0].push_back(p1);
  frontier[1].push_back(p2);

  // A side whose frontier empties has its whole rewrite closure in dist[s];
  // the other start word is not in it (that would have met), so the words
  // lie in different closures.
  while (!frontier[0].empty() && !frontier[1].empty()) {
    int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (res.expansions >= opts.max_expansions) {
      res.verdict = EquivalenceVerdict::Unknown;
      res.reason = "rewrite bound exhausted";
      return res;
    }
    ++res.expansions;
    std::vector<int> word = std::move(frontier[s].front());
    frontier[s].pop_front();
    int d = dist[s][word];
    for (std::vector<int>& next : detail::neighbors(word, rels)) {
      auto other = dist[1 - s].find(next);
      if (other != dist[1 - s].end()) {
        res.verdict = EquivalenceVerdict::Equivalent;
        res.distance = d + 1 + other->second;
        res.reason = "rewrite chain found";
        return res;
      }
      if (dist[s].emplace(next, d + 1).second) {
        frontier[s].push_back(std::move(next));
      }
    }
  }
  res.verdict = EquivalenceVerdict::Inequivalent;
  res.reason = "rewrite closures are disjoint";
  return res;
}

}  // namespace dimer
