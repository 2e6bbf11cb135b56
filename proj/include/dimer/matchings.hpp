#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "dimer/model.hpp"

namespace dimer {

struct MatchingSet {
  // Each matching is a sorted list of edge indices; the list of matchings is
  // sorted lexicographically, and matchings[0] serves as the reference.
  std::vector<std::vector<int>> matchings;
  // classes[i] = sum of offsets over matchings[i] minus the same sum over the
  // reference matching.
  std::vector<std::pair<int, int>> classes;

  int count() const { return static_cast<int>(matchings.size()); }
};

namespace detail {

inline void extend_matching(const DimerModel& m,
                            const std::vector<std::vector<int>>& black_edges,
                            std::size_t black_pos, std::vector<char>& white_used,
                            std::vector<int>& chosen,
                            std::vector<std::vector<int>>& out) {
  if (black_pos == black_edges.size()) {
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  for (int e : black_edges[black_pos]) {
    int w = m.edges[e].white;
    if (white_used[w]) continue;
    white_used[w] = 1;
    chosen.push_back(e);
    extend_matching(m, black_edges, black_pos + 1, white_used, chosen, out);
    chosen.pop_back();
    white_used[w] = 0;
  }
}

}  // namespace detail

// Enumerates all perfect matchings by assigning one edge to each black node.
inline MatchingSet enumerate_matchings(const DimerModel& m) {
  MatchingSet ms;
  if (m.black_count() != m.white_count()) return ms;

  std::vector<std::vector<int>> black_edges(m.node_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    black_edges[m.edges[e].black].push_back(e);
  }
  std::vector<std::vector<int>> per_black;
  for (int n = 0; n < m.node_count(); ++n) {
    if (m.nodes[n].color == NodeColor::Black) per_black.push_back(black_edges[n]);
  }

  std::vector<char> white_used(m.node_count(), 0);
  std::vector<int> chosen;
  detail::extend_matching(m, per_black, 0, white_used, chosen, ms.matchings);
  std::sort(ms.matchings.begin(), ms.matchings.end());

  if (ms.count() == 0) return ms;
  auto offset_sum = [&](const std::vector<int>& d) {
    std::pair<int, int> s{0, 0};
    for (int e : d) {
      s.first += m.edges[e].dx;
      s.second += m.edges[e].dy;
    }
    return s;
  };
  std::pair<int, int> ref = offset_sum(ms.matchings[0]);
  for (const std::vector<int>& d : ms.matchings) {
    std::pair<int, int> s = offset_sum(d);
    ms.classes.emplace_back(s.first - ref.first, s.second - ref.second);
  }
  return ms;
}

// Edges that occur in no perfect matching, sorted by index.
inline std::vector<int> unmatchable_edges(const DimerModel& m,
                                          const MatchingSet& ms) {
  std::vector<char> used(m.edge_count(), 0);
  for (const std::vector<int>& d : ms.matchings) {
    for (int e : d) used[e] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (!used[e]) out.push_back(e);
  }
  return out;
}

namespace detail {

inline long long cross(std::pair<int, int> o, std::pair<int, int> a,
                       std::pair<int, int> b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace detail

// Counterclockwise convex hull starting at the lexicographically smallest
// point; collinear boundary points are dropped.
inline std::vector<std::pair<int, int>> convex_hull(
    std::vector<std::pair<int, int>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<std::pair<int, int>> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 &&
           detail::cross(lower[lower.size() - 2], lower.back(), p) <= 0) {
      lower.pop_back();
    }
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 &&
           detail::cross(upper[upper.size() - 2], upper.back(), *it) <= 0) {
      upper.pop_back();
    }
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

struct MatchingPolygon {
  // Normalized matching classes (shifted so both coordinate minima are 0)
  // with the number of matchings realizing each point.
  std::map<std::pair<int, int>, int> multiplicity;
  // Counterclockwise hull of the support.
  std::vector<std::pair<int, int>> hull;
  // The shift added to raw classes during normalization.
  std::pair<int, int> shift{0, 0};

  bool strictly_inside(std::pair<int, int> p) const {
    if (hull.size() < 3) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (detail::cross(hull[i], hull[(i + 1) % hull.size()], p) <= 0) return false;
    }
    return true;
  }
};

inline MatchingPolygon matching_polygon(const MatchingSet& ms) {
  MatchingPolygon poly;
  if (ms.count() == 0) return poly;
  int min_x = ms.classes[0].first;
  int min_y = ms.classes[0].second;
  for (const auto& c : ms.classes) {
    min_x = std::min(min_x, c.first);
    min_y = std::min(min_y, c.second);
  }
  poly.shift = {-min_x, -min_y};
  std::vector<std::pair<int, int>> pts;
  for (const auto& c : ms.classes) {
    std::pair<int, int> p{c.first - min_x, c.second - min_y};
    ++poly.multiplicity[p];
    pts.push_back(p);
  }
  poly.hull = convex_hull(std::move(pts));
  return poly;
}

}  // namespace dimer
