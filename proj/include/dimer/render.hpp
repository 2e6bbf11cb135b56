#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dimer/fukaya.hpp"
#include "dimer/model.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

namespace detail {

// Fixed-precision formatting keeps renders byte-stable across platforms.
inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

// Graphviz source for the dual quiver: one node per face, one labeled arrow
// per dimer edge.
inline std::string render_quiver_dot(const DimerModel& m, const QuiverData& q) {
  std::string out = "digraph quiver {\n";
  for (int v = 0; v < q.vertex_count; ++v) {
    out += "  f" + std::to_string(v) + ";\n";
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    out += "  f" + std::to_string(q.arrows[e].src) + " -> f" +
           std::to_string(q.arrows[e].tgt) + " [label=\"" + m.edges[e].id +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

// Fundamental-domain picture of an embedded model.  Requires positions for
// every node; edges run from the black endpoint to the white endpoint
// shifted by the edge's deck translation.
inline std::string render_model_svg(const DimerModel& m) {
  for (int n = 0; n < m.node_count(); ++n) {
    if (!m.has_pos[n]) {
      throw std::invalid_argument("node '" + m.nodes[n].id +
                                  "' has no position; cannot render embedding");
    }
  }
  const double scale = 240.0;
  const double margin = 60.0;
  auto px = [&](double x) { return margin + scale * x; };
  // SVG y grows downward; flip so the square reads with y upward.
  auto py = [&](double y) { return margin + scale * (1.0 - y); };
  auto coord = [&](int n) {
    double x = static_cast<double>(m.pos[n].first.num) / m.pos[n].first.den;
    double y = static_cast<double>(m.pos[n].second.num) / m.pos[n].second.den;
    return std::pair<double, double>{x, y};
  };

  double side = margin * 2 + scale;
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      detail::fmt2(side) + "\" height=\"" + detail::fmt2(side) + "\">\n";
  out += "  <rect x=\"" + detail::fmt2(margin) + "\" y=\"" +
         detail::fmt2(margin) + "\" width=\"" + detail::fmt2(scale) +
         "\" height=\"" + detail::fmt2(scale) +
         "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"6 4\"/>\n";
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [bx, by] = coord(m.edges[e].black);
    auto [wx, wy] = coord(m.edges[e].white);
    wx += m.edges[e].dx;
    wy += m.edges[e].dy;
    out += "  <line x1=\"" + detail::fmt2(px(bx)) + "\" y1=\"" +
           detail::fmt2(py(by)) + "\" x2=\"" + detail::fmt2(px(wx)) +
           "\" y2=\"" + detail::fmt2(py(wy)) +
           "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
    out += "  <text x=\"" + detail::fmt2((px(bx) + px(wx)) / 2 + 4) +
           "\" y=\"" + detail::fmt2((py(by) + py(wy)) / 2 - 4) +
           "\" font-size=\"11\" fill=\"#884444\">" + m.edges[e].id +
           "</text>\n";
  }
  for (int n = 0; n < m.node_count(); ++n) {
    auto [x, y] = coord(n);
    bool black = m.nodes[n].color == NodeColor::Black;
    out += "  <circle cx=\"" + detail::fmt2(px(x)) + "\" cy=\"" +
           detail::fmt2(py(y)) + "\" r=\"7\" fill=\"" +
           (black ? std::string("#000000") : std::string("#ffffff")) +
           "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    out += "  <text x=\"" + detail::fmt2(px(x) + 10) + "\" y=\"" +
           detail::fmt2(py(y) - 10) + "\" font-size=\"12\">" + m.nodes[n].id +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

// Ribbon-surface picture: one disk per node with its incident edge slots in
// rotation order, and one chord per boundary-walk transit through the disk,
// colored by boundary orbit.  The number of distinct colors equals the
// number of boundary circles of the twisted surface.
inline std::string render_surface_svg(const DimerModel& m) {
  RibbonSurface surf = build_surface(m);
  std::vector<int> orbit_of(2 * m.edge_count(), -1);
  for (int i = 0; i < static_cast<int>(surf.orbits.size()); ++i) {
    for (DartId d : surf.orbits[i]) orbit_of[d] = i;
  }
  static const char* palette[] = {"#c04040", "#4070c0", "#40a060", "#b08030",
                                  "#8050b0", "#308f8f", "#b05080", "#607030"};
  const int palette_size = 8;

  int cols = 1;
  while (cols * cols < m.node_count()) ++cols;
  const double cell = 150.0;
  const double radius = 46.0;
  auto center = [&](int n) {
    return std::pair<double, double>{cell * (n % cols) + cell / 2,
                                     cell * (n / cols) + cell / 2};
  };
  auto slot = [&](int n, int i) {
    int k = static_cast<int>(m.rotation[n].size());
    // Counterclockwise slots; SVG y points down, so negate the sine.
    double ang = 2.0 * 3.14159265358979323846 * i / k;
    auto [cx, cy] = center(n);
    return std::pair<double, double>{cx + radius * std::cos(ang),
                                     cy - radius * std::sin(ang)};
  };

  double width = cell * cols;
  double height = cell * ((m.node_count() + cols - 1) / cols);
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      detail::fmt2(width) + "\" height=\"" + detail::fmt2(height) + "\">\n";
  for (int n = 0; n < m.node_count(); ++n) {
    auto [cx, cy] = center(n);
    bool black = m.nodes[n].color == NodeColor::Black;
    out += "  <circle cx=\"" + detail::fmt2(cx) + "\" cy=\"" +
           detail::fmt2(cy) + "\" r=\"" + detail::fmt2(radius) +
           "\" fill=\"none\" stroke=\"#888888\"/>\n";
    out += "  <text x=\"" + detail::fmt2(cx - 8) + "\" y=\"" +
           detail::fmt2(cy + 4) + "\" font-size=\"12\" fill=\"" +
           (black ? std::string("#000000") : std::string("#999999")) + "\">" +
           m.nodes[n].id + "</text>\n";
    for (int i = 0; i < static_cast<int>(m.rotation[n].size()); ++i) {
      auto [sx, sy] = slot(n, i);
      out += "  <circle cx=\"" + detail::fmt2(sx) + "\" cy=\"" +
             detail::fmt2(sy) + "\" r=\"2.5\" fill=\"#333333\"/>\n";
      out += "  <text x=\"" + detail::fmt2(sx + 4) + "\" y=\"" +
             detail::fmt2(sy - 4) + "\" font-size=\"10\" fill=\"#555555\">" +
             m.edges[m.rotation[n][i]].id + "</text>\n";
    }
  }
  // A boundary walk enters a disk along one slot and leaves along the slot
  // of the twisted successor; draw that transit as a chord.
  for (DartId d = 0; d < 2 * m.edge_count(); ++d) {
    int n = dart_head(m, d);
    DartId next = twisted_next(m, d);
    auto [ax, ay] = slot(n, rotation_index(m, n, dart_edge(d)));
    auto [bx, by] = slot(n, rotation_index(m, n, dart_edge(next)));
    const char* color = palette[orbit_of[d] % palette_size];
    out += "  <line x1=\"" + detail::fmt2(ax) + "\" y1=\"" +
           detail::fmt2(ay) + "\" x2=\"" + detail::fmt2(bx) + "\" y2=\"" +
           detail::fmt2(by) + "\" stroke=\"" + color +
           "\" stroke-width=\"1.2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dimer
