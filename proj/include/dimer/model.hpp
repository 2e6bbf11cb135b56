#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dimer {

enum class NodeColor { Black, White };

struct Node {
  std::string id;
  NodeColor color;
};

// Offset (dx, dy) is the deck translation applied to the white endpoint:
// the edge runs from the black node in the fundamental domain to the copy
// of the white node shifted by (dx, dy).
struct Edge {
  std::string id;
  int black = -1;
  int white = -1;
  int dx = 0;
  int dy = 0;
};

struct Rational {
  long long num = 0;
  long long den = 1;

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct DimerModel {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // rotation[n] lists the incident edge indices of node n in counterclockwise
  // cyclic order as seen on the torus.
  std::vector<std::vector<int>> rotation;
  // Optional embedded positions in the unit square, keyed by node index.
  std::vector<bool> has_pos;
  std::vector<std::pair<Rational, Rational>> pos;

  std::unordered_map<std::string, int> node_index;
  std::unordered_map<std::string, int> edge_index;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int black_count() const {
    int k = 0;
    for (const Node& n : nodes) {
      if (n.color == NodeColor::Black) ++k;
    }
    return k;
  }
  int white_count() const { return node_count() - black_count(); }
};

// A dart is an oriented edge: 2*e is the black-to-white traversal of edge e,
// 2*e + 1 the white-to-black one.
using DartId = int;

inline DartId make_dart(int edge, bool black_to_white) {
  return 2 * edge + (black_to_white ? 0 : 1);
}
inline int dart_edge(DartId d) { return d / 2; }
inline bool dart_black_to_white(DartId d) { return (d & 1) == 0; }
inline DartId dart_reverse(DartId d) { return d ^ 1; }

// The node the dart points into.
inline int dart_head(const DimerModel& m, DartId d) {
  const Edge& e = m.edges[dart_edge(d)];
  return dart_black_to_white(d) ? e.white : e.black;
}
// The node the dart leaves.
inline int dart_tail(const DimerModel& m, DartId d) {
  const Edge& e = m.edges[dart_edge(d)];
  return dart_black_to_white(d) ? e.black : e.white;
}

inline int rotation_index(const DimerModel& m, int node, int edge) {
  const std::vector<int>& rot = m.rotation[node];
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    if (rot[i] == edge) return i;
  }
  throw std::logic_error("edge not incident to node in rotation");
}

inline int rotation_succ(const DimerModel& m, int node, int edge) {
  const std::vector<int>& rot = m.rotation[node];
  int i = rotation_index(m, node, edge);
  return rot[(i + 1) % rot.size()];
}

inline int rotation_pred(const DimerModel& m, int node, int edge) {
  const std::vector<int>& rot = m.rotation[node];
  int i = rotation_index(m, node, edge);
  return rot[(i + rot.size() - 1) % rot.size()];
}

// Homology class of a dart: +offset when traversed black to white.
inline std::pair<int, int> dart_class(const DimerModel& m, DartId d) {
  const Edge& e = m.edges[dart_edge(d)];
  int s = dart_black_to_white(d) ? 1 : -1;
  return {s * e.dx, s * e.dy};
}

// Homology class of a closed walk of darts.  Throws if the walk is not a
// closed walk (consecutive darts must be head-to-tail, last back to first).
inline std::pair<int, int> homology_class(const DimerModel& m,
                                          const std::vector<DartId>& walk) {
  if (walk.empty()) throw std::invalid_argument("empty walk");
  int dx = 0;
  int dy = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    DartId d = walk[i];
    DartId next = walk[(i + 1) % walk.size()];
    if (dart_head(m, d) != dart_tail(m, next)) {
      throw std::invalid_argument("walk is not closed");
    }
    auto [cx, cy] = dart_class(m, d);
    dx += cx;
    dy += cy;
  }
  return {dx, dy};
}

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  return v;
}

inline Rational parse_rational(const std::string& tok, int line_no) {
  Rational r;
  std::size_t slash = tok.find('/');
  if (slash == std::string::npos) {
    r.num = parse_int(tok, line_no);
    r.den = 1;
  } else {
    r.num = parse_int(tok.substr(0, slash), line_no);
    r.den = parse_int(tok.substr(slash + 1), line_no);
    if (r.den == 0) throw ParseError(line_no, "zero denominator in '" + tok + "'");
  }
  r.normalize();
  return r;
}

}  // namespace detail

// Parses the textual model format:
//   dimer v1
//   node <id> black|white
//   edge <id> <black-node> <white-node> <dx> <dy>
//   rot <node> <edge>...
//   pos <node> <x> <y>
// Blank lines and lines starting with '#' are ignored.
inline DimerModel parse(const std::string& text) {
  DimerModel m;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::vector<int> rot_line_seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tok = detail::split_tokens(line);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (!saw_header) {
      if (tok.size() != 2 || tok[0] != "dimer" || tok[1] != "v1") {
        throw ParseError(line_no, "expected header 'dimer v1'");
      }
      saw_header = true;
      continue;
    }

    const std::string& kw = tok[0];
    if (kw == "node") {
      if (tok.size() != 3) throw ParseError(line_no, "node takes <id> <color>");
      if (m.node_index.count(tok[1])) {
        throw ParseError(line_no, "duplicate node id '" + tok[1] + "'");
      }
      NodeColor c;
      if (tok[2] == "black") {
        c = NodeColor::Black;
      } else if (tok[2] == "white") {
        c = NodeColor::White;
      } else {
        throw ParseError(line_no, "color must be black or white, got '" + tok[2] + "'");
      }
      m.node_index[tok[1]] = m.node_count();
      m.nodes.push_back({tok[1], c});
    } else if (kw == "edge") {
      if (tok.size() != 6) {
        throw ParseError(line_no, "edge takes <id> <black-node> <white-node> <dx> <dy>");
      }
      if (m.edge_index.count(tok[1])) {
        throw ParseError(line_no, "duplicate edge id '" + tok[1] + "'");
      }
      Edge e;
      e.id = tok[1];
      auto bi = m.node_index.find(tok[2]);
      if (bi == m.node_index.end()) {
        throw ParseError(line_no, "unknown node '" + tok[2] + "'");
      }
      auto wi = m.node_index.find(tok[3]);
      if (wi == m.node_index.end()) {
        throw ParseError(line_no, "unknown node '" + tok[3] + "'");
      }
      e.black = bi->second;
      e.white = wi->second;
      if (m.nodes[e.black].color != NodeColor::Black) {
        throw ParseError(line_no, "node '" + tok[2] + "' is not black");
      }
      if (m.nodes[e.white].color != NodeColor::White) {
        throw ParseError(line_no, "node '" + tok[3] + "' is not white");
      }
      e.dx = static_cast<int>(detail::parse_int(tok[4], line_no));
      e.dy = static_cast<int>(detail::parse_int(tok[5], line_no));
      m.edge_index[e.id] = m.edge_count();
      m.edges.push_back(e);
    } else if (kw == "rot") {
      if (tok.size() < 2) throw ParseError(line_no, "rot takes <node> <edge>...");
      auto ni = m.node_index.find(tok[1]);
      if (ni == m.node_index.end()) {
        throw ParseError(line_no, "unknown node '" + tok[1] + "'");
      }
      int n = ni->second;
      m.rotation.resize(m.node_count());
      rot_line_seen.resize(m.node_count(), 0);
      if (rot_line_seen[n]) {
        throw ParseError(line_no, "duplicate rot line for node '" + tok[1] + "'");
      }
      rot_line_seen[n] = line_no;
      std::vector<int>& rot = m.rotation[n];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto ei = m.edge_index.find(tok[i]);
        if (ei == m.edge_index.end()) {
          throw ParseError(line_no, "unknown edge '" + tok[i] + "'");
        }
        int e = ei->second;
        const Edge& edge = m.edges[e];
        if (edge.black != n && edge.white != n) {
          throw ParseError(line_no, "edge '" + tok[i] + "' is not incident to node '" +
                                        tok[1] + "'");
        }
        for (int prev : rot) {
          if (prev == e) {
            throw ParseError(line_no, "edge '" + tok[i] + "' listed twice");
          }
        }
        rot.push_back(e);
      }
    } else if (kw == "pos") {
      if (tok.size() != 4) throw ParseError(line_no, "pos takes <node> <x> <y>");
      auto ni = m.node_index.find(tok[1]);
      if (ni == m.node_index.end()) {
        throw ParseError(line_no, "unknown node '" + tok[1] + "'");
      }
      int n = ni->second;
      m.has_pos.resize(m.node_count(), false);
      m.pos.resize(m.node_count());
      if (m.has_pos[n]) {
        throw ParseError(line_no, "duplicate pos line for node '" + tok[1] + "'");
      }
      m.has_pos[n] = true;
      m.pos[n] = {detail::parse_rational(tok[2], line_no),
                  detail::parse_rational(tok[3], line_no)};
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }

  if (!saw_header) throw ParseError(line_no, "missing header 'dimer v1'");

  m.rotation.resize(m.node_count());
  m.has_pos.resize(m.node_count(), false);
  m.pos.resize(m.node_count());

  // Every node must list exactly its incident edges, each once.
  std::vector<int> degree(m.node_count(), 0);
  for (const Edge& e : m.edges) {
    ++degree[e.black];
    ++degree[e.white];
  }
  for (int n = 0; n < m.node_count(); ++n) {
    if (degree[n] == 0) {
      throw ParseError(line_no, "node '" + m.nodes[n].id + "' has no incident edges");
    }
    if (static_cast<int>(m.rotation[n].size()) != degree[n]) {
      throw ParseError(line_no, "rot for node '" + m.nodes[n].id + "' lists " +
                                    std::to_string(m.rotation[n].size()) +
                                    " edges, expected " + std::to_string(degree[n]));
    }
  }
  return m;
}

inline std::string rational_to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Canonical text form; parse(serialize(m)) reproduces m exactly.
inline std::string serialize(const DimerModel& m) {
  std::ostringstream out;
  out << "dimer v1\n";
  for (const Node& n : m.nodes) {
    out << "node " << n.id << ' '
        << (n.color == NodeColor::Black ? "black" : "white") << '\n';
  }
  for (const Edge& e : m.edges) {
    out << "edge " << e.id << ' ' << m.nodes[e.black].id << ' '
        << m.nodes[e.white].id << ' ' << e.dx << ' ' << e.dy << '\n';
  }
  for (int n = 0; n < m.node_count(); ++n) {
    out << "rot " << m.nodes[n].id;
    for (int e : m.rotation[n]) out << ' ' << m.edges[e].id;
    out << '\n';
  }
  for (int n = 0; n < m.node_count(); ++n) {
    if (!m.has_pos[n]) continue;
    out << "pos " << m.nodes[n].id << ' ' << rational_to_string(m.pos[n].first)
        << ' ' << rational_to_string(m.pos[n].second) << '\n';
  }
  return out.str();
}

}  // namespace dimer
