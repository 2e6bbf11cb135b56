#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dimer/ainf.hpp"
#include "dimer/ainf_verify.hpp"
#include "dimer/catalog.hpp"
#include "dimer/consistency.hpp"
#include "dimer/directed.hpp"
#include "dimer/faces.hpp"
#include "dimer/fukaya.hpp"
#include "dimer/matchings.hpp"
#include "dimer/model.hpp"
#include "dimer/quiver.hpp"
#include "dimer/rewrite.hpp"
#include "dimer/zigzag.hpp"

namespace dimer {

using ordered_json = nlohmann::ordered_json;

struct ReportOptions {
  long long max_rewrite_steps = 10000;
  int relation_bound = 0;  // 0 keeps the default exhaustive bound
  int matching = -1;       // restrict directed sections to one matching index
};

struct ReportResult {
  ordered_json json;
  bool pass = true;
};

inline ordered_json violations_to_json(const VerificationReport& rep) {
  ordered_json out;
  out["checked"] = rep.checked;
  out["violations"] = ordered_json::array();
  for (const Violation& v : rep.violations) {
    out["violations"].push_back({{"check", v.check}, {"witness", v.witness}});
  }
  return out;
}

// Sorted, fully named dump of an operation table, for golden-file tests.
// Keys are listed in first-applied order.
inline ordered_json ops_to_json(const AInfCategory& c, const OpsTable& ops) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, combo] : ops) {
    ordered_json entry;
    entry["inputs_first_applied"] = ordered_json::array();
    for (int x : key) entry["inputs_first_applied"].push_back(c.basis[x].name);
    entry["value"] = ordered_json::object();
    for (const auto& [b, coeff] : combo) {
      if (coeff != 0) entry["value"][c.basis[b].name] = coeff;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

inline ReportResult build_report(const DimerModel& m,
                                 const std::string& source,
                                 const ReportOptions& opts = {}) {
  ReportResult result;
  ordered_json& r = result.json;
  std::vector<std::string> notices;

  r["schema"] = 1;
  r["model"] = {{"source", source},
                {"black", m.black_count()},
                {"white", m.white_count()},
                {"edges", m.edge_count()}};

  std::vector<std::string> problems = validate(m);
  r["validation"] = {{"ok", problems.empty()}, {"problems", problems}};
  if (!problems.empty()) {
    result.pass = false;
    r["verdict"] = "fail";
    return result;
  }

  QuiverData q = dual_quiver(m);
  r["model"]["faces"] = q.faces.face_count();

  ordered_json arrows = ordered_json::array();
  for (int e = 0; e < m.edge_count(); ++e) {
    arrows.push_back({{"edge", m.edges[e].id},
                      {"src", q.arrows[e].src},
                      {"tgt", q.arrows[e].tgt}});
  }
  r["quiver"] = {{"vertices", q.vertex_count}, {"arrows", arrows}};

  auto edge_names = [&](const std::vector<int>& edges) {
    ordered_json names = ordered_json::array();
    for (int e : edges) names.push_back(m.edges[e].id);
    return names;
  };

  Potential pot = build_potential(m, q);
  ordered_json pterms = ordered_json::array();
  for (const CyclicTerm& t : pot.terms) {
    pterms.push_back({{"sign", t.coeff}, {"cycle", edge_names(t.arrows)}});
  }
  r["potential"] = pterms;

  std::vector<Relation> rels = build_relations(m, q);
  ordered_json jrels = ordered_json::array();
  for (const Relation& rel : rels) {
    jrels.push_back({{"arrow", m.edges[rel.arrow].id},
                     {"white", edge_names(rel.white_path)},
                     {"black", edge_names(rel.black_path)}});
  }
  r["relations"] = jrels;

  ZigzagData zz = trace_zigzags(m);
  ordered_json jclasses = ordered_json::array();
  for (auto [a, b] : zz.classes) jclasses.push_back({a, b});
  r["zigzags"] = {{"count", zz.path_count()}, {"classes", jclasses}};

  MatchingSet ms = enumerate_matchings(m);
  ConsistencyReport cons = check_consistency(m, ms, zz);
  ordered_json jrepeated = ordered_json::array();
  for (const auto& [z, edge] : cons.repeated) jrepeated.push_back({z, edge});
  r["consistency"] = {{"verdict", cons.verdict()},
                      {"unmatchable_edges", cons.unmatchable},
                      {"null_zigzags", cons.null_zigzags},
                      {"repeated_edge_zigzags", jrepeated}};
  if (!cons.consistent()) result.pass = false;

  std::vector<int> internal_indices;
  ordered_json jmatch = ordered_json::array();
  for (int i = 0; i < ms.count(); ++i) {
    bool internal = is_internal(q, ms.matchings[i]);
    if (internal) internal_indices.push_back(i);
    jmatch.push_back({{"edges", edge_names(ms.matchings[i])},
                      {"class", {ms.classes[i].first, ms.classes[i].second}},
                      {"internal", internal}});
  }
  r["matchings"] = {{"count", ms.count()}, {"list", jmatch}};

  MatchingPolygon poly = matching_polygon(ms);
  ordered_json jhull = ordered_json::array();
  for (auto [x, y] : poly.hull) jhull.push_back({x, y});
  ordered_json jpoints = ordered_json::array();
  for (const auto& [p, mult] : poly.multiplicity) {
    jpoints.push_back({{"at", {p.first, p.second}}, {"count", mult}});
  }
  // Matchings whose class lies strictly inside the polygon but which are
  // not internal; informational only.
  ordered_json interior_not_internal = ordered_json::array();
  for (int i = 0; i < ms.count(); ++i) {
    std::pair<int, int> shifted = {ms.classes[i].first + poly.shift.first,
                                   ms.classes[i].second + poly.shift.second};
    if (poly.strictly_inside(shifted) && !is_internal(q, ms.matchings[i])) {
      interior_not_internal.push_back(i);
    }
  }
  r["polygon"] = {{"hull", jhull},
                  {"points", jpoints},
                  {"interior_not_internal", interior_not_internal}};

  RewriteOptions ropts;
  ropts.max_expansions = opts.max_rewrite_steps;
  ordered_json jrw = ordered_json::array();
  bool all_equivalent = true;
  for (const Relation& rel : rels) {
    EquivalenceResult res =
        paths_equivalent(q, rels, ms, rel.white_path, rel.black_path, ropts);
    if (res.verdict != EquivalenceVerdict::Equivalent) all_equivalent = false;
    jrw.push_back({{"arrow", m.edges[rel.arrow].id},
                   {"verdict", to_string(res.verdict)},
                   {"distance", res.distance}});
  }
  r["rewrite_check"] = {{"max_steps", opts.max_rewrite_steps},
                        {"relations", jrw},
                        {"all_equivalent", all_equivalent}};
  if (!all_equivalent) result.pass = false;

  RibbonSurface surf = build_surface(m);
  r["surface"] = {{"boundary_orbits", static_cast<int>(surf.orbits.size())},
                  {"euler", surf.euler},
                  {"genus", surf.genus}};

  VanishingCycles vc = vanishing_cycles(m, q);
  ordered_json jpairs = ordered_json::array();
  int total_points = 0;
  for (int v = 0; v < q.faces.face_count(); ++v) {
    for (int w = v; w < q.faces.face_count(); ++w) {
      int count = intersection_count(vc, q, v, w);
      total_points += count;
      if (count > 0) jpairs.push_back({v, w, count});
    }
  }
  bool loops = false;
  for (const Arrow& a : q.arrows) {
    if (a.src == a.tgt) loops = true;
  }
  bool self_crossing = false;
  for (int cnt : vc.self_count) {
    if (cnt > 0) self_crossing = true;
  }
  bool three_way = (self_crossing == loops) &&
                   (loops == internal_indices.empty());
  r["cycles"] = {{"self_crossings", vc.self_count},
                 {"pairwise", jpairs},
                 {"total", total_points},
                 {"three_way_consistent", three_way}};
  if (total_points != m.edge_count() || !three_way) result.pass = false;

  AInfCategory cat;
  try {
    cat = build_category(m, q);
  } catch (const std::invalid_argument& e) {
    notices.push_back(std::string("category construction failed: ") + e.what());
    result.pass = false;
    r["notices"] = notices;
    r["verdict"] = "fail";
    return result;
  }
  VerificationReport quad = verify_ainf_relations(cat, opts.relation_bound);
  VerificationReport degbal = check_degree_balance(cat);
  VerificationReport cyc = verify_cyclicity(cat);
  r["category"] = {{"basis", cat.basis_count()},
                   {"operations", static_cast<int>(cat.ops.size())},
                   {"max_valence", cat.max_valence},
                   {"relation_bound",
                    opts.relation_bound > 0 ? opts.relation_bound
                                            : 2 * cat.max_valence - 1},
                   {"quadratic", violations_to_json(quad)},
                   {"degree_balance", violations_to_json(degbal)},
                   {"cyclicity", violations_to_json(cyc)}};
  if (!quad.ok() || !degbal.ok() || !cyc.ok()) result.pass = false;

  std::vector<int> selected = internal_indices;
  if (opts.matching >= 0) {
    if (opts.matching >= ms.count()) {
      throw std::invalid_argument("matching index out of range");
    }
    selected.clear();
    if (is_internal(q, ms.matchings[opts.matching])) {
      selected.push_back(opts.matching);
    } else {
      notices.push_back("matching " + std::to_string(opts.matching) +
                        " is not internal; directed sections skipped");
    }
  }

  ordered_json jdir = ordered_json::array();
  for (int idx : selected) {
    const std::vector<int>& matching = ms.matchings[idx];
    DirectedQuiver dq = directed_quiver(q, rels, matching);
    DirectedCategory alg = directed_subcategory(cat, dq.order);
    DirectedCategory fuk = build_directed_fukaya(m, q, cat, matching, dq.order);
    ComparisonReport cmp = compare_categories(cat, alg, fuk);
    MaslovData maslov = assign_maslov(m, q, matching, dq.order);
    TrivialExtensionReport ext = verify_trivial_extension(cat, alg);
    VerificationReport dirquad =
        verify_ainf_relations(cat, opts.relation_bound, &alg.ops, &alg.survives);

    int index1 = 0, index2 = 0;
    for (const auto& p : maslov.points) {
      (p.maslov == 1 ? index1 : index2) += 1;
    }
    ordered_json entry;
    entry["matching"] = idx;
    entry["edges"] = edge_names(matching);
    entry["order"] = dq.order;
    entry["objects"] = alg.object_sequence;
    entry["arrows"] = static_cast<int>(dq.arrows.size());
    entry["relations"] = static_cast<int>(dq.relations.size());
    entry["maslov"] = {{"index1", index1},
                       {"index2", index2},
                       {"disk_degrees", violations_to_json(maslov.degree_check)}};
    entry["quadratic"] = violations_to_json(dirquad);
    ordered_json jmis = ordered_json::array();
    for (const std::string& s : cmp.mismatches) jmis.push_back(s);
    entry["comparison"] = {{"ok", cmp.ok()}, {"mismatches", jmis}};
    entry["trivial_extension"] = {
        {"ok", ext.report.ok()},
        {"orphans", static_cast<int>(ext.orphans.size())}};
    jdir.push_back(std::move(entry));
    if (!cmp.ok() || !maslov.degree_check.ok() || !ext.report.ok() ||
        !dirquad.ok()) {
      result.pass = false;
    }
  }
  r["directed"] = jdir;
  if (internal_indices.empty()) {
    notices.push_back("no internal matchings; Fukaya comparison skipped");
  }

  r["notices"] = notices;
  r["verdict"] = result.pass ? "pass" : "fail";
  return result;
}

}  // namespace dimer
