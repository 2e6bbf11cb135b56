#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dimer/catalog.hpp"
#include "dimer/directed.hpp"
#include "dimer/matchings.hpp"
#include "dimer/model.hpp"
#include "dimer/quiver.hpp"
#include "dimer/render.hpp"
#include "dimer/report.hpp"

namespace {

struct LoadedModel {
  dimer::DimerModel model;
  std::string source;  // catalog name or file path
  std::string stem;    // basename for output files
};

LoadedModel load_model(const std::string& name_or_path) {
  if (const dimer::CatalogEntry* e = dimer::catalog_find(name_or_path)) {
    return {dimer::parse(e->text), name_or_path, name_or_path};
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::runtime_error("cannot open '" + name_or_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  std::string stem = std::filesystem::path(name_or_path).stem().string();
  return {dimer::parse(text.str()), name_or_path, stem};
}

int run_report(const std::string& name_or_path, const dimer::ReportOptions& opts) {
  LoadedModel lm = load_model(name_or_path);
  auto start = std::chrono::steady_clock::now();
  dimer::ReportResult result = dimer::build_report(lm.model, lm.source, opts);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "report built in " << elapsed.count() << " ms\n";
  std::cout << result.json.dump(2) << "\n";
  return result.pass ? 0 : 1;
}

int run_render(const std::string& name_or_path, const std::string& target,
               const std::string& out_dir) {
  LoadedModel lm = load_model(name_or_path);
  std::string content;
  std::string suffix;
  if (target == "quiver-dot") {
    dimer::QuiverData q = dimer::dual_quiver(lm.model);
    content = dimer::render_quiver_dot(lm.model, q);
    suffix = ".quiver.dot";
  } else if (target == "model-svg") {
    content = dimer::render_model_svg(lm.model);
    suffix = ".model.svg";
  } else {
    content = dimer::render_surface_svg(lm.model);
    suffix = ".surface.svg";
  }
  std::filesystem::path path = std::filesystem::path(out_dir) / (lm.stem + suffix);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  out.close();
  std::cout << path.string() << "\n";
  return 0;
}

int run_catalog() {
  bool drift = false;
  for (const dimer::CatalogEntry& entry : dimer::catalog()) {
    dimer::DimerModel m = dimer::parse(entry.text);
    dimer::QuiverData q = dimer::dual_quiver(m);
    dimer::MatchingSet ms = dimer::enumerate_matchings(m);
    int internal = 0;
    for (const auto& matching : ms.matchings) {
      if (dimer::is_internal(q, matching)) ++internal;
    }
    dimer::CatalogStats got{m.black_count(), m.white_count(), m.edge_count(),
                            q.faces.face_count(), ms.count(), internal};
    bool ok = got == entry.expected;
    if (!ok) drift = true;
    std::cout << entry.name << ": black " << got.black << ", white "
              << got.white << ", edges " << got.edges << ", faces "
              << got.faces << ", matchings " << got.matchings << " ("
              << got.internal << " internal)"
              << (ok ? "" : "  [MISMATCH with recorded stats]") << "\n";
  }
  return drift ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimer model toolkit: quivers, matchings, and Fukaya checks"};
  app.require_subcommand(1);

  std::string model_spec;
  dimer::ReportOptions ropts;
  CLI::App* report = app.add_subcommand(
      "report", "run the full verification pipeline and print a JSON report");
  report->add_option("model", model_spec, "catalog entry name or .dimer file path")
      ->required();
  report->add_option("--max-rewrite-steps", ropts.max_rewrite_steps,
                     "expansion budget for the path-equivalence search");
  report->add_option("--relation-bound", ropts.relation_bound,
                     "override the arity bound for quadratic-relation checks");
  report->add_option("--matching", ropts.matching,
                     "restrict directed sections to one matching index");

  std::string render_spec;
  std::string render_target;
  std::string out_dir = ".";
  CLI::App* render = app.add_subcommand("render", "write a visualization file");
  render->add_option("model", render_spec, "catalog entry name or .dimer file path")
      ->required();
  render
      ->add_option("target", render_target,
                   "one of: quiver-dot, model-svg, surface-svg")
      ->required()
      ->check(CLI::IsMember({"quiver-dot", "model-svg", "surface-svg"}));
  render->add_option("--out", out_dir, "output directory");

  CLI::App* catalog = app.add_subcommand(
      "catalog", "list bundled models and check their recorded statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report->parsed()) return run_report(model_spec, ropts);
    if (render->parsed()) return run_render(render_spec, render_target, out_dir);
    if (catalog->parsed()) return run_catalog();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
