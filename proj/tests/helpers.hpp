#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dimer/catalog.hpp"
#include "dimer/model.hpp"

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline dimer::DimerModel catalog_model(const std::string& name) {
  const dimer::CatalogEntry* e = dimer::catalog_find(name);
  if (!e) throw std::runtime_error("missing catalog entry " + name);
  return dimer::parse(e->text);
}

inline dimer::DartId dart_by_name(const dimer::DimerModel& m, const std::string& edge,
                                  bool black_to_white) {
  return dimer::make_dart(m.edge_index.at(edge), black_to_white);
}
