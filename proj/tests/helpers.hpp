#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "nodal/construct.hpp"
#include "nodal/io.hpp"

#ifndef NODAL_DATA_DIR
#error "NODAL_DATA_DIR must point at the shipped data directory"
#endif

namespace helpers {

inline std::string data_path(const std::string& name) { return std::string(NODAL_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nodal::NodalDatum load(const std::string& name) { return nodal::parse_datum(read_data(name)); }

inline std::shared_ptr<const nodal::Presentation> built(const nodal::NodalDatum& d) {
  return std::make_shared<const nodal::Presentation>(nodal::build_presentation(d).presentation);
}

inline std::shared_ptr<const nodal::Presentation> hereditary(const nodal::Quiver& q) {
  return std::make_shared<const nodal::Presentation>(q, std::vector<nodal::Relation>{});
}

inline std::vector<std::string> relation_lines(const nodal::Presentation& p) {
  std::vector<std::string> out;
  const auto canonical = p.canonical();
  for (const auto& r : canonical.relations()) out.push_back(nodal::relation_string(p.quiver(), r));
  return out;
}

}  // namespace helpers
