#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "classcut/ingest.hpp"

inline std::string fixture_path(const std::string &name) {
  return std::string(CLASSCUT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline classcut::ClassGraph load_cdl_fixture(const std::string &name) {
  return classcut::parse_cdl(read_file(fixture_path(name)));
}

inline classcut::MatrixDocument load_csv_fixture(const std::string &name) {
  return classcut::parse_matrix_csv(read_file(fixture_path(name)));
}
