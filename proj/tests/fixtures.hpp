#pragma once

#include <string>

#include "sgb/fp_matrix.hpp"
#include "sgb/linear_code.hpp"

inline std::string fixture(const std::string& name) { return std::string(SGB_FIXTURE_DIR) + "/" + name; }

inline sgb::LinearCode fixture_code(const std::string& tag) {
  return sgb::LinearCode(sgb::load_matrix(fixture("a_" + tag + ".txt")));
}
