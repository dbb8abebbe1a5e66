#pragma once

#include <string>

#include "wiegold/algebra.hpp"

inline wiegold::FiniteAlgebra fixture(const std::string& name) {
  return wiegold::load_algebra_file(std::string(WIEGOLD_FIXTURES) +
                                    "/algebras/" + name + ".json");
}

inline std::string fixture_path(const std::string& rel) {
  return std::string(WIEGOLD_FIXTURES) + "/" + rel;
}
