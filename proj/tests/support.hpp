#pragma once

// Helpers shared by the doctest suites.

#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <string>

#include "klein/codes.hpp"
#include "klein/error.hpp"

namespace klein::test {

inline ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidField;
}

/// Values computed by the independent oracle in tests/oracle/derive.py.
inline const nlohmann::json& derived() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(KLEIN_SOURCE_DIR) + "/tests/oracle/derived.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
  }();
  return j;
}

}  // namespace klein::test
