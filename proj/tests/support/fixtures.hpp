#pragma once

#include "psums/types.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace psums::testing {

/// Reference values written by tests/oracle/generate_fixtures.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(PSUMS_FIXTURE_DIR) + "/oracle.json");
    if (!in) throw std::runtime_error("missing fixture file oracle.json");
    nlohmann::json out;
    in >> out;
    return out;
  }();
  return j;
}

inline Complex as_complex(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

inline double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace psums::testing
