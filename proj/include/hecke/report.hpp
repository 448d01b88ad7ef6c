#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hecke/proj_matrix.hpp"

namespace hecke {

/// Outcome of one named check on one determinant.
///
/// A failing report always carries a witness: the first offending key in
/// lexicographic order together with the value found there.
struct CheckReport {
  std::string check;
  std::string subject;
  long n = 0;
  bool pass = false;
  nlohmann::json witness;  // null when passing
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  nlohmann::json details;  // check-specific extras, null when absent

  nlohmann::json to_json() const;
};

/// Fills in a failure with its witness; returns the report for chaining.
CheckReport& fail(CheckReport& r, nlohmann::json witness);

}  // namespace hecke
