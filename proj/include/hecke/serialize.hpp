#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hecke/ring_element.hpp"

namespace hecke {

/// Raised when a ringelt-v1 document is malformed or not in canonical form.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers are written as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings; both forms are accepted on input.
nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);

/// [num, den] with den > 0 and gcd(num, den) = 1.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ProjMatrix& m);

/// {"format":"ringelt-v1","entries":[{"m":[a,b,c,d],"q":[num,den]},...]},
/// entries sorted by (det, a, b, c, d).
nlohmann::json to_ringelt_json(const RingElement& x);

/// Strict inverse of to_ringelt_json; throws FormatError on any deviation
/// from the canonical encoding.
RingElement from_ringelt_json(const nlohmann::json& j);

std::string dump_ringelt(const RingElement& x);
RingElement parse_ringelt(const std::string& text);

}  // namespace hecke
