#include "hecke/report.hpp"

#include "hecke/serialize.hpp"

namespace hecke {

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", check}, {"n", n}, {"pass", pass}};
  if (!subject.empty()) j["subject"] = subject;
  j["witness"] = witness;
  if (alpha) j["alpha"] = rational_to_json(*alpha);
  if (beta) j["beta"] = rational_to_json(*beta);
  if (!details.is_null()) j["details"] = details;
  return j;
}

CheckReport& fail(CheckReport& r, nlohmann::json witness) {
  r.pass = false;
  r.witness = std::move(witness);
  return r;
}

}  // namespace hecke
