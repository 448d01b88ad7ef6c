#pragma once

// Deliberately broken Hecke elements, shared by the verifier tests and the
// acceptance binary.

#include <string>
#include <utility>
#include <vector>

#include "hecke/elements.hpp"

namespace fixtures {

inline hecke::ProjMatrix M(long a, long b, long c, long d) {
  return hecke::ProjMatrix::from(std::int64_t{a}, std::int64_t{b}, std::int64_t{c}, std::int64_t{d});
}

/// Twenty corruptions of build_wTn(n) over n = 1..6, none satisfying (A).
inline std::vector<std::pair<std::string, hecke::RingElement>> corrupted_elements() {
  using hecke::Rational;
  using hecke::RingElement;
  std::vector<std::pair<std::string, RingElement>> out;
  auto push = [&](std::string name, long n, RingElement x) {
    out.emplace_back(name + " n=" + std::to_string(n), std::move(x));
  };
  for (long n : {1L, 2L, 3L, 5L, 6L}) {
    const RingElement t = hecke::elem::build_wTn(n);
    push("scaled by 2", n, Rational(2) * t);
    push("plus diagonal", n, t + RingElement(M(1, 0, 0, n)));
    push("minus half of S*diag", n, t - RingElement(M(0, -n, 1, 0), Rational(1, 2)));
    push(n == 1 ? "negated" : "first term dropped", n,
         n == 1 ? -t : t - RingElement(t.terms().begin()->first, t.terms().begin()->second));
  }
  return out;
}

}  // namespace fixtures
