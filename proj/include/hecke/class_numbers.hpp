#pragma once

#include <vector>

#include "hecke/quadform.hpp"
#include "hecke/report.hpp"

namespace hecke::cn {

/// Gauss-reduced positive definite forms [A,B,C] of discriminant -D:
/// -A < B <= A <= C, and B >= 0 when A = C. Sorted by (A, B, C).
/// Throws std::invalid_argument for D <= 0.
std::vector<qf::BinaryQuadraticForm> reduced_forms(const Int& D);

struct HurwitzValue {
  Int D;
  Rational value;
  std::vector<qf::BinaryQuadraticForm> witness_forms;  // empty unless D > 0
};

/// Hurwitz class number extended to all integers:
///  D > 0: reduced forms of discriminant -D, multiples of [1,0,1] counted 1/2
///         and multiples of [1,1,1] counted 1/3;
///  D = 0: -1/12;  D = -u^2: -u/2;  other D < 0: 0.
/// Values are memoized; safe to call from several threads.
Rational hurwitz_H(const Int& D);
HurwitzValue hurwitz_value(const Int& D);

Int sigma(int k, const Int& n);

/// sum_{t^2 <= 4n} H(4n - t^2) = sum_{ad = n} max(a, d) and
/// sum_{t in Z} H(4n - t^2) = sigma_1(n).
CheckReport kronecker_hurwitz_check(long n);

}  // namespace hecke::cn
