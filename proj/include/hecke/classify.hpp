#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/quadform.hpp"
#include "hecke/ring_element.hpp"

namespace hecke::qf {

enum class ClassType { scalar, elliptic, split_hyperbolic, nonsplit_hyperbolic, parabolic };

std::string to_string(ClassType t);

ClassType class_type_of(const Int& trace, const Int& det);

/// Label of a Gamma-conjugacy class of matrices modulo {±1}.
///
/// A matrix M has two presentations (tr M, Q_M) and (-tr M, -Q_M); the key
/// stores the lexicographically smaller of (t, canon(Q)) over the two.
struct ConjClassKey {
  ClassType type;
  Int det;
  Int trace;
  BinaryQuadraticForm form;  // canonical, carries the sign of the presentation
  Int content;

  /// |Gamma_M| for elliptic classes: 2, 3 or 1.
  int centralizer_order() const;

  int compare(const ConjClassKey& o) const;
  friend bool operator==(const ConjClassKey& x, const ConjClassKey& y) { return x.compare(y) == 0; }
  friend bool operator!=(const ConjClassKey& x, const ConjClassKey& y) { return x.compare(y) != 0; }
  friend bool operator<(const ConjClassKey& x, const ConjClassKey& y) { return x.compare(y) < 0; }

  std::string str() const;
  nlohmann::json to_json() const;
};

ConjClassKey conjugacy_key(const ProjMatrix& m);

/// w(X): 1/6 scalar, -1/|Gamma_M| elliptic, 1 split hyperbolic, 0 otherwise.
Rational class_weight(const ConjClassKey& k);

/// gamma in PSL2(Z) with gamma^{-1} M gamma = N, or nothing when M and N are
/// not conjugate. The returned gamma has been checked by multiplication.
std::optional<ProjMatrix> are_conjugate(const ProjMatrix& m, const ProjMatrix& n);

/// Right coset M*Gamma, represented by [a,0;c,d] with a,d > 0, ad = n, 0 <= c < d.
struct CosetKey {
  ProjMatrix rep;
  friend bool operator==(const CosetKey& x, const CosetKey& y) { return x.rep == y.rep; }
  friend bool operator<(const CosetKey& x, const CosetKey& y) { return x.rep < y.rep; }
};

/// Gamma_inf-orbit <T>M: (c,d) sign-normalized, then a reduced mod c (c != 0)
/// or b reduced mod d (c = 0).
struct OrbitKey {
  ProjMatrix rep;
  friend bool operator==(const OrbitKey& x, const OrbitKey& y) { return x.rep == y.rep; }
  friend bool operator<(const OrbitKey& x, const OrbitKey& y) { return x.rep < y.rep; }
};

/// Double coset Gamma M Gamma via elementary divisors e1 | e2, e1 e2 = det.
struct DoubleCosetKey {
  Int e1, e2;
  friend bool operator==(const DoubleCosetKey& x, const DoubleCosetKey& y) {
    return x.e1 == y.e1 && x.e2 == y.e2;
  }
  friend bool operator<(const DoubleCosetKey& x, const DoubleCosetKey& y) {
    if (int c = cmp(x.e1, y.e1)) return c < 0;
    return x.e2 < y.e2;
  }
};

CosetKey right_coset_key(const ProjMatrix& m);
OrbitKey gamma_inf_orbit_key(const ProjMatrix& m);
DoubleCosetKey double_coset_key(const ProjMatrix& m);

/// All sigma_1(n) right coset keys of determinant n, in key order.
std::vector<CosetKey> all_right_cosets(const Int& n);
/// All double cosets contained in determinant n: (e, n/e) with e^2 | n.
std::vector<DoubleCosetKey> all_double_cosets(const Int& n);

/// Point (p:q) of P^1(Q) with gcd(p,q) = 1, q >= 0 and infinity = (1:0).
struct Cusp {
  Int p, q;
  static Cusp make(Int p, Int q);
  static Cusp infinity() { return {Int(1), Int(0)}; }
  static Cusp zero() { return {Int(0), Int(1)}; }
  friend bool operator==(const Cusp& x, const Cusp& y) { return x.p == y.p && x.q == y.q; }
  friend bool operator<(const Cusp& x, const Cusp& y) {
    if (int c = cmp(x.q, y.q)) return c < 0;
    return x.p < y.p;
  }
  std::string str() const;
};

/// Finite Q-linear combination of cusps, zero-free.
class CuspDivisor {
 public:
  CuspDivisor() = default;
  void add(const Cusp& x, const Rational& q);
  const std::map<Cusp, Rational>& terms() const { return terms_; }
  friend bool operator==(const CuspDivisor& x, const CuspDivisor& y) { return x.terms_ == y.terms_; }
  std::string str() const;

 private:
  std::map<Cusp, Rational> terms_;
};

Cusp act_on_cusp(const ProjMatrix& m, const Cusp& x);
CuspDivisor act_on_divisor(const ProjMatrix& m, const CuspDivisor& d);
CuspDivisor act_on_divisor(const RingElement& xi, const CuspDivisor& d);

/// [0] - [inf].
CuspDivisor zero_minus_infinity();

}  // namespace hecke::qf
