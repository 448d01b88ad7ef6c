#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace hecke {

using Int = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational frac(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// A 2x2 integer matrix of positive determinant, taken modulo {+1, -1}.
///
/// The stored entries are always the canonical representative of the pair
/// {M, -M}: the lower-left entry is positive, or it is zero and the
/// upper-left entry is positive. Since ad = det > 0 whenever c = 0, every
/// pair has exactly one such representative.
class ProjMatrix {
 public:
  /// The identity matrix.
  ProjMatrix();

  /// Canonical representative of {M, -M}; throws std::invalid_argument when
  /// det(M) <= 0.
  static ProjMatrix from(Int a, Int b, Int c, Int d);
  static ProjMatrix from(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return from(Int(static_cast<long>(a)), Int(static_cast<long>(b)), Int(static_cast<long>(c)),
                Int(static_cast<long>(d)));
  }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }
  const Int& det() const { return det_; }
  Int trace() const { return a_ + d_; }

  bool is_unimodular() const { return det_ == 1; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  ProjMatrix operator*(const ProjMatrix& rhs) const;

  /// [d, -b; -c, a]. M * adjoint(M) = det(M) * I.
  ProjMatrix adjoint() const;

  /// Inverse in PSL2(Z); throws std::domain_error unless det = 1.
  ProjMatrix inverse() const;

  /// Three-way comparison by (det, a, b, c, d).
  int compare(const ProjMatrix& rhs) const;

  friend bool operator==(const ProjMatrix& x, const ProjMatrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const ProjMatrix& x, const ProjMatrix& y) { return !(x == y); }
  friend bool operator<(const ProjMatrix& x, const ProjMatrix& y) { return x.compare(y) < 0; }

  std::string str() const;

 private:
  ProjMatrix(Int a, Int b, Int c, Int d, Int det)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), det_(std::move(det)) {}

  Int a_, b_, c_, d_, det_;
};

std::ostream& operator<<(std::ostream& os, const ProjMatrix& m);

namespace mat {
// Generators of PSL2(Z) and the translations.
ProjMatrix I();
ProjMatrix S();        // [0,-1;1,0]
ProjMatrix U();        // [1,-1;1,0]
ProjMatrix U2();       // U*U
ProjMatrix T();        // [1,1;0,1] = U*S
ProjMatrix T_inv();    // [1,-1;0,1]
ProjMatrix T_prime();  // [1,0;1,1] = U^2*S
ProjMatrix T_pow(const Int& k);
ProjMatrix scalar(const Int& m);  // m*I, det m^2
}  // namespace mat

}  // namespace hecke
