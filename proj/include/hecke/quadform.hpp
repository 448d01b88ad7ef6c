#pragma once

#include <ostream>
#include <string>

#include "hecke/proj_matrix.hpp"

namespace hecke::qf {

/// Integral binary quadratic form A x^2 + B xy + C y^2.
struct BinaryQuadraticForm {
  Int A, B, C;

  Int disc() const { return B * B - 4 * A * C; }
  /// gcd(A, B, C); zero for the zero form.
  Int content() const;
  bool is_zero() const { return A == 0 && B == 0 && C == 0; }

  BinaryQuadraticForm operator-() const { return {-A, -B, -C}; }
  BinaryQuadraticForm scaled(const Int& k) const { return {A * k, B * k, C * k}; }
  /// Exact division of every coefficient by k.
  BinaryQuadraticForm divided(const Int& k) const;

  /// Proper substitution: (Q o g)(x, y) = Q(px + qy, rx + sy) for g = [p,q;r,s].
  /// Well defined on matrices modulo {±1} because Q is homogeneous of even degree.
  BinaryQuadraticForm compose(const ProjMatrix& g) const;

  Int eval(const Int& x, const Int& y) const { return A * x * x + B * x * y + C * y * y; }

  int compare(const BinaryQuadraticForm& o) const;
  friend bool operator==(const BinaryQuadraticForm& x, const BinaryQuadraticForm& y) {
    return x.A == y.A && x.B == y.B && x.C == y.C;
  }
  friend bool operator!=(const BinaryQuadraticForm& x, const BinaryQuadraticForm& y) { return !(x == y); }
  friend bool operator<(const BinaryQuadraticForm& x, const BinaryQuadraticForm& y) {
    return x.compare(y) < 0;
  }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q);

/// Q_M = [c, d - a, -b], equivalently Q_M(v) = det(v | Mv).
/// Satisfies Q_{g^{-1} M g} = Q_M o g and disc(Q_M) = tr(M)^2 - 4 det(M).
BinaryQuadraticForm form_of_matrix(const ProjMatrix& m);

/// The matrix of determinant n = (t^2 - disc)/4 whose trace is t and whose
/// form is Q. Requires t = B (mod 2) and a positive resulting determinant.
ProjMatrix matrix_of_form(const Int& trace, const BinaryQuadraticForm& q);

struct CanonicalForm {
  BinaryQuadraticForm form;
  ProjMatrix gamma;  // input.compose(gamma) == form
};

/// Canonical representative of the proper SL2(Z)-equivalence class of Q.
///
///  - disc < 0: Gauss-reduced (-|A| < B <= |A| <= |C|, B >= 0 on the
///    boundary), keeping the sign of definiteness.
///  - disc > 0, not a square: least form (A, B, C) on the reduction cycle.
///  - disc = u^2 > 0: content g times [0, u/g, e] with 0 <= e < u/g.
///  - disc = 0, Q != 0: [s g, 0, 0] where Q = s g (px + qy)^2.
///  - Q = 0: the zero form.
///
/// The certificate is checked by substitution before returning; a mismatch
/// throws std::logic_error.
CanonicalForm canonical_form(const BinaryQuadraticForm& q);

/// Gauss reduction of a positive definite form (also used for enumeration
/// checks). Throws std::domain_error for non-positive-definite input.
CanonicalForm reduce_positive_definite(const BinaryQuadraticForm& q);

bool is_reduced_positive_definite(const BinaryQuadraticForm& q);

Int isqrt(const Int& x);
bool is_square(const Int& x);

}  // namespace hecke::qf
