#pragma once

#include <vector>

#include "hecke/report.hpp"
#include "hecke/ring_element.hpp"

namespace hecke::trace {

/// sum_i c[i] X^(w-i) Y^i.
struct HomogeneousPolynomial {
  int w = 0;
  std::vector<Rational> c;

  static HomogeneousPolynomial zero(int w) { return {w, std::vector<Rational>(w + 1)}; }
  static HomogeneousPolynomial monomial(int w, int i);
  /// X^w - Y^w.
  static HomogeneousPolynomial eisenstein(int w);

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o);
  friend bool operator==(const HomogeneousPolynomial& x, const HomogeneousPolynomial& y) {
    return x.w == y.w && x.c == y.c;
  }
  friend HomogeneousPolynomial operator*(const Rational& q, HomogeneousPolynomial p) {
    for (auto& x : p.c) x *= q;
    return p;
  }
};

using Matrix = std::vector<std::vector<Rational>>;

/// P | M = P(aX + bY, cX + dY), extended linearly to RingElements.
HomogeneousPolynomial act_poly(const HomogeneousPolynomial& p, const ProjMatrix& m);
HomogeneousPolynomial act_poly(const HomogeneousPolynomial& p, const RingElement& xi);

/// Row i holds the coordinates of (X^(w-i) Y^i) | xi, so P | xi = p * A and
/// A(xi eta) = A(xi) A(eta).
Matrix operator_matrix(const RingElement& xi, int w);

/// Trace on V_w from the diagonal entries only. Throws std::invalid_argument
/// unless w is even and positive.
Rational trace_on_Vw(const RingElement& xi, int w);

/// Basis of W_w = ker(1 + S) and ker(1 + U + U^2), as the rows of the reduced
/// echelon form.
std::vector<HomogeneousPolynomial> ww_basis(int w);

/// Trace of xi on W_w. Throws std::domain_error if xi fails property (B)
/// or if W_w turns out not to be stable.
Rational trace_on_Ww(const RingElement& xi, int w);

/// Coefficient of X^w in (1 - tX + nX^2)^-1.
Int gegenbauer_p(int w, const Int& t, const Int& n);

/// -sum_t p_w(t, n) H(4n - t^2).
Rational trace_formula_rhs(int w, long n);

/// (X^w - Y^w) | build_wTn(n) = sigma_{w+1}(n) (X^w - Y^w).
CheckReport eisenstein_eigen_check(long n, int w);

}  // namespace hecke::trace
