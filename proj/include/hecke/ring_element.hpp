#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hecke/proj_matrix.hpp"

namespace hecke {

/// Finite formal Q-linear combination of matrices modulo {±1}.
///
/// Terms are kept in (det, a, b, c, d) order and zero coefficients are never
/// stored, so two elements are equal exactly when their term maps are equal.
class RingElement {
 public:
  using Terms = std::map<ProjMatrix, Rational>;

  RingElement() = default;
  explicit RingElement(const ProjMatrix& m, const Rational& q = 1);

  static RingElement identity() { return RingElement(ProjMatrix()); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Rational coeff(const ProjMatrix& m) const;
  std::vector<ProjMatrix> support() const;

  void add(const ProjMatrix& m, const Rational& q);

  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const Rational& q);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator-(RingElement x) { return x *= Rational(-1); }
  friend RingElement operator*(const Rational& q, RingElement x) { return x *= q; }
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  friend RingElement operator*(const ProjMatrix& g, const RingElement& x);
  friend RingElement operator*(const RingElement& x, const ProjMatrix& g);

  friend bool operator==(const RingElement& x, const RingElement& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

  /// gamma^{-1} * this * gamma; throws std::domain_error unless det(gamma) = 1.
  RingElement conjugate(const ProjMatrix& gamma) const;

  /// Coefficient-wise adjoint M -> M^vee.
  RingElement adjoint() const;

  RingElement restrict_det(const Int& n) const;
  RingElement filter(const std::function<bool(const ProjMatrix&)>& keep) const;

  /// <xi, S>: sum of coefficients over support members satisfying `member`.
  Rational pairing(const std::function<bool(const ProjMatrix&)>& member) const;
  Rational total() const;

  /// The common determinant of the support, if there is exactly one.
  std::optional<Int> homogeneous_det() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

enum class Side { left, right, conjugation };

/// Left: g*xi. Right: xi*g. Conjugation: g^{-1}*xi*g (g must be unimodular).
RingElement act(const RingElement& xi, const ProjMatrix& g, Side side);
/// Left/right multiplication by a ring element. Conjugation is only defined
/// for group elements and throws std::invalid_argument here.
RingElement act(const RingElement& xi, const RingElement& g, Side side);

/// (1+S)/2 and (1+U+U^2)/3.
RingElement pi_S();
RingElement pi_U();

/// Convenience constructor: sum of q_i * M_i.
RingElement make_element(std::initializer_list<std::pair<ProjMatrix, Rational>> terms);

}  // namespace hecke
