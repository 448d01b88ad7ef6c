#include "hecke/ring_element.hpp"

#include <stdexcept>

namespace hecke {

RingElement::RingElement(const ProjMatrix& m, const Rational& q) { add(m, q); }

Rational RingElement::coeff(const ProjMatrix& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ProjMatrix> RingElement::support() const {
  std::vector<ProjMatrix> out;
  out.reserve(terms_.size());
  for (const auto& [m, q] : terms_) out.push_back(m);
  return out;
}

void RingElement::add(const ProjMatrix& m, const Rational& q) {
  if (sgn(q) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (inserted) return;
  it->second += q;
  if (sgn(it->second) == 0) terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  for (const auto& [m, q] : rhs.terms_) add(m, q);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  for (const auto& [m, q] : rhs.terms_) add(m, -q);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  RingElement out;
  for (const auto& [m, p] : x.terms_)
    for (const auto& [n, q] : y.terms_) out.add(m * n, p * q);
  return out;
}

RingElement operator*(const ProjMatrix& g, const RingElement& x) {
  RingElement out;
  for (const auto& [m, q] : x.terms_) out.add(g * m, q);
  return out;
}

RingElement operator*(const RingElement& x, const ProjMatrix& g) {
  RingElement out;
  for (const auto& [m, q] : x.terms_) out.add(m * g, q);
  return out;
}

RingElement RingElement::conjugate(const ProjMatrix& gamma) const {
  const ProjMatrix inv = gamma.inverse();
  RingElement out;
  for (const auto& [m, q] : terms_) out.add(inv * m * gamma, q);
  return out;
}

RingElement RingElement::adjoint() const {
  RingElement out;
  for (const auto& [m, q] : terms_) out.add(m.adjoint(), q);
  return out;
}

RingElement RingElement::restrict_det(const Int& n) const {
  return filter([&](const ProjMatrix& m) { return m.det() == n; });
}

RingElement RingElement::filter(const std::function<bool(const ProjMatrix&)>& keep) const {
  RingElement out;
  for (const auto& [m, q] : terms_)
    if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, q);
  return out;
}

Rational RingElement::pairing(const std::function<bool(const ProjMatrix&)>& member) const {
  Rational s = 0;
  for (const auto& [m, q] : terms_)
    if (member(m)) s += q;
  return s;
}

Rational RingElement::total() const {
  Rational s = 0;
  for (const auto& [m, q] : terms_) s += q;
  return s;
}

std::optional<Int> RingElement::homogeneous_det() const {
  if (terms_.empty()) return std::nullopt;
  const Int& lo = terms_.begin()->first.det();
  const Int& hi = terms_.rbegin()->first.det();
  if (lo != hi) return std::nullopt;
  return lo;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) {
  if (x.empty()) return os << "0";
  bool first = true;
  for (const auto& [m, q] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << q << "*" << m;
  }
  return os;
}

RingElement act(const RingElement& xi, const ProjMatrix& g, Side side) {
  switch (side) {
    case Side::left:
      return g * xi;
    case Side::right:
      return xi * g;
    case Side::conjugation:
      return xi.conjugate(g);
  }
  throw std::logic_error("act: bad side");
}

RingElement act(const RingElement& xi, const RingElement& g, Side side) {
  switch (side) {
    case Side::left:
      return g * xi;
    case Side::right:
      return xi * g;
    case Side::conjugation:
      if (g.size() == 1 && g.terms().begin()->second == 1)
        return xi.conjugate(g.terms().begin()->first);
      throw std::invalid_argument("act: conjugation needs a single group element");
  }
  throw std::logic_error("act: bad side");
}

RingElement pi_S() {
  return make_element({{mat::I(), Rational(1, 2)}, {mat::S(), Rational(1, 2)}});
}

RingElement pi_U() {
  return make_element(
      {{mat::I(), Rational(1, 3)}, {mat::U(), Rational(1, 3)}, {mat::U2(), Rational(1, 3)}});
}

RingElement make_element(std::initializer_list<std::pair<ProjMatrix, Rational>> terms) {
  RingElement out;
  for (const auto& [m, q] : terms) out.add(m, q);
  return out;
}

}  // namespace hecke
