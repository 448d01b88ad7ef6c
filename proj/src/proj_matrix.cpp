#include "hecke/proj_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

ProjMatrix::ProjMatrix() : a_(1), b_(0), c_(0), d_(1), det_(1) {}

ProjMatrix ProjMatrix::from(Int a, Int b, Int c, Int d) {
  Int det = a * d - b * c;
  if (sgn(det) <= 0) {
    std::ostringstream os;
    os << "ProjMatrix: determinant must be positive, got [" << a << "," << b << ";" << c << "," << d
       << "] with det " << det;
    throw std::invalid_argument(os.str());
  }
  if (sgn(c) < 0 || (sgn(c) == 0 && sgn(a) < 0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  return ProjMatrix(std::move(a), std::move(b), std::move(c), std::move(d), std::move(det));
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& r) const {
  return from(a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_,
              c_ * r.b_ + d_ * r.d_);
}

ProjMatrix ProjMatrix::adjoint() const { return from(d_, -b_, -c_, a_); }

ProjMatrix ProjMatrix::inverse() const {
  if (det_ != 1) throw std::domain_error("ProjMatrix::inverse: matrix is not unimodular: " + str());
  return adjoint();
}

int ProjMatrix::compare(const ProjMatrix& r) const {
  if (int s = cmp(det_, r.det_)) return s;
  if (int s = cmp(a_, r.a_)) return s;
  if (int s = cmp(b_, r.b_)) return s;
  if (int s = cmp(c_, r.c_)) return s;
  return cmp(d_, r.d_);
}

std::string ProjMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ProjMatrix& m) {
  return os << "[" << m.a() << "," << m.b() << ";" << m.c() << "," << m.d() << "]";
}

namespace mat {
ProjMatrix I() { return ProjMatrix(); }
ProjMatrix S() { return ProjMatrix::from(0, -1, 1, 0); }
ProjMatrix U() { return ProjMatrix::from(1, -1, 1, 0); }
ProjMatrix U2() { return U() * U(); }
ProjMatrix T() { return ProjMatrix::from(1, 1, 0, 1); }
ProjMatrix T_inv() { return ProjMatrix::from(1, -1, 0, 1); }
ProjMatrix T_prime() { return ProjMatrix::from(1, 0, 1, 1); }
ProjMatrix T_pow(const Int& k) { return ProjMatrix::from(Int(1), k, Int(0), Int(1)); }
ProjMatrix scalar(const Int& m) { return ProjMatrix::from(m, Int(0), Int(0), m); }
}  // namespace mat

}  // namespace hecke
