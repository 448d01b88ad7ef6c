#pragma once

#include <stdexcept>
#include <vector>

#include "hecke/proj_matrix.hpp"

namespace hecke::modular {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated q-expansion sum_{m <= N} a_m q^m of a weight-k form.
struct QExpansion {
  int k = 0;
  std::vector<Rational> a;  // a[0..N]

  int precision() const { return static_cast<int>(a.size()) - 1; }
  /// a_m; throws PrecisionError beyond the stored precision.
  const Rational& coeff(int m) const;

  friend bool operator==(const QExpansion& x, const QExpansion& y) { return x.k == y.k && x.a == y.a; }
};

/// Product truncated to the smaller precision; weights add.
QExpansion operator*(const QExpansion& f, const QExpansion& g);
QExpansion operator+(const QExpansion& f, const QExpansion& g);
QExpansion operator*(const Rational& c, QExpansion f);

/// Normalized Eisenstein series 1 - (2k/B_k) sum sigma_{k-1}(m) q^m for k = 4, 6.
QExpansion eisenstein_E(int k, int N);
/// Delta = q prod (1 - q^m)^24.
QExpansion delta(int N);

int dim_Mk(int k);
int dim_Sk(int k);

/// Echelon basis of M_k from the monomials E4^i E6^j: element r has a_r = 1
/// and a_s = 0 for the other s < dim. Elements 1.. span S_k. k = 0 gives the
/// constants; odd or negative k throws std::invalid_argument.
std::vector<QExpansion> basis_Mk(int k, int N);

/// a_m(T_n f) = sum_{d | gcd(m, n)} d^(k-1) a_{mn/d^2}(f), for m <= N/n.
QExpansion hecke_on_qexp(const QExpansion& f, long n);

/// Matrix of T_n on the echelon basis of S_k: row i is T_n f_i in basis coordinates.
std::vector<std::vector<Rational>> hecke_matrix_Sk(int k, long n);

struct Traces {
  Int trS;
  Int trM;
};
/// Traces of T_n on S_k and on M_k.
Traces trace_oracle(int k, long n);

}  // namespace hecke::modular
