#include "hecke/modular.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/class_numbers.hpp"

namespace hecke::modular {

namespace {

void require_even_weight(int k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("weight must be even and non-negative");
}

QExpansion power(const QExpansion& f, int e, int N) {
  QExpansion r{0, std::vector<Rational>(N + 1)};
  r.a[0] = 1;
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace

const Rational& QExpansion::coeff(int m) const {
  if (m < 0 || m > precision())
    throw PrecisionError("coefficient q^" + std::to_string(m) + " beyond precision " +
                         std::to_string(precision()));
  return a[m];
}

QExpansion operator*(const QExpansion& f, const QExpansion& g) {
  const int N = std::min(f.precision(), g.precision());
  QExpansion r{f.k + g.k, std::vector<Rational>(N + 1)};
  for (int i = 0; i <= N; ++i) {
    if (f.a[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) r.a[i + j] += f.a[i] * g.a[j];
  }
  return r;
}

QExpansion operator+(const QExpansion& f, const QExpansion& g) {
  if (f.k != g.k) throw std::invalid_argument("adding q-expansions of different weight");
  const int N = std::min(f.precision(), g.precision());
  QExpansion r{f.k, std::vector<Rational>(N + 1)};
  for (int i = 0; i <= N; ++i) r.a[i] = f.a[i] + g.a[i];
  return r;
}

QExpansion operator*(const Rational& c, QExpansion f) {
  for (auto& x : f.a) x *= c;
  return f;
}

QExpansion eisenstein_E(int k, int N) {
  long factor;
  if (k == 4)
    factor = 240;
  else if (k == 6)
    factor = -504;
  else
    throw std::invalid_argument("eisenstein_E: only k = 4 and k = 6");
  QExpansion e{k, std::vector<Rational>(N + 1)};
  e.a[0] = 1;
  for (int m = 1; m <= N; ++m) e.a[m] = factor * cn::sigma(k - 1, Int(m));
  return e;
}

QExpansion delta(int N) {
  // q prod (1 - q^m)^24, built factor by factor
  std::vector<Int> p(N + 1);
  p[0] = 1;
  for (int m = 1; m <= N; ++m)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = N; i >= m; --i) p[i] -= p[i - m];
  QExpansion d{12, std::vector<Rational>(N + 1)};
  for (int i = 1; i <= N; ++i) d.a[i] = p[i - 1];
  return d;
}

int dim_Mk(int k) {
  if (k < 0 || k % 2 != 0 || k == 2) return 0;
  return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

int dim_Sk(int k) { return k >= 4 ? dim_Mk(k) - 1 : 0; }

std::vector<QExpansion> basis_Mk(int k, int N) {
  require_even_weight(k);
  const int dim = dim_Mk(k);
  if (dim == 0) return {};
  if (N < dim - 1) throw PrecisionError("basis_Mk: precision below the dimension");
  const QExpansion e4 = eisenstein_E(4, N), e6 = eisenstein_E(6, N);
  std::vector<QExpansion> rows;
  for (int j = 0; 6 * j <= k; ++j) {
    if ((k - 6 * j) % 4 != 0) continue;
    rows.push_back(power(e4, (k - 6 * j) / 4, N) * power(e6, j, N));
  }
  if (static_cast<int>(rows.size()) != dim) throw std::logic_error("basis_Mk: monomial count differs from dimension");
  // echelonize on the first dim columns
  for (int c = 0; c < dim; ++c) {
    int p = c;
    while (p < dim && rows[p].a[c] == 0) ++p;
    if (p == dim) throw std::logic_error("basis_Mk: monomials are not in echelon position");
    std::swap(rows[c], rows[p]);
    rows[c] = (1 / rows[c].a[c]) * rows[c];
    for (int r = 0; r < dim; ++r)
      if (r != c && rows[r].a[c] != 0) rows[r] = rows[r] + (-rows[r].a[c]) * rows[c];
  }
  for (auto& r : rows) r.k = k;
  return rows;
}

QExpansion hecke_on_qexp(const QExpansion& f, long n) {
  if (n <= 0) throw std::invalid_argument("hecke_on_qexp: n must be positive");
  const int M = static_cast<int>(f.precision() / n);
  QExpansion r{f.k, std::vector<Rational>(M + 1)};
  for (int m = 0; m <= M; ++m) {
    const long g = std::gcd(static_cast<long>(m), n);
    Rational s = 0;
    for (long d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      Int dk;
      mpz_ui_pow_ui(dk.get_mpz_t(), d, f.k - 1);
      s += dk * f.coeff(static_cast<int>(m * n / (d * d)));
    }
    r.a[m] = s;
  }
  return r;
}

std::vector<std::vector<Rational>> hecke_matrix_Sk(int k, long n) {
  const int dim = dim_Mk(k);
  const int ds = dim_Sk(k);
  std::vector<std::vector<Rational>> out;
  if (ds == 0) return out;
  const auto basis = basis_Mk(k, static_cast<int>(n * dim));
  for (int i = dim - ds; i < dim; ++i) {
    const QExpansion img = hecke_on_qexp(basis[i], n);
    if (img.coeff(0) != 0) throw std::logic_error("hecke_matrix_Sk: image is not cuspidal");
    std::vector<Rational> row;
    for (int j = dim - ds; j < dim; ++j) row.push_back(img.coeff(j));
    out.push_back(std::move(row));
  }
  return out;
}

Traces trace_oracle(int k, long n) {
  require_even_weight(k);
  if (n <= 0) throw std::invalid_argument("trace_oracle: n must be positive");
  const int dim = dim_Mk(k);
  const int ds = dim_Sk(k);
  const auto basis = basis_Mk(k, static_cast<int>(n * std::max(dim, 1)));
  Rational trS = 0, trM = 0;
  for (int i = 0; i < dim; ++i) {
    const Rational diag = hecke_on_qexp(basis[i], n).coeff(i);
    trM += diag;
    if (i >= dim - ds) trS += diag;
  }
  if (trS.get_den() != 1 || trM.get_den() != 1) throw std::logic_error("trace_oracle: non-integral trace");
  return {trS.get_num(), trM.get_num()};
}

}  // namespace hecke::modular
