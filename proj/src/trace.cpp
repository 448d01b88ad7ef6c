#include "hecke/trace.hpp"

#include <stdexcept>

#include "hecke/class_numbers.hpp"
#include "hecke/elements.hpp"
#include "hecke/serialize.hpp"
#include "hecke/verifier.hpp"

namespace hecke::trace {

namespace {

void require_weight(int w) {
  if (w <= 0 || w % 2 != 0)
    throw std::invalid_argument("weight w must be even and positive, got " + std::to_string(w));
}

// Coefficients of (x X + y Y)^e, indexed by the power of Y.
std::vector<Int> binomial_power(const Int& x, const Int& y, int e) {
  std::vector<Int> out(e + 1);
  Int binom = 1;
  std::vector<Int> xp(e + 1, Int(1)), yp(e + 1, Int(1));
  for (int i = 1; i <= e; ++i) xp[i] = xp[i - 1] * x, yp[i] = yp[i - 1] * y;
  for (int j = 0; j <= e; ++j) {
    out[j] = binom * xp[e - j] * yp[j];
    binom = binom * (e - j) / (j + 1);
  }
  return out;
}

// Rows i = (X^(w-i) Y^i) | M over Int.
std::vector<std::vector<Int>> integer_rows(const ProjMatrix& m, int w) {
  std::vector<std::vector<Int>> rows(w + 1, std::vector<Int>(w + 1));
  std::vector<std::vector<Int>> first(w + 1), second(w + 1);
  for (int e = 0; e <= w; ++e) {
    first[e] = binomial_power(m.a(), m.b(), e);
    second[e] = binomial_power(m.c(), m.d(), e);
  }
  for (int i = 0; i <= w; ++i) {
    const auto& f = first[w - i];
    const auto& g = second[i];
    for (int j = 0; j <= w - i; ++j)
      for (int l = 0; l <= i; ++l) rows[i][j + l] += f[j] * g[l];
  }
  return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& a) {
  std::vector<int> pivots;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  a.resize(r);
  return pivots;
}

Matrix transpose(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

Matrix nullspace_rows(Matrix m, std::size_t cols) {
  const std::vector<int> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : piv) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

}  // namespace

HomogeneousPolynomial HomogeneousPolynomial::monomial(int w, int i) {
  HomogeneousPolynomial p = zero(w);
  p.c.at(i) = 1;
  return p;
}

HomogeneousPolynomial HomogeneousPolynomial::eisenstein(int w) {
  HomogeneousPolynomial p = zero(w);
  p.c[0] = 1;
  p.c[w] -= 1;
  return p;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& o) {
  if (o.w != w) throw std::invalid_argument("adding polynomials of different degree");
  for (int i = 0; i <= w; ++i) c[i] += o.c[i];
  return *this;
}

HomogeneousPolynomial act_poly(const HomogeneousPolynomial& p, const ProjMatrix& m) {
  HomogeneousPolynomial out = HomogeneousPolynomial::zero(p.w);
  const auto rows = integer_rows(m, p.w);
  for (int i = 0; i <= p.w; ++i) {
    if (p.c[i] == 0) continue;
    for (int j = 0; j <= p.w; ++j) out.c[j] += p.c[i] * rows[i][j];
  }
  return out;
}

HomogeneousPolynomial act_poly(const HomogeneousPolynomial& p, const RingElement& xi) {
  HomogeneousPolynomial out = HomogeneousPolynomial::zero(p.w);
  for (const auto& [m, q] : xi.terms()) out += q * act_poly(p, m);
  return out;
}

Matrix operator_matrix(const RingElement& xi, int w) {
  if (w < 0) throw std::invalid_argument("negative weight");
  Matrix a(w + 1, std::vector<Rational>(w + 1));
  for (const auto& [m, q] : xi.terms()) {
    const auto rows = integer_rows(m, w);
    for (int i = 0; i <= w; ++i)
      for (int j = 0; j <= w; ++j)
        if (rows[i][j] != 0) a[i][j] += q * rows[i][j];
  }
  return a;
}

Rational trace_on_Vw(const RingElement& xi, int w) {
  require_weight(w);
  Rational total = 0;
  for (const auto& [m, q] : xi.terms()) {
    Int tr = 0;
    for (int i = 0; i <= w; ++i) {
      // coefficient of X^(w-i) Y^i in (aX+bY)^(w-i) (cX+dY)^i
      const auto f = binomial_power(m.a(), m.b(), w - i);
      const auto g = binomial_power(m.c(), m.d(), i);
      for (int l = 0; l <= i; ++l)
        if (i - l <= w - i) tr += f[i - l] * g[l];
    }
    total += q * tr;
  }
  return total;
}

std::vector<HomogeneousPolynomial> ww_basis(int w) {
  require_weight(w);
  const RingElement one = RingElement::identity();
  const Matrix as = operator_matrix(one + RingElement(mat::S()), w);
  const Matrix au = operator_matrix(one + RingElement(mat::U()) + RingElement(mat::U2()), w);
  // v As = 0 and v Au = 0: stack the transposes
  Matrix stacked = transpose(as);
  const Matrix tu = transpose(au);
  stacked.insert(stacked.end(), tu.begin(), tu.end());
  std::vector<HomogeneousPolynomial> out;
  for (auto& row : nullspace_rows(std::move(stacked), w + 1)) out.push_back({w, std::move(row)});
  return out;
}

Rational trace_on_Ww(const RingElement& xi, int w) {
  require_weight(w);
  const CheckReport b = verify::verify_B(xi);
  if (!b.pass) throw std::domain_error("trace_on_Ww: element fails property (B): " + b.witness.dump());
  const auto basis = ww_basis(w);
  std::vector<int> pivot;
  for (const auto& v : basis) {
    int p = 0;
    while (v.c[p] == 0) ++p;
    pivot.push_back(p);
  }
  const Matrix a = operator_matrix(xi, w);
  Rational tr = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Rational> img(w + 1);
    for (int i = 0; i <= w; ++i) {
      if (basis[k].c[i] == 0) continue;
      for (int j = 0; j <= w; ++j) img[j] += basis[k].c[i] * a[i][j];
    }
    // coordinates are read off at the pivots; the remainder must vanish
    std::vector<Rational> rest = img;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      const Rational coord = img[pivot[l]];
      if (coord == 0) continue;
      for (int j = 0; j <= w; ++j) rest[j] -= coord * basis[l].c[j];
    }
    for (const auto& x : rest)
      if (x != 0) throw std::domain_error("trace_on_Ww: W_w is not stable under the element");
    tr += img[pivot[k]];
  }
  return tr;
}

Int gegenbauer_p(int w, const Int& t, const Int& n) {
  if (w < 0) throw std::invalid_argument("negative degree");
  Int prev = 1, cur = t;
  if (w == 0) return prev;
  for (int i = 2; i <= w; ++i) {
    Int next = t * cur - n * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational trace_formula_rhs(int w, long n) {
  require_weight(w);
  if (n <= 0) throw std::invalid_argument("n must be positive");
  // beyond |t| = n + 1, 4n - t^2 is negative and never minus a square
  Rational total = 0;
  for (long t = -(n + 1); t <= n + 1; ++t) {
    const Rational h = cn::hurwitz_H(Int(4 * n - t * t));
    if (h != 0) total -= gegenbauer_p(w, Int(t), Int(n)) * h;
  }
  return total;
}

CheckReport eisenstein_eigen_check(long n, int w) {
  require_weight(w);
  CheckReport r{"eisenstein", "", n, true, nullptr, std::nullopt, std::nullopt, nullptr};
  const HomogeneousPolynomial p = HomogeneousPolynomial::eisenstein(w);
  const HomogeneousPolynomial img = act_poly(p, elem::build_wTn(n));
  const Int sigma = cn::sigma(w + 1, Int(n));
  r.details = {{"w", w}, {"eigenvalue", int_to_json(sigma)}};
  if (!(img == Rational(sigma) * p)) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& x : img.c) coeffs.push_back(rational_to_json(x));
    fail(r, {{"image", coeffs}});
  }
  return r;
}

}  // namespace hecke::trace
