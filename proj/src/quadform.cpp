#include "hecke/quadform.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke::qf {

namespace {

ProjMatrix unimodular(const Int& p, const Int& q, const Int& r, const Int& s) {
  return ProjMatrix::from(p, q, r, s);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// x = p*u + q*v = 1 for coprime (p, q).
void bezout(const Int& p, const Int& q, Int& u, Int& v) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::logic_error("bezout: arguments not coprime");
}

CanonicalForm finish(const BinaryQuadraticForm& input, const CanonicalForm& out) {
  if (input.compose(out.gamma) != out.form) {
    std::ostringstream os;
    os << "canonical_form: certificate check failed for " << input << " -> " << out.form << " via "
       << out.gamma;
    throw std::logic_error(os.str());
  }
  return out;
}

// --- indefinite, non-square discriminant ---------------------------------

struct Indefinite {
  Int D, s;  // s = floor(sqrt(D)), D not a square

  bool reduced(const BinaryQuadraticForm& q) const {
    if (q.B <= 0 || q.B > s) return false;
    Int two_a = 2 * abs(q.A);
    return two_a > s - q.B && two_a <= s + q.B;
  }

  // One reduction step (a,b,c) -> (c, r, (r^2 - D)/4c) with r = -b mod 2c
  // in the standard window; q.compose(step) is the new form.
  ProjMatrix step(const BinaryQuadraticForm& q, BinaryQuadraticForm& next) const {
    const Int abs_c = abs(q.C);
    const Int m = 2 * abs_c;
    Int r;
    if (abs_c > s) {
      r = mod_pos(-q.B, m);
      if (r > abs_c) r -= m;
    } else {
      const Int lo = s - m + 1;
      r = lo + mod_pos(-q.B - lo, m);
    }
    const Int shift = (r + q.B) / (2 * q.C);
    next = {q.C, r, (r * r - D) / (4 * q.C)};
    return unimodular(0, -1, 1, shift);
  }
};

CanonicalForm canonical_indefinite(const BinaryQuadraticForm& prim) {
  Indefinite ind{prim.disc(), isqrt(prim.disc())};
  BinaryQuadraticForm q = prim;
  ProjMatrix g;
  for (int guard = 0; !ind.reduced(q); ++guard) {
    if (guard > 100000) throw std::logic_error("canonical_form: reduction did not terminate");
    BinaryQuadraticForm next;
    g = g * ind.step(q, next);
    q = next;
  }
  const BinaryQuadraticForm start = q;
  CanonicalForm best{q, g};
  for (int guard = 0;; ++guard) {
    if (guard > 1000000) throw std::logic_error("canonical_form: cycle did not close");
    BinaryQuadraticForm next;
    g = g * ind.step(q, next);
    q = next;
    if (q == start) break;
    if (q < best.form) best = {q, g};
  }
  return best;
}

// --- square discriminant u^2 > 0 ------------------------------------------

CanonicalForm canonical_square(const BinaryQuadraticForm& prim, const Int& u) {
  // Candidate primitive zero vectors (p, q) of prim.
  std::vector<std::pair<Int, Int>> zeros;
  auto push = [&](Int p, Int q) {
    Int g = gcd(p, q);
    p /= g;
    q /= g;
    zeros.emplace_back(p, q);
  };
  if (prim.A == 0) {
    push(Int(1), Int(0));
    push(-prim.C, prim.B);
  } else {
    push(-prim.B + u, 2 * prim.A);
    push(-prim.B - u, 2 * prim.A);
  }
  for (const auto& [p, q] : zeros) {
    Int x, y;
    bezout(p, q, x, y);
    ProjMatrix g = unimodular(p, -y, q, x);
    BinaryQuadraticForm f = prim.compose(g);
    if (f.A != 0) throw std::logic_error("canonical_form: zero vector is not isotropic");
    if (f.B != u) continue;
    // [0, u, C] -> [0, u, C + u k]
    Int k = -floor_div(f.C, u);
    g = g * unimodular(1, k, 0, 1);
    return {prim.compose(g), g};
  }
  throw std::logic_error("canonical_form: no isotropic vector with B = +u for " + prim.str());
}

// --- disc 0 -----------------------------------------------------------------

CanonicalForm canonical_degenerate(const BinaryQuadraticForm& prim) {
  // prim = s (px + qy)^2 with gcd(p, q) = 1.
  const int s = sgn(prim.A) != 0 ? sgn(prim.A) : sgn(prim.C);
  Int p = isqrt(s * prim.A);
  Int q = isqrt(s * prim.C);
  if (sgn(prim.B) * s < 0) q = -q;
  Int x, y;
  bezout(p, q, x, y);
  // Row (p, q) times [x, -q; y, p] = (1, 0).
  ProjMatrix g = unimodular(x, -q, y, p);
  return {prim.compose(g), g};
}

}  // namespace

Int BinaryQuadraticForm::content() const { return gcd(gcd(A, B), C); }

BinaryQuadraticForm BinaryQuadraticForm::divided(const Int& k) const {
  return {A / k, B / k, C / k};
}

BinaryQuadraticForm BinaryQuadraticForm::compose(const ProjMatrix& g) const {
  const Int &p = g.a(), &q = g.b(), &r = g.c(), &s = g.d();
  return {A * p * p + B * p * r + C * r * r, 2 * A * p * q + B * (p * s + q * r) + 2 * C * r * s,
          A * q * q + B * q * s + C * s * s};
}

int BinaryQuadraticForm::compare(const BinaryQuadraticForm& o) const {
  if (int c = cmp(A, o.A)) return c;
  if (int c = cmp(B, o.B)) return c;
  return cmp(C, o.C);
}

std::string BinaryQuadraticForm::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q) {
  return os << "[" << q.A << "," << q.B << "," << q.C << "]";
}

BinaryQuadraticForm form_of_matrix(const ProjMatrix& m) { return {m.c(), m.d() - m.a(), -m.b()}; }

ProjMatrix matrix_of_form(const Int& trace, const BinaryQuadraticForm& q) {
  Int two_a = trace - q.B;
  if (mod_pos(two_a, Int(2)) != 0) throw std::invalid_argument("matrix_of_form: trace/B parity mismatch");
  return ProjMatrix::from(two_a / 2, -q.C, q.A, (trace + q.B) / 2);
}

Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt of negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

bool is_reduced_positive_definite(const BinaryQuadraticForm& q) {
  if (q.A <= 0 || q.disc() >= 0) return false;
  if (!(-q.A < q.B && q.B <= q.A && q.A <= q.C)) return false;
  if ((q.A == q.C || q.B == q.A) && q.B < 0) return false;
  return true;
}

CanonicalForm reduce_positive_definite(const BinaryQuadraticForm& input) {
  if (input.A <= 0 || input.disc() >= 0)
    throw std::domain_error("reduce_positive_definite: not positive definite: " + input.str());
  BinaryQuadraticForm q = input;
  ProjMatrix g;
  for (;;) {
    // B into (-A, A]
    Int k = floor_div(q.A - q.B, 2 * q.A);
    if (k != 0) {
      ProjMatrix t = unimodular(1, k, 0, 1);
      g = g * t;
      q = q.compose(t);
    }
    if (q.A > q.C) {
      ProjMatrix s = unimodular(0, -1, 1, 0);
      g = g * s;
      q = q.compose(s);
      continue;
    }
    if (q.A == q.C && q.B < 0) {
      ProjMatrix s = unimodular(0, -1, 1, 0);
      g = g * s;
      q = q.compose(s);
    }
    break;
  }
  return finish(input, {q, g});
}

CanonicalForm canonical_form(const BinaryQuadraticForm& q) {
  if (q.is_zero()) return {q, ProjMatrix()};
  const Int D = q.disc();
  const Int g = q.content();
  const BinaryQuadraticForm prim = q.divided(g);

  CanonicalForm c;
  if (D < 0) {
    if (q.A > 0) return reduce_positive_definite(q);
    CanonicalForm pos = reduce_positive_definite(-q);
    return finish(q, {-pos.form, pos.gamma});
  }
  if (D == 0) {
    c = canonical_degenerate(prim);
  } else if (is_square(D)) {
    c = canonical_square(prim, isqrt(prim.disc()));
  } else {
    c = canonical_indefinite(prim);
  }
  return finish(q, {c.form.scaled(g), c.gamma});
}

}  // namespace hecke::qf
