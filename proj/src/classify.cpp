#include "hecke/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hecke/serialize.hpp"

namespace hecke::qf {

namespace {

struct Presentation {
  Int trace;
  CanonicalForm canon;
};

int compare_presentation(const Int& t1, const BinaryQuadraticForm& q1, const Int& t2,
                         const BinaryQuadraticForm& q2) {
  if (int c = cmp(t1, t2)) return c;
  return q1.compare(q2);
}

// Both presentations of M; index 0 is (t, Q_M), index 1 is (-t, -Q_M).
std::pair<Presentation, Presentation> presentations(const ProjMatrix& m) {
  const BinaryQuadraticForm q = form_of_matrix(m);
  return {Presentation{m.trace(), canonical_form(q)}, Presentation{-m.trace(), canonical_form(-q)}};
}

const Presentation& pick(const std::pair<Presentation, Presentation>& p) {
  return compare_presentation(p.first.trace, p.first.canon.form, p.second.trace,
                              p.second.canon.form) <= 0
             ? p.first
             : p.second;
}

Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::string to_string(ClassType t) {
  switch (t) {
    case ClassType::scalar:
      return "scalar";
    case ClassType::elliptic:
      return "elliptic";
    case ClassType::split_hyperbolic:
      return "split_hyperbolic";
    case ClassType::nonsplit_hyperbolic:
      return "nonsplit_hyperbolic";
    case ClassType::parabolic:
      return "parabolic";
  }
  return "?";
}

ClassType class_type_of(const Int& trace, const Int& det) {
  const Int D = trace * trace - 4 * det;
  if (D < 0) return ClassType::elliptic;
  if (D == 0) return ClassType::parabolic;  // caller distinguishes scalars
  return is_square(D) ? ClassType::split_hyperbolic : ClassType::nonsplit_hyperbolic;
}

int ConjClassKey::centralizer_order() const {
  if (type != ClassType::elliptic) return 0;
  BinaryQuadraticForm prim = form.divided(content);
  if (prim.A < 0) prim = -prim;
  if (prim == BinaryQuadraticForm{Int(1), Int(0), Int(1)}) return 2;
  if (prim == BinaryQuadraticForm{Int(1), Int(1), Int(1)}) return 3;
  return 1;
}

int ConjClassKey::compare(const ConjClassKey& o) const {
  if (int c = cmp(det, o.det)) return c;
  return compare_presentation(trace, form, o.trace, o.form);
}

std::string ConjClassKey::str() const {
  std::ostringstream os;
  os << to_string(type) << "(n=" << det << ",t=" << trace << ",Q=" << form << ")";
  return os.str();
}

nlohmann::json ConjClassKey::to_json() const {
  return nlohmann::json::array({to_string(type), int_to_json(det), int_to_json(trace),
                                nlohmann::json::array({int_to_json(form.A), int_to_json(form.B),
                                                       int_to_json(form.C)})});
}

ConjClassKey conjugacy_key(const ProjMatrix& m) {
  const auto both = presentations(m);
  const Presentation& p = pick(both);
  ConjClassKey k;
  k.det = m.det();
  k.trace = p.trace;
  k.form = p.canon.form;
  k.content = p.canon.form.content();
  k.type = k.form.is_zero() ? ClassType::scalar : class_type_of(k.trace, k.det);
  return k;
}

Rational class_weight(const ConjClassKey& k) {
  switch (k.type) {
    case ClassType::scalar:
      return Rational(1, 6);
    case ClassType::elliptic:
      return Rational(-1, k.centralizer_order());
    case ClassType::split_hyperbolic:
      return Rational(1);
    case ClassType::nonsplit_hyperbolic:
    case ClassType::parabolic:
      return Rational(0);
  }
  return Rational(0);
}

std::optional<ProjMatrix> are_conjugate(const ProjMatrix& m, const ProjMatrix& n) {
  if (m.det() != n.det()) return std::nullopt;
  const auto pm = presentations(m);
  const auto pn = presentations(n);
  const Presentation& km = pick(pm);
  const Presentation& kn = pick(pn);
  if (compare_presentation(km.trace, km.canon.form, kn.trace, kn.canon.form) != 0) return std::nullopt;
  // Q_M o g_M = K = Q_N o g_N (up to the common sign), so g = g_M g_N^{-1}.
  const ProjMatrix g = km.canon.gamma * kn.canon.gamma.inverse();
  if (g.inverse() * m * g != n) {
    std::ostringstream os;
    os << "are_conjugate: certificate " << g << " fails for " << m << " ~ " << n;
    throw std::logic_error(os.str());
  }
  return g;
}

CosetKey right_coset_key(const ProjMatrix& m) {
  // Column operations: (a, b) gamma = (g, 0) with gamma = [x, -b/g; y, a/g].
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m.a().get_mpz_t(), m.b().get_mpz_t());
  const Int d = m.det() / g;
  const Int c = floor_mod(m.c() * x + m.d() * y, d);
  return {ProjMatrix::from(g, Int(0), c, d)};
}

OrbitKey gamma_inf_orbit_key(const ProjMatrix& m) {
  // Canonical sign already has c > 0, or c = 0 and a, d > 0.
  if (m.c() != 0) {
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), m.a().get_mpz_t(), m.c().get_mpz_t());
    return {ProjMatrix::from(m.a() - k * m.c(), m.b() - k * m.d(), m.c(), m.d())};
  }
  return {ProjMatrix::from(m.a(), floor_mod(m.b(), m.d()), m.c(), m.d())};
}

DoubleCosetKey double_coset_key(const ProjMatrix& m) {
  const Int e1 = gcd(gcd(m.a(), m.b()), gcd(m.c(), m.d()));
  return {e1, m.det() / e1};
}

std::vector<CosetKey> all_right_cosets(const Int& n) {
  std::vector<CosetKey> out;
  for (Int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const Int d = n / a;
    for (Int c = 0; c < d; ++c) out.push_back({ProjMatrix::from(a, Int(0), c, d)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DoubleCosetKey> all_double_cosets(const Int& n) {
  std::vector<DoubleCosetKey> out;
  for (Int e = 1; e * e <= n; ++e) {
    if (n % (e * e) == 0) out.push_back({e, n / e});
  }
  return out;
}

Cusp Cusp::make(Int p, Int q) {
  if (p == 0 && q == 0) throw std::invalid_argument("Cusp: (0:0) is not a point");
  Int g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::string Cusp::str() const {
  if (q == 0) return "inf";
  std::ostringstream os;
  os << p;
  if (q != 1) os << "/" << q;
  return os.str();
}

void CuspDivisor::add(const Cusp& x, const Rational& q) {
  if (sgn(q) == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, q);
  if (inserted) return;
  it->second += q;
  if (sgn(it->second) == 0) terms_.erase(it);
}

std::string CuspDivisor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q << "[" << x.str() << "]";
  }
  return os.str();
}

Cusp act_on_cusp(const ProjMatrix& m, const Cusp& x) {
  return Cusp::make(m.a() * x.p + m.b() * x.q, m.c() * x.p + m.d() * x.q);
}

CuspDivisor act_on_divisor(const ProjMatrix& m, const CuspDivisor& d) {
  CuspDivisor out;
  for (const auto& [x, q] : d.terms()) out.add(act_on_cusp(m, x), q);
  return out;
}

CuspDivisor act_on_divisor(const RingElement& xi, const CuspDivisor& d) {
  CuspDivisor out;
  for (const auto& [m, c] : xi.terms())
    for (const auto& [x, q] : d.terms()) out.add(act_on_cusp(m, x), c * q);
  return out;
}

CuspDivisor zero_minus_infinity() {
  CuspDivisor d;
  d.add(Cusp::zero(), Rational(1));
  d.add(Cusp::infinity(), Rational(-1));
  return d;
}

}  // namespace hecke::qf
