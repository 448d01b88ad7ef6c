#include "hecke/verifier.hpp"

#include <random>
#include <stdexcept>

#include "hecke/class_numbers.hpp"
#include "hecke/elements.hpp"
#include "hecke/serialize.hpp"
#include "hecke/words.hpp"

namespace hecke::verify {

using nlohmann::json;

namespace {

RingElement one_minus(const ProjMatrix& g) { return RingElement::identity() - RingElement(g); }

json orbit_witness(const qf::OrbitKey& k, const Rational& s) {
  return {{"orbit", matrix_to_json(k.rep)}, {"sum", rational_to_json(s)}};
}

void require_det(const RingElement& xi, long n, const char* who) {
  for (const auto& [m, q] : xi.terms())
    if (m.det() != n)
      throw std::invalid_argument(std::string(who) + ": support has determinant " + m.det().get_str() +
                                  ", expected " + std::to_string(n));
}

std::optional<std::pair<qf::OrbitKey, Rational>> first_nonzero_orbit(const RingElement& zeta) {
  auto sums = orbit_sums(zeta);
  if (sums.empty()) return std::nullopt;
  return *sums.begin();
}

// Union-find over difference constraints v(x) - v(y) = w. Node 0 is pinned
// to value 0.
class Potentials {
 public:
  int node() {
    parent_.push_back(static_cast<int>(parent_.size()));
    offset_.emplace_back(0);
    return parent_.back();
  }
  // Returns false on an inconsistent constraint.
  bool relate(int x, int y, Rational w) {
    auto [rx, ox] = find(x);
    auto [ry, oy] = find(y);
    if (rx == ry) return ox - oy == w;
    // v(x) = ox + v(rx), v(y) = oy + v(ry)
    if (rx == 0) std::swap(rx, ry), std::swap(ox, oy), w = -w;
    parent_[rx] = ry;
    offset_[rx] = w + oy - ox;
    return true;
  }
  // Value relative to the pinned node, or to the component root if unpinned.
  Rational value(int x) { return find(x).second; }

 private:
  std::pair<int, Rational> find(int x) {
    if (parent_[x] == x) return {x, Rational(0)};
    auto [r, o] = find(parent_[x]);
    offset_[x] += o;
    parent_[x] = r;
    return {r, offset_[x]};
  }
  std::vector<int> parent_;
  std::vector<Rational> offset_;
};

ProjMatrix s_orbit_key(const ProjMatrix& m) { return std::min(m, mat::S() * m); }
ProjMatrix u_orbit_key(const ProjMatrix& m) {
  return std::min({m, mat::U() * m, mat::U2() * m});
}

// Enumerates, once per class, every Gamma-conjugacy class of determinant n
// with nonzero weight, directly from forms.
std::map<qf::ConjClassKey, Rational> nonzero_weight_classes(long n, json& problems) {
  std::map<qf::ConjClassKey, Rational> out;
  auto put = [&](const ProjMatrix& m) {
    const auto k = qf::conjugacy_key(m);
    const Rational w = qf::class_weight(k);
    if (w == 0) {
      problems.push_back({{"zero_weight_enumerated", k.to_json()}});
      return;
    }
    if (!out.emplace(k, w).second) problems.push_back({{"enumerated_twice", k.to_json()}});
  };
  const long tmax = n + 1;
  // elliptic: t over all integers with t^2 < 4n, Q positive definite
  for (long t = -tmax; t <= tmax; ++t) {
    const long D = 4 * n - t * t;
    if (D <= 0) continue;
    for (const auto& f : cn::reduced_forms(Int(D))) put(qf::matrix_of_form(Int(t), f));
  }
  // split hyperbolic: t > 0, t^2 - 4n = u^2, forms [0, u, c] with 0 <= c < u
  for (long t = 1; t <= tmax; ++t) {
    const long D = t * t - 4 * n;
    if (D <= 0 || !qf::is_square(Int(D))) continue;
    const long u = qf::isqrt(Int(D)).get_si();
    for (long c = 0; c < u; ++c) put(qf::matrix_of_form(Int(t), {Int(0), Int(u), Int(c)}));
  }
  const long r = qf::isqrt(Int(n)).get_si();
  if (r * r == n) put(mat::scalar(Int(r)));
  return out;
}

}  // namespace

// --- sums -----------------------------------------------------------------------------

std::map<qf::OrbitKey, Rational> orbit_sums(const RingElement& zeta) {
  std::map<qf::OrbitKey, Rational> sums;
  for (const auto& [m, q] : zeta.terms()) sums[qf::gamma_inf_orbit_key(m)] += q;
  std::erase_if(sums, [](const auto& kv) { return kv.second == 0; });
  return sums;
}

std::map<qf::CosetKey, Rational> coset_sums(const RingElement& xi) {
  std::map<qf::CosetKey, Rational> sums;
  for (const auto& [m, q] : xi.terms()) sums[qf::right_coset_key(m)] += q;
  return sums;
}

std::map<qf::ConjClassKey, Rational> class_sums(const RingElement& xi) {
  std::map<qf::ConjClassKey, Rational> sums;
  for (const auto& [m, q] : xi.terms()) sums[qf::conjugacy_key(m)] += q;
  return sums;
}

bool in_ideal_1mT(const RingElement& zeta) { return orbit_sums(zeta).empty(); }

bool in_ideal_I(const RingElement& xi) { return in_ideal_1mT(one_minus(mat::S()) * xi); }

std::optional<std::pair<RingElement, RingElement>> decompose_I(const RingElement& eta) {
  // eta(M) = s(SM-orbit of M) + h(U-orbit of M); with v = s on S-orbits and
  // v = -h on U-orbits this is v(o) - v(p) = eta(M). Orbits away from the
  // support carry 0.
  Potentials pot;
  const int ground = pot.node();
  std::map<ProjMatrix, int> s_node, u_node;
  for (const auto& [m, q] : eta.terms()) {
    if (!s_node.count(s_orbit_key(m))) s_node[s_orbit_key(m)] = pot.node();
    if (!u_node.count(u_orbit_key(m))) u_node[u_orbit_key(m)] = pot.node();
  }
  auto lookup = [&](const std::map<ProjMatrix, int>& nodes, const ProjMatrix& k) {
    auto it = nodes.find(k);
    return it == nodes.end() ? ground : it->second;
  };
  std::vector<ProjMatrix> edges;
  for (const auto& [k, id] : s_node) edges.insert(edges.end(), {k, mat::S() * k});
  for (const auto& [k, id] : u_node) edges.insert(edges.end(), {k, mat::U() * k, mat::U2() * k});
  for (const auto& m : edges) {
    const int o = lookup(s_node, s_orbit_key(m)), p = lookup(u_node, u_orbit_key(m));
    if (!pot.relate(o, p, eta.coeff(m))) return std::nullopt;
  }
  RingElement a, b;
  for (const auto& [k, id] : s_node) {
    const Rational v = pot.value(id);
    if (v != 0) a += v * (RingElement(k) + RingElement(mat::S() * k));
  }
  for (const auto& [k, id] : u_node) {
    const Rational v = -pot.value(id);
    if (v != 0) b += v * (RingElement(k) + RingElement(mat::U() * k) + RingElement(mat::U2() * k));
  }
  if (a + b != eta || pi_S() * a != a || pi_U() * b != b) return std::nullopt;
  return std::make_pair(a, b);
}

// --- property (A) ---------------------------------------------------------------------

CheckReport verify_A(const RingElement& xi, long n) {
  require_det(xi, n, "verify_A");
  CheckReport r{"A", "", n, true, nullptr, std::nullopt, std::nullopt, nullptr};
  const RingElement oneS = one_minus(mat::S());
  const RingElement tinf = elem::T_infinity(n);
  if (auto w = first_nonzero_orbit(oneS * xi - tinf * oneS)) fail(r, orbit_witness(w->first, w->second));

  json per = json::array();
  std::optional<Rational> common;
  bool all_same = true;
  for (const auto& dc : qf::all_double_cosets(Int(n))) {
    auto in_dc = [&](const ProjMatrix& m) { return qf::double_coset_key(m) == dc; };
    const RingElement part = xi.filter(in_dc);
    const RingElement tpart = tinf.filter(in_dc);
    // the candidate is minus any coset sum; T_D^inf (1 - S) has a nonzero orbit sum
    const Rational cand = -part.pairing([&](const ProjMatrix& m) {
      return qf::right_coset_key(m) == qf::right_coset_key(tpart.terms().begin()->first);
    });
    json e{{"e1", int_to_json(dc.e1)}, {"e2", int_to_json(dc.e2)}};
    if (in_ideal_1mT(oneS * part - cand * (tpart * oneS))) {
      e["alpha"] = rational_to_json(cand);
      if (common && *common != cand) all_same = false;
      common = cand;
    } else {
      e["alpha"] = nullptr;
      all_same = false;
    }
    per.push_back(e);
  }
  if (all_same && common) r.alpha = common;
  r.details = {{"double_cosets", per}};
  return r;
}

CheckReport verify_A_merel(const RingElement& xi) {
  CheckReport r{"merel", "", 0, true, nullptr, std::nullopt, std::nullopt, nullptr};
  const auto det = xi.homogeneous_det();
  if (xi.empty() || !det) return fail(r, {{"reason", xi.empty() ? "zero element" : "mixed determinant"}});
  r.n = det->get_si();
  std::map<qf::CosetKey, RingElement> parts;
  const RingElement adj = xi.adjoint();
  for (const auto& [m, q] : adj.terms()) parts[qf::right_coset_key(m)].add(m, q);
  const qf::CuspDivisor target = qf::zero_minus_infinity();
  for (const auto& k : qf::all_right_cosets(*det)) {
    auto it = parts.find(k);
    const qf::CuspDivisor image =
        it == parts.end() ? qf::CuspDivisor() : qf::act_on_divisor(it->second, target);
    if (!(image == target)) return fail(r, {{"coset", matrix_to_json(k.rep)}, {"image", image.str()}});
  }
  return r;
}

// --- property (B) ---------------------------------------------------------------------

CheckReport verify_B(const RingElement& xi) {
  CheckReport r{"B", "", 0, true, nullptr, std::nullopt, std::nullopt, nullptr};
  if (auto d = xi.homogeneous_det()) r.n = d->get_si();
  const RingElement xs = xi * pi_S(), xu = xi * pi_U();
  const RingElement d1 = pi_U() * xs - xs, d2 = pi_S() * xu - xu;
  if (!d1.empty()) {
    const auto& [m, q] = *d1.terms().begin();
    return fail(r, {{"identity", "pi_U xi pi_S = xi pi_S"}, {"matrix", matrix_to_json(m)},
                    {"difference", rational_to_json(q)}});
  }
  if (!d2.empty()) {
    const auto& [m, q] = *d2.terms().begin();
    return fail(r, {{"identity", "pi_S xi pi_U = xi pi_U"}, {"matrix", matrix_to_json(m)},
                    {"difference", rational_to_json(q)}});
  }
  return r;
}

// --- coset and class sums ----------------------------------------------------------------

CheckReport verify_coset_sums(const RingElement& xi, long n, const Rational& expected) {
  require_det(xi, n, "verify_coset_sums");
  CheckReport r{"coset", "", n, true, nullptr, std::nullopt, std::nullopt, nullptr};
  const auto sums = coset_sums(xi);
  const auto cosets = qf::all_right_cosets(Int(n));
  std::map<qf::DoubleCosetKey, std::optional<Rational>> beta;
  std::map<qf::DoubleCosetKey, bool> constant;
  for (const auto& k : cosets) {
    auto it = sums.find(k);
    const Rational s = it == sums.end() ? Rational(0) : it->second;
    const auto dc = qf::double_coset_key(k.rep);
    if (!beta[dc]) {
      beta[dc] = s;
      constant[dc] = true;
    } else if (*beta[dc] != s) {
      constant[dc] = false;
    }
    if (s != expected && r.pass) fail(r, {{"coset", matrix_to_json(k.rep)}, {"sum", rational_to_json(s)}});
  }
  if (sums.size() != cosets.size() && r.pass)
    fail(r, {{"reason", "support meets a coset outside the enumeration"}});

  json per = json::array();
  std::optional<Rational> common;
  bool all_same = true;
  for (const auto& [dc, b] : beta) {
    json e{{"e1", int_to_json(dc.e1)}, {"e2", int_to_json(dc.e2)}};
    e["beta"] = constant[dc] ? rational_to_json(*b) : json(nullptr);
    if (!constant[dc] || (common && *common != *b)) all_same = false;
    if (constant[dc]) common = *b;
    per.push_back(e);
  }
  if (all_same && common) r.beta = common;
  r.details = {{"cosets", cosets.size()}, {"double_cosets", per}};
  return r;
}

CheckReport verify_class_sums(const RingElement& xi, long n) {
  require_det(xi, n, "verify_class_sums");
  CheckReport r{"class", "", n, true, nullptr, std::nullopt, std::nullopt, nullptr};
  json problems = json::array();
  const auto expected = nonzero_weight_classes(n, problems);
  if (!problems.empty()) return fail(r, {{"enumeration", problems}});

  const auto sums = class_sums(xi);
  for (const auto& [k, w] : expected) {
    if (qf::class_weight(k) != w) return fail(r, {{"class", k.to_json()}, {"reason", "weight mismatch"}});
    auto it = sums.find(k);
    const Rational s = it == sums.end() ? Rational(0) : it->second;
    if (s != w)
      return fail(r, {{"class", k.to_json()}, {"sum", rational_to_json(s)}, {"expected", rational_to_json(w)}});
  }
  for (const auto& [k, s] : sums) {
    if (expected.count(k)) continue;
    if (s != 0) return fail(r, {{"class", k.to_json()}, {"sum", rational_to_json(s)}, {"expected", "0"}});
  }

  // per-trace totals against class numbers
  std::map<long, Rational> by_trace;
  for (const auto& [k, s] : sums) by_trace[Int(abs(k.trace)).get_si()] += s;
  json totals = json::array();
  for (long t = 0; t <= n + 1; ++t) {
    const Rational h = cn::hurwitz_H(Int(4 * n - t * t));
    const Rational want = t == 0 ? Rational(-h) : Rational(-2 * h);
    const Rational got = by_trace.count(t) ? by_trace[t] : Rational(0);
    if (want != 0 || got != 0) totals.push_back({{"t", t}, {"sum", rational_to_json(got)}});
    if (got != want && r.pass)
      fail(r, {{"trace", t}, {"sum", rational_to_json(got)}, {"expected", rational_to_json(want)}});
  }
  for (const auto& [t, s] : by_trace)
    if (t > n + 1 && s != 0 && r.pass) fail(r, {{"trace", t}, {"sum", rational_to_json(s)}});
  r.details = {{"classes_in_support", sums.size()}, {"nonzero_weight_classes", expected.size()},
               {"trace_totals", totals}};
  return r;
}

// --- projection -----------------------------------------------------------------------------

Projection project_to_B(const RingElement& xi) {
  const RingElement xs = xi * pi_S(), xu = xi * pi_U();
  if (!in_ideal_I(xs) || !in_ideal_I(xu)) throw std::domain_error("project_to_B: element is not in A");
  auto ds = decompose_I(xs);
  auto du = decompose_I(xu);
  if (!ds || !du)
    throw std::logic_error("project_to_B: ideal member without a local decomposition");
  Projection p{ds->first, du->second, RingElement()};
  p.P = xi - p.xi_S - p.xi_U;
  return p;
}

RingElement random_J_element(long n, unsigned seed, int terms) {
  std::mt19937 rng(seed);
  const auto reps = elem::T_infinity(n).support();
  std::uniform_int_distribution<std::size_t> pick_rep(0, reps.size() - 1);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 5), coef(-3, 3);
  auto random_matrix = [&] {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(static_cast<Letter>(letter(rng)));
    return evaluate(w) * reps[pick_rep(rng)];
  };
  RingElement eta, eta2;
  for (int i = 0; i < terms; ++i) {
    eta.add(random_matrix(), coef(rng));
    eta2.add(random_matrix(), coef(rng));
  }
  const RingElement one = RingElement::identity();
  return pi_S() * eta * (one - pi_S()) + pi_U() * eta2 * (one - pi_U());
}

// --- explicit identities ---------------------------------------------------------------------

CheckReport verify_fg_identities(long n) {
  CheckReport r{"fg-identities", "", n, true, nullptr, std::nullopt, std::nullopt, nullptr};
  const ProjMatrix S = mat::S(), U = mat::U(), U2 = mat::U2();
  const RingElement one = RingElement::identity();
  const RingElement t = elem::build_wTn(n), t1 = elem::enumerate_term("T1", n);
  const RingElement F = elem::build_F(n), G = elem::build_G(n);
  const RingElement first = -F - U * F * S - U2 * F + t1 * (one - RingElement(S));
  const RingElement second = -G - S * G * U + t1 * (one - RingElement(U)) +
                             Rational(1, 12) * elem::corner_term(n) * (one - RingElement(U));
  const RingElement via_F = -(RingElement::identity() + RingElement(U) + RingElement(U2)) * F * pi_S();
  auto witness = [](const char* which, const RingElement& diff) {
    const auto& [m, q] = *diff.terms().begin();
    return json{{"identity", which}, {"matrix", matrix_to_json(m)}, {"difference", rational_to_json(q)}};
  };
  if (t != first) return fail(r, witness("F", t - first));
  if (t != second) return fail(r, witness("G", t - second));
  if (t * pi_S() != via_F) return fail(r, witness("pi_S", t * pi_S() - via_F));
  r.details = {{"support", t.size()}, {"F", F.size()}, {"G", G.size()}};
  return r;
}

CheckReport verify_alpha_cosets(long n) {
  CheckReport r = verify_coset_sums(elem::alpha_element(n), n, Rational(1));
  r.check = "alpha-cosets";
  return r;
}

Rational alpha_total_closed_form(long n) {
  Rational h = 0;
  for (long t = -2 * n; t <= 2 * n; ++t)
    if (t * t <= 4 * n) h += cn::hurwitz_H(Int(4 * n - t * t));
  Rational mins = 0;
  for (long b = 1; b <= n; ++b)
    if (n % b == 0) mins += std::min(b, n / b);
  return h / 2 + mins / 2;
}

CheckReport verify_alpha_total(long n) {
  CheckReport r{"alpha-total", "", n, true, nullptr, std::nullopt, std::nullopt, nullptr};
  const Rational total = elem::alpha_element(n).total();
  const Rational want = alpha_total_closed_form(n);
  r.details = {{"alpha_total", rational_to_json(total)}, {"closed_form", rational_to_json(want)}};
  if (total != want) fail(r, {{"alpha_total", rational_to_json(total)}, {"closed_form", rational_to_json(want)}});
  return r;
}

}  // namespace hecke::verify
