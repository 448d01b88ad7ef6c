#include "hecke/elements.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "hecke/quadform.hpp"

namespace hecke::elem {

namespace {

// --- constraint parser --------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<Atom> parse() {
    std::vector<Atom> out;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      parse_chain(out);
      skip();
      if (pos_ < s_.size()) expect(';');
    }
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("constraint parse error at " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "': " + what);
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool relation(Rel& r) {
    skip();
    if (s_.compare(pos_, 2, "<=") == 0) {
      r = Rel::le;
      pos_ += 2;
      return true;
    }
    if (pos_ < s_.size() && s_[pos_] == '<') {
      r = Rel::lt;
      ++pos_;
      return true;
    }
    if (pos_ < s_.size() && s_[pos_] == '=') {
      r = Rel::eq;
      ++pos_;
      return true;
    }
    return false;
  }

  LinearForm term() {
    LinearForm f;
    bool first = true;
    for (;;) {
      skip();
      long sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      long coef = 1;
      bool have_num = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          coef = coef * 10 + (s_[pos_++] - '0');
        have_num = true;
      }
      int var = -1;
      if (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'd') var = s_[pos_++] - 'a';
      if (var < 0 && !have_num) error("expected a term");
      f.k[var < 0 ? 4 : var] += sign * coef;
      first = false;
    }
    return f;
  }

  void parse_chain(std::vector<Atom>& out) {
    LinearForm lhs = term();
    Rel r;
    if (!relation(r)) error("expected a relation");
    do {
      LinearForm rhs = term();
      out.push_back({lhs, rhs, r});
      lhs = rhs;
    } while (relation(r));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// --- weights --------------------------------------------------------------------

Rational pair_weight(const Atom& x, const Atom& y) {
  if (x.rhs == y.lhs || y.rhs == x.lhs) return Rational(1, 6);  // nested A <= B <= C
  if (x.lhs == y.lhs || x.rhs == y.rhs) return Rational(1, 3);  // overlapping A <= B, A <= C
  return Rational(1, 4);                                         // independent
}

Rational bracket_weight(const Entries& m, const Descriptor& d) {
  std::vector<const Atom*> eq;
  for (const auto& a : d.first)
    if (a.is_equality(m)) eq.push_back(&a);
  switch (eq.size()) {
    case 0:
      return Rational(1);
    case 1:
      return Rational(1, 2);
    case 2:
      return pair_weight(*eq[0], *eq[1]);
    default: {
      std::ostringstream os;
      os << "weight_c: " << eq.size() << " first-line equalities in " << d.name << " at [" << m[0]
         << "," << m[1] << "," << m[2] << "," << m[3] << "]";
      throw std::logic_error(os.str());
    }
  }
}

Rational star_weight(const Entries& m, const Descriptor& d) {
  for (const auto& ex : d.exceptions) {
    bool all = true;
    for (const auto& a : ex) all = all && a.is_equality(m);
    if (all) return Rational(1, 4);
  }
  for (const auto& a : d.first)
    if (a.is_equality(m)) return Rational(1, 2);
  return Rational(1);
}

Descriptor make(std::string name, std::string first, std::string second, Mode mode, BoundFamily f,
                std::vector<std::string> exceptions = {}) {
  Descriptor d{std::move(name), std::move(first), std::move(second), mode, f, std::move(exceptions),
               {}, {}, {}};
  d.first = parse_constraints(d.first_line);
  d.second = parse_constraints(d.second_line);
  for (const auto& e : d.star_exceptions) d.exceptions.push_back(parse_constraints(e));
  return d;
}

std::vector<Descriptor> build_table() {
  using M = Mode;
  using B = BoundFamily;
  return {
      make("E", "0<=a-d<=-b; a-d<=c", "b<0<c", M::bracket, B::elliptic),
      make("H", "a-d<=-b<=c", "c=0<a", M::bracket, B::h_term),
      make("X", "0<=a-d; -b<=c", "b<0<d", M::bracket, B::positive),
      make("Y", "a-d<=-b<=c", "0<c<a", M::bracket, B::positive),
      make("Z", "a-d<=c<=-b", "0<a; 0<c", M::bracket, B::z_term),
      make("T1", "a-d<=-b<=c", "0<=c<a", M::bracket, B::t1),
      make("T2", "-b<=a-d<=c", "b<d<=0", M::bracket, B::t2),
      make("T3", "0<=a-d<=c<=-b", "a<=0<c", M::bracket, B::elliptic),
      make("T4", "0<=a-d<=-b<=c", "d<=0<-b", M::bracket, B::elliptic),
      make("F", "0<=a-d<=c; a-d<=-b", "d<=b<0<c", M::bracket, B::elliptic),
      make("G", "0<=a-d<=c; a-d<=-b; a<=-b-c", "a<=0; b<0<c", M::star, B::elliptic,
           {"a-d=c=-b", "a=d=-b-c"}),
      make("corner", "a-d=c=-b", "d<=0<a", M::plain, B::elliptic),
  };
}

Entries entries_of(const ProjMatrix& m) {
  auto get = [](const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("matrix entry exceeds 64 bits");
    return x.get_si();
  };
  return {get(m.a()), get(m.b()), get(m.c()), get(m.d())};
}

ProjMatrix matrix_of(const Entries& e) {
  return ProjMatrix::from(std::int64_t{e[0]}, std::int64_t{e[1]}, std::int64_t{e[2]},
                          std::int64_t{e[3]});
}

long isqrt_long(long n) {
  long r = static_cast<long>(qf::isqrt(Int(n)).get_si());
  return r;
}

void check_n(long n) {
  if (n <= 0) throw std::invalid_argument("determinant must be positive, got " + std::to_string(n));
  if (n > (1L << 24)) throw std::invalid_argument("determinant too large for enumeration");
}

// Visits every canonical matrix of determinant n in the window of family f.
template <class Visit>
void for_each_in_box(BoundFamily f, long n, Visit&& visit) {
  const EnumerationBox box = enumeration_box(f, n);
  for (long c = box.c_lo; c <= box.c_hi; ++c)
    for (long a = box.a_lo; a <= box.a_hi; ++a)
      for (long d = box.d_lo; d <= box.d_hi; ++d) {
        const long num = a * d - n;
        if (num % c != 0) continue;
        visit(Entries{a, num / c, c, d});
      }
  if (box.c_zero)
    for (long a = 1; a <= n; ++a) {
      if (n % a != 0) continue;
      for (long b = box.b0_lo; b <= box.b0_hi; ++b) visit(Entries{a, b, 0, n / a});
    }
}

// chi and chi+- on entries; z_M is in the closure of the region iff every
// constraint holds, and the boundary value follows from which ones are tight.
bool elliptic_entries(const Entries& m) {
  const long t = m[0] + m[3];
  const long n = m[0] * m[3] - m[1] * m[2];
  return t * t < 4 * n;
}

Rational chi_e(const Entries& m) {
  const long x = m[0] - m[3], c = m[2], mb = -m[1];
  if (x < 0 || x > c || mb < x) return 0;
  const bool re0 = x == 0, re_half = x == c, arc1 = mb == x;
  if (re_half && arc1) return Rational(1, 3);  // rho
  const int k = re0 + re_half + arc1;
  if (k == 0) return 1;
  if (k == 1) return Rational(1, 2);
  throw std::logic_error("chi: impossible boundary combination");
}

Rational chi_plus_e(const Entries& m) {
  const long x = m[0] - m[3], c = m[2], mb = -m[1];
  if (x < 0 || x > c || mb < c) return 0;
  const bool re0 = x == 0, re_half = x == c, arc0 = mb == c;
  if (re0 && arc0) return Rational(1, 4);       // i
  if (re_half && arc0) return Rational(1, 6);   // rho
  const int k = re0 + re_half + arc0;
  if (k == 0) return 1;
  if (k == 1) return Rational(1, 2);
  throw std::logic_error("chi+: impossible boundary combination");
}

Rational chi_minus_e(const Entries& m) {
  const long x = m[0] - m[3], c = m[2], mb = -m[1];
  if (x < 0 || mb > c || mb < x) return 0;
  const bool re0 = x == 0, arc0 = mb == c, arc1 = mb == x;
  if (re0 && arc0) return Rational(1, 4);   // i
  if (arc0 && arc1) return Rational(1, 6);  // rho
  const int k = re0 + arc0 + arc1;
  if (k == 0) return 1;
  if (k == 1) return Rational(1, 2);
  throw std::logic_error("chi-: impossible boundary combination");
}

Rational alpha_e(const Entries& m) {
  if (!elliptic_entries(m)) return 0;
  Rational r = 0;
  if (m[0] <= 0) r += chi_plus_e(m);
  if (m[3] <= 0) r += chi_minus_e(m);
  return r;
}

std::shared_mutex memo_mutex;
std::map<std::pair<std::string, long>, RingElement> memo;

}  // namespace

// --- constraints ------------------------------------------------------------------

std::string LinearForm::str() const {
  std::ostringstream os;
  const char* names = "abcd";
  bool any = false;
  for (int i = 0; i < 4; ++i) {
    if (k[i] == 0) continue;
    if (k[i] < 0)
      os << "-";
    else if (any)
      os << "+";
    if (k[i] != 1 && k[i] != -1) os << (k[i] < 0 ? -k[i] : k[i]);
    os << names[i];
    any = true;
  }
  if (k[4] != 0 || !any) {
    if (any && k[4] > 0) os << "+";
    os << k[4];
  }
  return os.str();
}

bool Atom::holds(const Entries& m) const {
  const long l = lhs.eval(m), r = rhs.eval(m);
  switch (rel) {
    case Rel::le:
      return l <= r;
    case Rel::lt:
      return l < r;
    case Rel::eq:
      return l == r;
  }
  return false;
}

std::vector<Atom> parse_constraints(std::string_view text) { return Parser(text).parse(); }

bool Descriptor::satisfies(const Entries& m) const {
  for (const auto& a : first)
    if (!a.holds(m)) return false;
  for (const auto& a : second)
    if (!a.holds(m)) return false;
  return true;
}

nlohmann::json Descriptor::to_json() const {
  static const char* mode_names[] = {"bracket", "star", "plain"};
  static const char* family_names[] = {"elliptic", "positive", "z_term", "t1", "h_term", "t2"};
  nlohmann::json j{{"name", name},
                   {"first_line", first_line},
                   {"second_line", second_line},
                   {"mode", mode_names[static_cast<int>(mode)]},
                   {"bounds", family_names[static_cast<int>(family)]}};
  if (!star_exceptions.empty()) j["weight_quarter_when"] = star_exceptions;
  return j;
}

const std::vector<Descriptor>& descriptor_table() {
  static const std::vector<Descriptor> table = build_table();
  return table;
}

const Descriptor& descriptor(std::string_view name) {
  for (const auto& d : descriptor_table())
    if (d.name == name) return d;
  throw std::invalid_argument("unknown descriptor: " + std::string(name));
}

Rational weight_c(const Entries& m, const Descriptor& d) {
  if (!d.satisfies(m)) throw std::invalid_argument("weight_c: matrix does not satisfy " + d.name);
  switch (d.mode) {
    case Mode::bracket:
      return bracket_weight(m, d);
    case Mode::star:
      return star_weight(m, d);
    case Mode::plain:
      return Rational(1);
  }
  return Rational(0);
}

Rational weight_c(const ProjMatrix& m, const Descriptor& d) { return weight_c(entries_of(m), d); }

// --- enumeration --------------------------------------------------------------------

EnumerationBox enumeration_box(BoundFamily f, long n) {
  const long r = isqrt_long(n) + 1;
  const long c43 = 4 * n / 3;
  switch (f) {
    case BoundFamily::elliptic:
      // |a-d| <= c and |a-d| <= -b give 3(-b)c <= 4n - t^2.
      return {1, c43, -2 * r, 2 * r, -2 * r, 2 * r, false, 0, -1};
    case BoundFamily::positive:
      // a, d, c, -b positive up to sign of b in Y; every term of ad - bc is bounded by n.
      return {1, n, 1, n, 1, n, false, 0, -1};
    case BoundFamily::z_term:
      // elliptic when a >= d, all entries positive when a < d
      return {1, std::max(c43, n), 1, std::max(2 * r, n), -2 * r, std::max(2 * r, n), false, 0, -1};
    case BoundFamily::t1:
      return {1, n, 1, n, 1, n, true, 0, n};
    case BoundFamily::h_term:
      return {1, 0, 0, -1, 0, -1, true, 0, n};
    case BoundFamily::t2:
      // a >= d - b > 0, d > -sqrt(n), c <= n - d^2
      return {1, n, -r, n, -r, 0, false, 0, -1};
  }
  throw std::logic_error("enumeration_box: unknown family");
}

RingElement enumerate_term(const Descriptor& d, long n) {
  check_n(n);
  const auto key = std::make_pair(d.name, n);
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  RingElement out;
  for_each_in_box(d.family, n, [&](const Entries& m) {
    if (d.satisfies(m)) out.add(matrix_of(m), weight_c(m, d));
  });
  std::unique_lock lock(memo_mutex);
  memo.emplace(key, out);
  return out;
}

RingElement enumerate_term(std::string_view name, long n) { return enumerate_term(descriptor(name), n); }

RingElement build_wTn(long n) {
  return enumerate_term("T1", n) - enumerate_term("T2", n) - enumerate_term("T3", n) -
         enumerate_term("T4", n);
}

RingElement build_wTn_alt(long n) {
  const ProjMatrix S = mat::S(), U = mat::U(), U2 = mat::U2();
  const RingElement X = enumerate_term("X", n), Y = enumerate_term("Y", n), Z = enumerate_term("Z", n);
  return -enumerate_term("E", n) + enumerate_term("H", n) + X - S * X * S + Y - U2 * Y * U + Z -
         U2 * Z * U;
}

RingElement build_wTn_checked(long n) {
  RingElement t = build_wTn(n);
  if (t != build_wTn_alt(n))
    throw std::logic_error("the two constructions differ at n = " + std::to_string(n));
  return t;
}

RingElement build_F(long n) { return enumerate_term("F", n); }
RingElement build_G(long n) { return enumerate_term("G", n); }
RingElement corner_term(long n) { return enumerate_term("corner", n); }

RingElement T_infinity(long n) {
  check_n(n);
  RingElement out;
  for (long a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const long d = n / a;
    for (long b = 0; b < d; ++b) out.add(matrix_of({a, b, 0, d}), 1);
  }
  return out;
}

RingElement intro_wT1() { return RingElement::identity() - pi_S() - pi_U(); }

RingElement intro_wT2() {
  auto M = [](long a, long b, long c, long d) { return matrix_of({a, b, c, d}); };
  return make_element({{M(2, 0, 0, 1), 1},
                       {M(1, 1, -1, 1), Rational(-1, 2)},
                       {M(1, -1, 1, 1), Rational(-1, 2)},
                       {M(1, -1, 2, 0), -1},
                       {M(0, 2, -1, 1), -1},
                       {M(0, -2, 1, 0), -1}});
}

// --- fundamental domain ---------------------------------------------------------------

bool is_elliptic(const ProjMatrix& m) {
  const Int t = m.trace();
  return t * t < 4 * m.det();
}

FixedPointData fixed_point(const ProjMatrix& m) {
  if (!is_elliptic(m)) throw std::invalid_argument("fixed_point: not elliptic: " + m.str());
  const Int& c = m.c();
  return {frac(m.a() - m.d(), 2 * c), frac(-m.b(), c), frac(-m.b() - m.a() + m.d() + c, c)};
}

Rational chi(const ProjMatrix& m) {
  if (!is_elliptic(m)) throw std::invalid_argument("chi: not elliptic: " + m.str());
  return chi_e(entries_of(m));
}

Rational chi_plus(const ProjMatrix& m) {
  if (!is_elliptic(m)) throw std::invalid_argument("chi+: not elliptic: " + m.str());
  return chi_plus_e(entries_of(m));
}

Rational chi_minus(const ProjMatrix& m) {
  if (!is_elliptic(m)) throw std::invalid_argument("chi-: not elliptic: " + m.str());
  return chi_minus_e(entries_of(m));
}

Rational alpha_weight(const ProjMatrix& m) {
  if (!is_elliptic(m)) return 0;
  return alpha_e(entries_of(m));
}

RingElement alpha_element(long n) {
  check_n(n);
  RingElement out;
  for_each_in_box(BoundFamily::elliptic, n, [&](const Entries& m) {
    if (elliptic_entries(m)) out.add(matrix_of(m), alpha_e(m));
  });
  return out;
}

RingElement chi_element(long n) {
  check_n(n);
  RingElement out;
  for_each_in_box(BoundFamily::elliptic, n, [&](const Entries& m) {
    if (elliptic_entries(m)) out.add(matrix_of(m), chi_e(m));
  });
  return out;
}

nlohmann::json dump_descriptors() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : descriptor_table()) out.push_back(d.to_json());
  return out;
}

}  // namespace hecke::elem
