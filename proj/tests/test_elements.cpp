#include <doctest.h>

#include "hecke/class_numbers.hpp"
#include "hecke/classify.hpp"
#include "hecke/elements.hpp"
#include "oracles.hpp"

using namespace hecke;
using namespace hecke::elem;

namespace {

ProjMatrix M(long a, long b, long c, long d) { return ProjMatrix::from(Int(a), Int(b), Int(c), Int(d)); }

const auto all = [](const ProjMatrix&) { return true; };

}  // namespace

TEST_CASE("constraint parser") {
  auto atoms = parse_constraints("0<=a-d<=-b; a-d<=c");
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[0].lhs.str() == "0");
  CHECK(atoms[0].rhs.str() == "a-d");
  CHECK(atoms[1].rhs.str() == "-b");
  CHECK(atoms[1].lhs == atoms[0].rhs);
  CHECK(atoms[2].rhs.str() == "c");
  auto g = parse_constraints("a<=-b-c; b<0<c");
  REQUIRE(g.size() == 3);
  CHECK(g[0].rhs.str() == "-b-c");
  CHECK(g[1].rel == Rel::lt);
  CHECK(parse_constraints("c=0<a")[0].rel == Rel::eq);
  CHECK(parse_constraints("2a+1<=3d")[0].lhs.str() == "2a+1");
  CHECK_THROWS_AS(parse_constraints("a<="), std::invalid_argument);
  CHECK_THROWS_AS(parse_constraints("a b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constraints("e<0"), std::invalid_argument);
}

TEST_CASE("descriptor table") {
  CHECK(descriptor_table().size() == 12);
  CHECK(descriptor("G").mode == Mode::star);
  CHECK(descriptor("corner").mode == Mode::plain);
  CHECK_THROWS_AS(descriptor("Q"), std::invalid_argument);
  CHECK(dump_descriptors().size() == 12);
  CHECK(dump_descriptors()[10]["weight_quarter_when"].size() == 2);
}

TEST_CASE("weight_c") {
  const Descriptor& h = descriptor("H");
  CHECK(weight_c(mat::I(), h) == Rational(1, 6));
  CHECK(weight_c(mat::scalar(Int(3)), h) == Rational(1, 6));
  CHECK(weight_c(M(1, 0, 0, 2), h) == Rational(1, 2));
  CHECK(weight_c(M(1, 1, 0, 3), h) == Rational(1));
  CHECK_THROWS_AS(weight_c(M(3, 0, 0, 1), h), std::invalid_argument);

  // overlapping: a-d <= c and a-d <= -b both tight
  CHECK(weight_c(M(0, -1, 1, -1), descriptor("F")) == Rational(1, 3));
  // independent: a = d and c = -b
  CHECK(weight_c(M(0, -1, 1, 0), descriptor("T3")) == Rational(1, 4));
  // nested: a-d = c = -b
  CHECK(weight_c(M(0, -1, 1, -1), descriptor("T3")) == Rational(1, 6));

  const Descriptor& g = descriptor("G");
  CHECK(weight_c(M(0, -1, 1, -1), g) == Rational(1, 4));
  CHECK(weight_c(M(0, -1, 1, 0), g) == Rational(1, 4));
  CHECK(weight_c(M(0, -2, 1, 0), g) == Rational(1, 2));
  CHECK(weight_c(M(1, -1, 1, 0), descriptor("corner")) == Rational(1));
}

TEST_CASE("enumerate_term examples") {
  CHECK(enumerate_term("H", 1) == RingElement(mat::I(), Rational(1, 6)));
  CHECK_THROWS_AS(enumerate_term("H", 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_term("nope", 1), std::invalid_argument);
  CHECK(build_wTn(1).pairing(all) == -1);
  CHECK(build_wTn(2).pairing(all) == -3);
  CHECK(build_wTn(4).coeff(mat::scalar(Int(2))) == Rational(1, 6));
  CHECK_THROWS_AS(build_wTn(0), std::invalid_argument);

  // T4 meets the coset [1,0;0,m]Gamma only in [a,-1;m,0] with a in {0, 1}.
  for (long m = 2; m <= 12; ++m) {
    const auto target = qf::right_coset_key(M(1, 0, 0, m));
    RingElement part = enumerate_term("T4", m).filter(
        [&](const ProjMatrix& x) { return qf::right_coset_key(x) == target; });
    CHECK(part == make_element({{M(0, -1, m, 0), Rational(1, 2)}, {M(1, -1, m, 0), Rational(1, 2)}}));
  }

  CHECK(corner_term(1) == RingElement(M(1, -1, 1, 0)));
  for (long n = 1; n <= 12; ++n) {
    const RingElement corner = corner_term(n);
    for (const auto& [m, q] : corner.terms()) {
      CHECK(m.a() - m.d() == m.c());
      CHECK(m.c() == -m.b());
    }
  }
  CHECK(build_F(1).coeff(mat::S()) == 0);
}

TEST_CASE("the two constructions agree") {
  for (long n = 1; n <= 30; ++n) CHECK(build_wTn(n) == build_wTn_alt(n));
  CHECK_NOTHROW(build_wTn_checked(7));
}

TEST_CASE("descriptor enumeration equals naive box enumeration") {
  for (long n = 1; n <= 8; ++n)
    for (const auto& d : descriptor_table()) {
      CAPTURE(d.name);
      CAPTURE(n);
      CHECK(enumerate_term(d, n) == oracle::box_enumeration(d, n, 4 * n));
    }
}

TEST_CASE("T_infinity") {
  CHECK(T_infinity(1) == RingElement(mat::I()));
  CHECK(T_infinity(2) == make_element({{M(1, 0, 0, 2), 1}, {M(1, 1, 0, 2), 1}, {M(2, 0, 0, 1), 1}}));
  for (long n = 1; n <= 40; ++n) CHECK(Int(T_infinity(n).size()) == cn::sigma(1, Int(n)));
  CHECK_THROWS_AS(T_infinity(-1), std::invalid_argument);
}

TEST_CASE("intro elements") {
  CHECK(intro_wT1().coeff(mat::I()) == Rational(1, 6));
  CHECK(intro_wT1() == build_wTn(1));
  CHECK(intro_wT2().pairing(all) == -3);
  CHECK(intro_wT2() != build_wTn(2));
  CHECK(*intro_wT2().homogeneous_det() == 2);
}

TEST_CASE("fixed points and chi") {
  FixedPointData z = fixed_point(mat::S());
  CHECK(z.re == 0);
  CHECK(z.abs2 == 1);
  CHECK(z.abs2_minus_one == 2);
  CHECK_THROWS_AS(fixed_point(mat::T()), std::invalid_argument);
  CHECK_THROWS_AS(chi(M(2, 1, 1, 1)), std::invalid_argument);

  const ProjMatrix rho = M(0, -1, 1, -1);  // a-d = c = -b
  CHECK(chi(rho) == Rational(1, 3));
  CHECK(chi_plus(rho) == Rational(1, 6));
  CHECK(chi_minus(rho) == Rational(1, 6));
  CHECK(chi(mat::S()) == Rational(1, 2));
  CHECK(chi_plus(mat::S()) == Rational(1, 4));
  CHECK(chi_minus(mat::S()) == Rational(1, 4));

  CHECK(alpha_weight(mat::S()) == Rational(1, 2));
  CHECK(alpha_weight(mat::U()) == Rational(1, 6));
  CHECK(alpha_weight(mat::U2()) == Rational(1, 3));
  CHECK(alpha_weight(M(2, 1, 1, 1)) == 0);
  CHECK(alpha_weight(mat::T()) == 0);
  CHECK(alpha_weight(mat::I()) == 0);

  // chi+ + chi- = chi wherever the arc |z| = 1 meets the closure of the domain
  for (long n = 1; n <= 20; ++n) {
    const RingElement e = chi_element(n);
    for (const auto& [m, q] : e.terms())
      if (-m.b() == m.c()) CHECK(chi_plus(m) + chi_minus(m) == chi(m));
  }
}

TEST_CASE("E equals the chi-weighted elliptic sum") {
  for (long n = 1; n <= 30; ++n) {
    CAPTURE(n);
    const RingElement e = enumerate_term("E", n);
    CHECK(e == chi_element(n));
    for (const auto& [m, q] : e.terms()) CHECK(q == chi(m));
  }
}

TEST_CASE("T3 + T4 equals the alpha-weighted elliptic sum") {
  for (long n = 1; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(enumerate_term("T3", n) + enumerate_term("T4", n) == alpha_element(n));
  }
}
