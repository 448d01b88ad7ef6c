#include <doctest.h>

#include "fixtures.hpp"
#include "hecke/class_numbers.hpp"
#include "hecke/elements.hpp"
#include "hecke/verifier.hpp"

using namespace hecke;
using namespace hecke::verify;
using fixtures::M;

namespace {

const RingElement one = RingElement::identity();

RingElement ones(const ProjMatrix& g) { return one - RingElement(g); }

}  // namespace

TEST_CASE("ideal membership") {
  const ProjMatrix m = M(2, 1, 1, 3);
  CHECK(in_ideal_1mT(ones(mat::T()) * RingElement(m)));
  CHECK_FALSE(in_ideal_1mT(RingElement(m)));
  CHECK_FALSE(in_ideal_1mT(elem::T_infinity(2) * ones(mat::S())));
  CHECK(in_ideal_I(pi_S() * RingElement(m)));
  CHECK(in_ideal_I(pi_U() * RingElement(m)));
  CHECK_FALSE(in_ideal_I(RingElement(m)));
  CHECK(in_ideal_I(pi_S() * RingElement(m) - Rational(3) * pi_U() * RingElement(M(1, 0, 0, 2))));
}

TEST_CASE("decomposition of ideal elements") {
  const RingElement a = pi_S() * make_element({{M(2, 1, 1, 3), 2}, {M(1, 0, 0, 5), -1}});
  const RingElement b = pi_U() * make_element({{M(2, 1, 1, 3), 1}, {M(5, 2, 2, 1), Rational(1, 2)}});
  auto d = decompose_I(a + b);
  REQUIRE(d.has_value());
  CHECK(d->first == a);
  CHECK(d->second == b);
  CHECK_FALSE(decompose_I(RingElement(M(2, 1, 1, 3))).has_value());
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const RingElement j = random_J_element(6, seed);
    CHECK(in_ideal_I(j));
    CHECK(decompose_I(j).has_value());
  }
}

TEST_CASE("property (A) on the intro elements") {
  CHECK(verify_A(elem::intro_wT1(), 1).pass);
  CHECK(verify_A(elem::intro_wT2(), 2).pass);
  const auto r = verify_A(elem::build_wTn(6), 6);
  CHECK(r.pass);
  REQUIRE(r.alpha.has_value());
  CHECK(*r.alpha == 1);

  const RingElement coset = RingElement(M(1, 0, 0, 2)) + RingElement(M(1, 1, 0, 2));
  const auto bad = verify_A(coset, 2);
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.contains("orbit"));
  CHECK_THROWS_AS(verify_A(elem::intro_wT2(), 3), std::invalid_argument);

  CHECK(verify_A_merel(elem::intro_wT1()).pass);
  CHECK(verify_A_merel(elem::build_wTn(2)).pass);
  CHECK_FALSE(verify_A_merel(RingElement()).pass);
  CHECK_FALSE(verify_A_merel(coset).pass);
}

TEST_CASE("both (A) criteria hold for n <= 12 and agree on corruptions") {
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const RingElement t = elem::build_wTn(n);
    CHECK(verify_A(t, n).pass);
    CHECK(verify_A_merel(t).pass);
  }
  for (const auto& [name, x] : fixtures::corrupted_elements()) {
    CAPTURE(name);
    const long n = x.empty() ? 1 : x.terms().begin()->first.det().get_si();
    CHECK_FALSE(verify_A(x, n).pass);
    CHECK_FALSE(verify_A_merel(x).pass);
  }
}

TEST_CASE("property (B)") {
  CHECK(verify_B(elem::intro_wT1()).pass);
  CHECK(verify_B(elem::intro_wT2()).pass);
  CHECK_FALSE(verify_B(one).pass);
  for (long n = 1; n <= 12; ++n) CHECK(verify_B(elem::build_wTn(n)).pass);
}

TEST_CASE("coset sums") {
  for (long n = 1; n <= 12; ++n) {
    const auto r = verify_coset_sums(elem::build_wTn(n), n);
    CHECK(r.pass);
    REQUIRE(r.beta.has_value());
    CHECK(*r.beta == -1);
  }
  CHECK(verify_coset_sums(elem::intro_wT2(), 2).pass);
  CHECK_FALSE(verify_coset_sums(pi_S() - pi_U(), 1).pass);
}

TEST_CASE("class sums") {
  const RingElement t1 = elem::build_wTn(1);
  const auto sums = class_sums(t1);
  CHECK(sums.at(qf::conjugacy_key(mat::I())) == Rational(1, 6));
  CHECK(sums.at(qf::conjugacy_key(mat::S())) == Rational(-1, 2));
  CHECK(sums.at(qf::conjugacy_key(mat::U())) == Rational(-1, 3));
  CHECK(sums.at(qf::conjugacy_key(mat::U2())) == Rational(-1, 3));
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(verify_class_sums(elem::build_wTn(n), n).pass);
  }
  CHECK(verify_class_sums(elem::intro_wT2(), 2).pass);
  CHECK(class_sums(elem::build_wTn(4)).at(qf::conjugacy_key(mat::scalar(Int(2)))) == Rational(1, 6));

  // split classes of trace 3 and determinant 2: one class, sum 1
  Rational at3 = 0;
  for (const auto& [k, s] : class_sums(elem::build_wTn(2)))
    if (abs(k.trace) == 3) {
      CHECK(k.type == qf::ClassType::split_hyperbolic);
      at3 += s;
    }
  CHECK(at3 == 1);

  // the two determinant-2 elements agree class by class
  auto a = class_sums(elem::intro_wT2()), b = class_sums(elem::build_wTn(2));
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
  CHECK(a == b);
  CHECK_FALSE(verify_class_sums(elem::build_wTn(3) + RingElement(M(1, 0, 0, 3)), 3).pass);
}

TEST_CASE("projection onto B") {
  const Projection p1 = project_to_B(one);
  CHECK(p1.xi_S == pi_S());
  CHECK(p1.xi_U == pi_U());
  CHECK(p1.P == one - pi_S() - pi_U());
  for (long n = 1; n <= 8; ++n) {
    const RingElement t = elem::build_wTn(n);
    CHECK(project_to_B(t).P == t);
  }
  CHECK_THROWS_AS(project_to_B(RingElement(M(1, 0, 0, 2))), std::domain_error);

  // Elements with (A) but not (B) project into B, landing in the same class mod I.
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const RingElement x = elem::build_wTn(4) + Rational(seed) * pi_S() * RingElement(M(2, 1, 2, 3));
    const Projection p = project_to_B(x);
    CHECK(verify_B(p.P).pass);
    CHECK(verify_A(p.P, 4).pass);
    CHECK(in_ideal_I(p.P - x));
  }
}

TEST_CASE("J-perturbations preserve everything") {
  for (long n : {2L, 3L, 4L, 6L}) {
    const RingElement t = elem::build_wTn(n);
    for (unsigned seed = 1; seed <= 5; ++seed) {
      CAPTURE(n);
      CAPTURE(seed);
      const RingElement x = t + random_J_element(n, seed);
      CHECK(verify_A(x, n).pass);
      CHECK(verify_A_merel(x).pass);
      CHECK(verify_B(x).pass);
      CHECK(verify_coset_sums(x, n).pass);
      CHECK(verify_class_sums(x, n).pass);
    }
  }
}

TEST_CASE("explicit identities") {
  for (long n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(verify_fg_identities(n).pass);
    CHECK(verify_alpha_cosets(n).pass);
    CHECK(verify_alpha_total(n).pass);
  }
  CHECK(elem::alpha_element(1).total() == 1);
  CHECK(alpha_total_closed_form(1) == 1);
  CHECK(alpha_total_closed_form(2) == 3);
}
