#include <doctest.h>

#include <random>

#include "hecke/ring_element.hpp"
#include "hecke/serialize.hpp"
#include "hecke/words.hpp"

using namespace hecke;

namespace {

ProjMatrix M(long a, long b, long c, long d) { return ProjMatrix::from(Int(a), Int(b), Int(c), Int(d)); }

Word random_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 2);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(pick(rng)));
  return w;
}

}  // namespace

TEST_CASE("normalize picks c > 0, or c = 0 and a > 0") {
  ProjMatrix s = M(0, 1, -1, 0);
  CHECK(s == mat::S());
  CHECK(s.c() == 1);
  ProjMatrix d = M(-2, 0, 0, -1);
  CHECK(d.a() == 2);
  CHECK(d.d() == 1);
  CHECK(M(1, 1, 0, 1) == mat::T());
  CHECK(M(3, 1, 5, 2) == M(-3, -1, -5, -2));
  CHECK_THROWS_AS(M(1, 0, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(M(0, 0, 0, 0), std::invalid_argument);
  // idempotent
  ProjMatrix x = M(-4, 7, -3, 5);
  CHECK(ProjMatrix::from(x.a(), x.b(), x.c(), x.d()) == x);
}

TEST_CASE("group relations") {
  CHECK((mat::S() * mat::S()).is_identity());
  CHECK((mat::U() * mat::U() * mat::U()).is_identity());
  CHECK(mat::U() * mat::S() == mat::T());
  CHECK(mat::U2() * mat::S() == mat::T_prime());
  CHECK(mat::T() * mat::T_inv() == mat::I());
  CHECK(mat::T_pow(Int(5)) == M(1, 5, 0, 1));
  CHECK(mat::T_pow(Int(-3)) == M(1, -3, 0, 1));
  CHECK(mat::T_inv() * mat::S() * mat::T() == M(-1, -2, 1, 1));
  CHECK((M(2, 1, 3, 4) * M(1, 5, 0, 2)).det() == 5 * 2);
}

TEST_CASE("adjoint") {
  CHECK(M(1, 2, 0, 3).adjoint() == M(3, -2, 0, 1));
  CHECK(mat::S().adjoint() == mat::S());
  ProjMatrix m = M(1, 1, 1, 2);
  CHECK((m * m.adjoint()).is_identity());
  ProjMatrix x = M(2, 3, 1, 5), y = M(4, -1, 3, 2);
  CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
  CHECK(x * x.adjoint() == mat::scalar(x.det()));
  CHECK_THROWS_AS(M(2, 0, 0, 1).inverse(), std::domain_error);
}

TEST_CASE("ring actions") {
  RingElement one = RingElement::identity();
  CHECK(act(one, mat::S(), Side::left) == RingElement(mat::S()));
  CHECK(act(pi_U(), mat::U(), Side::left) == pi_U());
  CHECK(act(RingElement(mat::S()), mat::T(), Side::conjugation) == RingElement(M(-1, -2, 1, 1)));
  CHECK_THROWS(act(one, M(2, 0, 0, 1), Side::conjugation));
  CHECK_THROWS_AS(act(one, pi_S(), Side::conjugation), std::invalid_argument);

  CHECK(pi_S() * pi_S() == pi_S());
  CHECK(pi_U() * pi_U() == pi_U());
  CHECK(pi_U() * pi_S() != pi_S());

  RingElement xi = make_element({{M(1, 2, 3, 7), Rational(2, 3)}, {M(2, 0, 1, 1), Rational(-1)}});
  RingElement g = make_element({{mat::S(), 1}, {M(1, 0, 0, 2), Rational(1, 2)}});
  RingElement h = make_element({{mat::U(), 3}, {mat::T(), -1}});
  CHECK((g * xi) * h == g * (xi * h));
  CHECK(act(act(xi, g, Side::left), h, Side::right) == act(act(xi, h, Side::right), g, Side::left));
  CHECK((xi * g).adjoint() == g.adjoint() * xi.adjoint());
}

TEST_CASE("pairing and invariants") {
  auto all = [](const ProjMatrix&) { return true; };
  CHECK(pi_S().pairing(all) == 1);
  RingElement t1 = RingElement::identity() - pi_S() - pi_U();
  CHECK(t1.pairing(all) == -1);
  CHECK(t1.coeff(mat::I()) == Rational(1, 6));
  RingElement z = pi_S() - pi_S();
  CHECK(z.empty());
  RingElement mixed = RingElement(mat::I()) + RingElement(M(1, 0, 0, 2));
  CHECK_FALSE(mixed.homogeneous_det().has_value());
  CHECK(mixed.restrict_det(Int(2)) == RingElement(M(1, 0, 0, 2)));
  CHECK(*pi_U().homogeneous_det() == 1);
}

TEST_CASE("word_in_SU") {
  CHECK(word_in_SU(mat::I()).empty());
  CHECK(word_in_SU(mat::T()) == Word{Letter::U, Letter::S});
  CHECK(word_in_SU(mat::T_prime()) == Word{Letter::U, Letter::U, Letter::S});
  CHECK_THROWS_AS(word_in_SU(M(2, 0, 0, 1)), std::domain_error);

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len(0, 24);
  for (int i = 0; i < 200; ++i) {
    ProjMatrix g = evaluate(random_word(rng, len(rng)));
    Word w = word_in_SU(g);
    CHECK(evaluate(w) == g);
  }
  ProjMatrix big = M(1346269, 832040, 2178309, 1346269);  // Fibonacci, det 1
  CHECK(evaluate(word_in_SU(big)) == big);
}

TEST_CASE("ringelt-v1 round trip and strictness") {
  RingElement xi = make_element({{M(1, 2, 3, 7), Rational(2, 3)},
                                 {M(2, 0, 1, 1), Rational(-1)},
                                 {mat::S(), Rational(1, 12)}});
  std::string text = dump_ringelt(xi);
  CHECK(parse_ringelt(text) == xi);

  Int huge("123456789012345678901234567890");
  RingElement big(ProjMatrix::from(huge, Int(1), Int(1), Int(1)), Rational(1, 7));
  CHECK(parse_ringelt(dump_ringelt(big)) == big);

  CHECK_THROWS_AS(parse_ringelt("{"), FormatError);
  CHECK_THROWS_AS(parse_ringelt(R"({"format":"x","entries":[]})"), FormatError);
  CHECK_THROWS_AS(parse_ringelt(R"({"format":"ringelt-v1","entries":[{"m":[0,1,-1,0],"q":[1,1]}]})"),
                  FormatError);
  CHECK_THROWS_AS(parse_ringelt(R"({"format":"ringelt-v1","entries":[{"m":[0,-1,1,0],"q":[2,4]}]})"),
                  FormatError);
  CHECK_THROWS_AS(parse_ringelt(R"({"format":"ringelt-v1","entries":[{"m":[0,-1,1,0],"q":[0,1]}]})"),
                  FormatError);
  CHECK_THROWS_AS(parse_ringelt(R"({"format":"ringelt-v1","entries":[{"m":[1,0,0,2],"q":[1,1]},)"
                                R"({"m":[0,-1,1,0],"q":[1,1]}]})"),
                  FormatError);
}
