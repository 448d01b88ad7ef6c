#include <doctest.h>

#include <thread>

#include "hecke/class_numbers.hpp"

using namespace hecke;
using namespace hecke::cn;
using qf::BinaryQuadraticForm;

namespace {

BinaryQuadraticForm Q(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

// Plain triple loop over the reduction inequalities.
Rational naive_H(long D) {
  Rational h = 0;
  for (long a = 1; 3 * a * a <= D; ++a)
    for (long b = -a + 1; b <= a; ++b)
      for (long c = a; 4 * a * c - b * b <= D; ++c) {
        if (4 * a * c - b * b != D) continue;
        if (a == c && b < 0) continue;
        if (b == 0 && a == c)
          h += Rational(1, 2);
        else if (a == b && b == c)
          h += Rational(1, 3);
        else
          h += 1;
      }
  h.canonicalize();
  return h;
}

}  // namespace

TEST_CASE("reduced forms") {
  CHECK(reduced_forms(Int(3)) == std::vector<BinaryQuadraticForm>{Q(1, 1, 1)});
  CHECK(reduced_forms(Int(4)) == std::vector<BinaryQuadraticForm>{Q(1, 0, 1)});
  CHECK(reduced_forms(Int(23)) == std::vector<BinaryQuadraticForm>{Q(1, 1, 6), Q(2, -1, 3), Q(2, 1, 3)});
  CHECK(reduced_forms(Int(5)).empty());
  CHECK(reduced_forms(Int(6)).empty());
  CHECK_THROWS_AS(reduced_forms(Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(reduced_forms(Int(-4)), std::invalid_argument);
  for (long D = 1; D <= 400; ++D) {
    auto forms = reduced_forms(Int(D));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      CHECK(qf::is_reduced_positive_definite(forms[i]));
      CHECK(forms[i].disc() == -D);
      if (i > 0) CHECK(forms[i - 1] < forms[i]);
    }
  }
}

TEST_CASE("Hurwitz class numbers") {
  CHECK(hurwitz_H(Int(0)) == Rational(-1, 12));
  CHECK(hurwitz_H(Int(-4)) == -1);
  CHECK(hurwitz_H(Int(-1)) == Rational(-1, 2));
  CHECK(hurwitz_H(Int(-9)) == Rational(-3, 2));
  CHECK(hurwitz_H(Int(-5)) == 0);
  CHECK(hurwitz_H(Int(3)) == Rational(1, 3));
  CHECK(hurwitz_H(Int(4)) == Rational(1, 2));
  CHECK(hurwitz_H(Int(23)) == 3);
  CHECK(hurwitz_H(Int(12)) == Rational(4, 3));
  CHECK(hurwitz_H(Int(8)) == 1);
  CHECK(hurwitz_H(Int(7)) == 1);
  CHECK(hurwitz_H(Int(1)) == 0);
  CHECK(hurwitz_H(Int(2)) == 0);
  for (long D = 1; D <= 600; ++D) {
    Rational h = hurwitz_H(Int(D));
    CHECK(h == naive_H(D));
    CHECK(h >= 0);
    CHECK(12 % h.get_den() == 0);
  }
  HurwitzValue v = hurwitz_value(Int(23));
  CHECK(v.witness_forms.size() == 3);
}

TEST_CASE("Hurwitz cache under concurrent readers") {
  std::vector<std::thread> pool;
  std::vector<Rational> out(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&out, i] {
      Rational s = 0;
      for (long D = 1000; D < 1400; ++D) s += hurwitz_H(Int(D));
      out[i] = s;
    });
  for (auto& t : pool) t.join();
  for (int i = 1; i < 8; ++i) CHECK(out[i] == out[0]);
}

TEST_CASE("Kronecker-Hurwitz relations") {
  auto r1 = kronecker_hurwitz_check(1);
  CHECK(r1.pass);
  auto r2 = kronecker_hurwitz_check(2);
  CHECK(r2.pass);
  CHECK(r2.details["max_sum"] == 4);
  CHECK(kronecker_hurwitz_check(4).pass);
  for (long n = 1; n <= 120; ++n) CHECK(kronecker_hurwitz_check(n).pass);
  CHECK(sigma(11, Int(2)) == 2049);
  CHECK(sigma(1, Int(12)) == 28);
}
