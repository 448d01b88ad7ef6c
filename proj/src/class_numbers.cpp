#include "hecke/class_numbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "hecke/serialize.hpp"

namespace hecke::cn {

namespace {

std::shared_mutex cache_mutex;
std::map<Int, Rational> cache;

Rational compute_H(const Int& D) {
  if (D == 0) return Rational(-1, 12);
  if (D < 0) {
    const Int m = -D;
    if (!qf::is_square(m)) return 0;
    return frac(-qf::isqrt(m), 2);
  }
  Rational h = 0;
  for (const auto& f : reduced_forms(D)) {
    if (f.A == f.C && f.B == 0)
      h += Rational(1, 2);
    else if (f.A == f.B && f.B == f.C)
      h += Rational(1, 3);
    else
      h += 1;
  }
  h.canonicalize();
  return h;
}

}  // namespace

std::vector<qf::BinaryQuadraticForm> reduced_forms(const Int& D) {
  if (D <= 0) throw std::invalid_argument("reduced_forms: D must be positive");
  std::vector<qf::BinaryQuadraticForm> out;
  Int r = D % 4;
  if (r == 1 || r == 2) return out;
  // |B| <= A <= sqrt(D/3)
  const Int a_max = qf::isqrt(D / 3);
  for (Int b = D % 2; b <= a_max; b += 2) {
    const Int N = (b * b + D) / 4;  // = A*C
    for (Int a = b == 0 ? Int(1) : b; a * a <= N; ++a) {
      if (N % a != 0) continue;
      const Int c = N / a;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational hurwitz_H(const Int& D) {
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
  }
  Rational h = compute_H(D);
  std::unique_lock lock(cache_mutex);
  cache.emplace(D, h);
  return h;
}

HurwitzValue hurwitz_value(const Int& D) {
  HurwitzValue v{D, hurwitz_H(D), {}};
  if (D > 0) v.witness_forms = reduced_forms(D);
  return v;
}

Int sigma(int k, const Int& n) {
  Int s = 0;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), k);
    s += p;
    const Int e = n / d;
    if (e != d) {
      mpz_pow_ui(p.get_mpz_t(), e.get_mpz_t(), k);
      s += p;
    }
  }
  return s;
}

CheckReport kronecker_hurwitz_check(long n) {
  CheckReport r;
  r.check = "kh";
  r.n = n;
  const Int N(n);
  Rational inner = 0;
  const Int t_max = qf::isqrt(4 * N);
  for (Int t = -t_max; t <= t_max; ++t) inner += hurwitz_H(4 * N - t * t);
  Int max_sum = 0;
  for (Int a = 1; a <= N; ++a)
    if (N % a == 0) max_sum += std::max(a, Int(N / a));

  // 4n - t^2 = -u^2 needs (t - u)(t + u) = 4n, so |t| <= n + 1.
  Rational full = inner;
  for (Int t = t_max + 1; t <= N + 1; ++t) full += 2 * hurwitz_H(4 * N - t * t);
  const Int s1 = sigma(1, N);

  r.details = {{"inner_sum", rational_to_json(inner)},
               {"max_sum", int_to_json(max_sum)},
               {"full_sum", rational_to_json(full)},
               {"sigma1", int_to_json(s1)}};
  r.pass = inner == max_sum && full == s1;
  if (!r.pass) r.witness = r.details;
  return r;
}

}  // namespace hecke::cn
