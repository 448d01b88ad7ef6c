#include "hecke/words.hpp"

#include <stdexcept>

namespace hecke {

namespace {

void push_reduced(Word& w, Letter x) {
  if (!w.empty()) {
    const Letter y = w.back();
    if ((y == Letter::S && x == Letter::S) || (y == Letter::U && x == Letter::U2) ||
        (y == Letter::U2 && x == Letter::U)) {
      w.pop_back();
      return;
    }
  }
  w.push_back(x);
}

// T = U S and T^{-1} = S U^2.
void push_T_power(Word& w, const Int& k) {
  for (Int i = 0; i < k; ++i) {
    push_reduced(w, Letter::U);
    push_reduced(w, Letter::S);
  }
  for (Int i = 0; i > k; --i) {
    push_reduced(w, Letter::S);
    push_reduced(w, Letter::U2);
  }
}

}  // namespace

Word word_in_SU(const ProjMatrix& gamma) {
  if (!gamma.is_unimodular())
    throw std::domain_error("word_in_SU: not in PSL2(Z): " + gamma.str());

  // gamma = T^{k1} S T^{k2} S ... T^{km}: peel off T^k on the left so that
  // 0 <= a < c, then S (an involution mod ±1), until c = 0.
  std::vector<Int> shifts;
  Int a = gamma.a(), b = gamma.b(), c = gamma.c(), d = gamma.d();
  while (c != 0) {
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a -= k * c;
    b -= k * d;
    shifts.push_back(k);
    // S * [a,b;c,d] = [-c,-d;a,b]
    Int na = -c, nb = -d;
    c = a;
    d = b;
    a = na;
    b = nb;
    if (c < 0 || (c == 0 && a < 0)) {
      a = -a;
      b = -b;
      c = -c;
      d = -d;
    }
  }
  // Remaining matrix is ±[1,b;0,1] = T^b with a = d = 1 after normalization.
  Word w;
  for (const Int& k : shifts) {
    push_T_power(w, k);
    push_reduced(w, Letter::S);
  }
  push_T_power(w, b);
  return w;
}

ProjMatrix evaluate(std::span<const Letter> word) {
  ProjMatrix m;
  for (Letter x : word) {
    switch (x) {
      case Letter::S:
        m = m * mat::S();
        break;
      case Letter::U:
        m = m * mat::U();
        break;
      case Letter::U2:
        m = m * mat::U2();
        break;
    }
  }
  return m;
}

std::string to_string(std::span<const Letter> word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += word[i] == Letter::S ? "S" : word[i] == Letter::U ? "U" : "U2";
  }
  return s + "]";
}

}  // namespace hecke
