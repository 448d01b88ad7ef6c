#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/ring_element.hpp"

namespace hecke::elem {

/// Raw entries (a, b, c, d) of a canonical matrix, used by the enumeration core.
using Entries = std::array<long, 4>;

/// Integer linear form k_a a + k_b b + k_c c + k_d d + k_0.
struct LinearForm {
  std::array<long, 5> k{};

  long eval(const Entries& m) const {
    return k[0] * m[0] + k[1] * m[1] + k[2] * m[2] + k[3] * m[3] + k[4];
  }
  friend bool operator==(const LinearForm& x, const LinearForm& y) { return x.k == y.k; }
  std::string str() const;
};

enum class Rel { le, lt, eq };

/// lhs REL rhs.
struct Atom {
  LinearForm lhs, rhs;
  Rel rel;
  bool holds(const Entries& m) const;
  bool is_equality(const Entries& m) const { return lhs.eval(m) == rhs.eval(m); }
};

/// Parses "0<=a-d<=-b; a-d<=c" into the atoms of each chain, in order.
std::vector<Atom> parse_constraints(std::string_view text);

enum class Mode {
  bracket,  // <#>: weight from the pattern of first-line equalities
  star,     // <#>*: 1, 1/2 on any first-line equality, 1/4 on the exceptions
  plain     // [#]: weight 1
};

/// Which enumeration window covers the descriptor; see enumeration_box().
enum class BoundFamily { elliptic, positive, z_term, t1, h_term, t2 };

/// A weighted inequality sum on two lines.
struct Descriptor {
  std::string name;
  std::string first_line;
  std::string second_line;
  Mode mode;
  BoundFamily family;
  std::vector<std::string> star_exceptions;  // each a chain of equalities

  std::vector<Atom> first;
  std::vector<Atom> second;
  std::vector<std::vector<Atom>> exceptions;

  bool satisfies(const Entries& m) const;
  nlohmann::json to_json() const;
};

/// The descriptor table: E, H, X, Y, Z, T1, T2, T3, T4, F, G, corner.
const std::vector<Descriptor>& descriptor_table();
/// Throws std::invalid_argument for an unknown name.
const Descriptor& descriptor(std::string_view name);

/// Coefficient c(M) of a matrix satisfying the descriptor. Throws
/// std::invalid_argument if M does not satisfy it, and std::logic_error if
/// three first-line equalities hold at once in bracket mode.
Rational weight_c(const ProjMatrix& m, const Descriptor& d);
Rational weight_c(const Entries& m, const Descriptor& d);

/// Search window for the determinant-n part of a descriptor. Rows with c > 0
/// are found by looping over (c, a, d) and solving for b; rows with c = 0
/// (when allowed) loop over a | n and b.
struct EnumerationBox {
  long c_lo, c_hi, a_lo, a_hi, d_lo, d_hi;
  bool c_zero;
  long b0_lo, b0_hi;
};
EnumerationBox enumeration_box(BoundFamily f, long n);

/// Exact weighted sum of all canonical matrices of determinant n satisfying d.
/// Results are memoized per (descriptor, n).
RingElement enumerate_term(const Descriptor& d, long n);
RingElement enumerate_term(std::string_view name, long n);

/// Determinant-n slice of the element, as T1 - T2 - T3 - T4.
RingElement build_wTn(long n);
/// The same slice assembled as -E + H + X - SXS + Y - U^2 Y U + Z - U^2 Z U.
RingElement build_wTn_alt(long n);
/// build_wTn, after checking that it agrees with build_wTn_alt; throws
/// std::logic_error on a mismatch.
RingElement build_wTn_checked(long n);

RingElement build_F(long n);
RingElement build_G(long n);
/// Unweighted [a-d = c = -b; d <= 0 < a].
RingElement corner_term(long n);

/// sum of [a, b; 0, d] over ad = n, 0 <= b < d.
RingElement T_infinity(long n);

/// I - (I+S)/2 - (I+U+U^2)/3.
RingElement intro_wT1();
/// The six-term determinant-2 element.
RingElement intro_wT2();

/// Fixed point data of an elliptic canonical matrix (c > 0):
/// Re z = (a-d)/2c, |z|^2 = -b/c, |z-1|^2 = (-b-a+d+c)/c.
struct FixedPointData {
  Rational re;
  Rational abs2;
  Rational abs2_minus_one;
};

bool is_elliptic(const ProjMatrix& m);
/// Throws std::invalid_argument for non-elliptic input.
FixedPointData fixed_point(const ProjMatrix& m);

/// Angle fractions of the fundamental domain {0 <= Re z <= 1/2, |z-1| >= 1}
/// and of its halves |z| >= 1 and |z| <= 1, evaluated at z_M.
Rational chi(const ProjMatrix& m);
Rational chi_plus(const ProjMatrix& m);
Rational chi_minus(const ProjMatrix& m);

/// chi+(z_M) delta(a) + chi-(z_M) delta(d), with delta(x) = [x <= 0];
/// zero for non-elliptic M.
Rational alpha_weight(const ProjMatrix& m);

/// sum over elliptic M of determinant n of alpha(M) M.
RingElement alpha_element(long n);
/// sum over elliptic M of determinant n of chi(z_M) M.
RingElement chi_element(long n);

nlohmann::json dump_descriptors();

}  // namespace hecke::elem
