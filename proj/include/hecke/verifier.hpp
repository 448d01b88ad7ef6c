#pragma once

#include <map>
#include <optional>
#include <utility>

#include "hecke/classify.hpp"
#include "hecke/report.hpp"
#include "hecke/ring_element.hpp"

namespace hecke::verify {

/// Sums of coefficients over Gamma_inf-orbits <T>M, zero sums dropped.
std::map<qf::OrbitKey, Rational> orbit_sums(const RingElement& zeta);
/// Sums over right cosets M*Gamma, zero sums kept.
std::map<qf::CosetKey, Rational> coset_sums(const RingElement& xi);
/// Sums over conjugacy classes, zero sums kept.
std::map<qf::ConjClassKey, Rational> class_sums(const RingElement& xi);

/// zeta in (1 - T)R, decided by vanishing of every orbit sum.
bool in_ideal_1mT(const RingElement& zeta);
/// xi in pi_S R + pi_U R, decided by (1 - S)xi in (1 - T)R.
bool in_ideal_I(const RingElement& xi);

/// The unique decomposition eta = a + b with a in pi_S R and b in pi_U R,
/// or nothing when eta is not in the ideal.
std::optional<std::pair<RingElement, RingElement>> decompose_I(const RingElement& eta);

/// (1 - S)xi - T_n^inf (1 - S) in (1 - T)R. Also reports, for each double
/// coset D in determinant n, the scalar alpha_D with
/// (1 - S)xi_D - alpha_D T_D^inf (1 - S) in (1 - T)R when one exists.
/// Throws std::invalid_argument when xi has support outside determinant n.
CheckReport verify_A(const RingElement& xi, long n);

/// The adjoint of xi, split by right cosets K, maps [0] - [inf] to itself
/// on every K of determinant n.
CheckReport verify_A_merel(const RingElement& xi);

/// pi_U (xi pi_S) = xi pi_S and pi_S (xi pi_U) = xi pi_U.
CheckReport verify_B(const RingElement& xi);

/// Every one of the sigma_1(n) right cosets has coefficient sum `expected`.
/// Reports the per-double-coset constant beta where the sums are constant.
CheckReport verify_coset_sums(const RingElement& xi, long n, const Rational& expected = -1);

/// Class sums equal w(X) on an independent enumeration of the classes with
/// nonzero weight, vanish on all other classes, and per-trace totals match
/// -2H(4n - t^2) (t != 0) and -H(4n) (t = 0).
CheckReport verify_class_sums(const RingElement& xi, long n);

struct Projection {
  RingElement xi_S, xi_U, P;
};
/// xi_S, xi_U and P(xi) = xi - xi_S - xi_U. Throws std::domain_error when xi
/// is not in A.
Projection project_to_B(const RingElement& xi);

/// Random element of J = pi_S R (1 - pi_S) + pi_U R (1 - pi_U) built from
/// determinant-n matrices.
RingElement random_J_element(long n, unsigned seed, int terms = 4);

/// T~n = -F - UFS - U^2F + T1(1 - S) = -G - SGU + T1(1 - U) + corner(1 - U)/12,
/// and T~n pi_S = -(1 + U + U^2) F pi_S.
CheckReport verify_fg_identities(long n);
/// alpha_element(n) sums to 1 on every right coset.
CheckReport verify_alpha_cosets(long n);
CheckReport verify_alpha_total(long n);

/// 1/2 sum_{t^2 <= 4n} H(4n - t^2) + 1/2 sum_{n = bc, b > 0} min(b, c).
Rational alpha_total_closed_form(long n);

}  // namespace hecke::verify
