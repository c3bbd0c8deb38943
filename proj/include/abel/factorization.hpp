#pragma once

// Factorization in R[cos t, sin t].
//
// Irreducibles are a cos t + b sin t + c with (a, b) != (0, 0); an element of
// degree n is a product of exactly n of them. Factorizations are unique (up
// to order and units) only for zero-free elements.
//
// Two regimes, kept strictly apart:
//   * numeric: factor / complex_factors locate the roots of the Laurent
//     image q(z) = z^n P(z) and pair them into real linear factors;
//   * exact:   is_zero_free (exact overload), divides_exact, gcd_zero_free and
//     common_irreducible_factor use rational arithmetic only.

#include <complex>
#include <optional>
#include <vector>

#include "abel/exact_linalg.hpp"
#include "abel/roots.hpp"
#include "abel/trig_poly.hpp"

namespace abel {

/// a cos t + b sin t + c
template <class Scalar>
struct LinearFactor {
  Scalar a;
  Scalar b;
  Scalar c;

  TrigPoly<Scalar> to_poly() const { return TrigPoly<Scalar>::linear(a, b, c); }

  /// No real zeros iff c^2 > a^2 + b^2.
  bool is_zero_free() const { return c * c > a * a + b * b; }
};

/// Float factors: a^2 + b^2 = 1 and c >= 0 (first nonzero of (a, b) positive when c == 0).
LinearFactor<double> normalized(const LinearFactor<double>& f);
/// Exact factors: first nonzero of (a, b) equals 1.
LinearFactor<Rational> normalized(const LinearFactor<Rational>& f);

struct FactorOptions {
  double tol = 1e-9;           // accepted residual
  double circle_band = 1e-9;   // |(|zeta| - 1)| below this counts as on the unit circle
  RootOptions roots{};
};

struct Factorization {
  double unit = 0.0;
  std::vector<LinearFactor<double>> factors;
  double residual = 0.0;  // max coefficient error of unit * prod(factors), relative to max(1, |P|_inf)

  FloatTrigPoly expand() const;
};

/// Factor a nonzero non-unit P into degree(P) real linear factors.
Factorization factor(const FloatTrigPoly& p, const FactorOptions& opts = {});
Factorization factor(const ExactTrigPoly& p, const FactorOptions& opts = {});

/// Exact zero-free certificate (Sturm count of the half-angle image plus the
/// value at t = pi). Linear inputs use the c^2 > a^2 + b^2 test directly.
bool is_zero_free(const ExactTrigPoly& p);

/// Numeric test: true when every root of q(z) is more than tol away from the
/// unit circle, false when P is seen to change sign. Anything else raises
/// BoundaryUndecidableError.
bool is_zero_free(const FloatTrigPoly& p, double tol = 1e-9);

/// Q with P = D * Q, found by solving the real linear system for Q's
/// coefficients exactly; nullopt when no such Q exists.
std::optional<ExactTrigPoly> divides_exact(const ExactTrigPoly& d, const ExactTrigPoly& p);

/// Greatest common divisor of two zero-free elements, normalized to a_0 = 1.
ExactTrigPoly gcd_zero_free(const ExactTrigPoly& p1, const ExactTrigPoly& p2);

/// Whether P and Q share an irreducible factor. P must be zero-free.
bool common_irreducible_factor(const ExactTrigPoly& p, const ExactTrigPoly& q);

/// alpha sin t + beta cos t + gamma with complex coefficients.
struct ComplexLinearFactor {
  std::complex<double> alpha;
  std::complex<double> beta;
  std::complex<double> gamma;

  std::complex<double> eval(double t) const { return alpha * std::sin(t) + beta * std::cos(t) + gamma; }

  /// Root in z = e^{it} of the Laurent image; nullopt when the factor is not
  /// irreducible over C (both z and 1/z terms present).
  std::optional<std::complex<double>> root(double tol = 1e-12) const;
};

/// Two irreducible complex factors are associates iff their roots agree.
bool associated(const ComplexLinearFactor& f, const ComplexLinearFactor& g, double tol);

/// P = unit * e^{i shift t} * prod(factors), with one factor
/// cos t + i sin t - zeta per root zeta of q(z), i.e. 2 * degree(P) factors.
struct ComplexFactorization {
  std::complex<double> unit;
  int shift = 0;
  std::vector<ComplexLinearFactor> factors;
  double residual = 0.0;

  std::complex<double> eval(double t) const;
};

ComplexFactorization complex_factors(const FloatTrigPoly& p, const FactorOptions& opts = {});

/// (a_0, a_1, b_1, ..., a_n, b_n), zero-padded to `n`.
ExactVector coefficient_vector(const ExactTrigPoly& p, int n);
ExactTrigPoly from_coefficient_vector(const ExactVector& v);

namespace detail {

/// Exact gcd through the Laurent images over Q(i). At least one argument must
/// be zero-free so that the gcd is real up to a unit. Normalized to a_0 = 1.
ExactTrigPoly trig_gcd(const ExactTrigPoly& p, const ExactTrigPoly& q);

/// Degree of the gcd of the Laurent images (in z), for any nonzero inputs.
int laurent_gcd_degree(const ExactTrigPoly& p, const ExactTrigPoly& q);

/// (1 + u^2)^n P(t) with u = tan(t/2), ascending coefficients.
std::vector<Rational> half_angle_image(const ExactTrigPoly& p);

/// Number of distinct real roots of a rational polynomial (Sturm).
int count_real_roots(const std::vector<Rational>& poly);

}  // namespace detail

}  // namespace abel
