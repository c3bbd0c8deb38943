#pragma once

// The Abel equation x' = A(t) x^3 + B(t) x^2 with trigonometric-polynomial
// coefficients, its invariant lines 1 - P(t) x = 0 and their cofactors.
//
// Every criterion here is an exact polynomial identity over the rationals.

#include <vector>

#include "abel/trig_poly.hpp"

namespace abel {

struct AbelEquation {
  ExactTrigPoly A;
  ExactTrigPoly B;

  /// A = 0: x' = B x^2, the separated-variable case.
  bool is_degenerate() const { return A.is_zero(); }

  friend bool operator==(const AbelEquation&, const AbelEquation&) = default;
};

/// The curve 1 - P(t) x = 0 with P zero-free and degree(P) >= 1.
class InvariantLine {
 public:
  /// Throws PreconditionError if P has real zeros or is constant.
  explicit InvariantLine(ExactTrigPoly p);

  const ExactTrigPoly& P() const { return p_; }
  int degree() const { return p_.deg_or_neg(); }

 private:
  ExactTrigPoly p_;
};

/// Polynomial in x with trigonometric coefficients, ascending powers of x.
struct XPoly {
  std::vector<ExactTrigPoly> coeffs;

  bool is_zero() const;
  friend XPoly operator+(const XPoly& f, const XPoly& g);
  friend XPoly operator-(const XPoly& f, const XPoly& g);
  friend XPoly operator*(const XPoly& f, const XPoly& g);
  friend XPoly operator*(const Rational& s, const XPoly& f);
};

/// X f = df/dt + (A x^3 + B x^2) df/dx.
XPoly apply_vector_field(const AbelEquation& eq, const XPoly& f);

/// K(t, x) = k2 x^2 + k1 x + k0.
struct Cofactor {
  ExactTrigPoly k2;
  ExactTrigPoly k1;
  ExactTrigPoly k0;

  XPoly as_xpoly() const { return {{k0, k1, k2}}; }
  friend bool operator==(const Cofactor&, const Cofactor&) = default;
};

enum class ConstantLine { reject, allow };

/// P P' + P B + A; zero exactly when 1 - P x = 0 is invariant.
ExactTrigPoly invariance_residual(const AbelEquation& eq, const ExactTrigPoly& p);

/// Exact invariance test. P must be zero-free; constant P is only accepted
/// with ConstantLine::allow (the separated-variable case).
bool is_invariant_line(const AbelEquation& eq, const ExactTrigPoly& p, ConstantLine constant = ConstantLine::reject);

/// P (Q' P - Q P') - A Q^3 - B P Q^2 = 0, i.e. x = Q/P solves the equation.
/// Requires P zero-free and Q, P without common irreducible factors (Q = 0 is
/// the trivial solution).
bool verify_rational_solution(const AbelEquation& eq, const ExactTrigPoly& q, const ExactTrigPoly& p);

/// (A, -P', 0). Throws PreconditionError when the line is not invariant.
Cofactor cofactor_of_line(const AbelEquation& eq, const InvariantLine& line);

/// Cofactor of the trivial curve x = 0: (A, B, 0).
Cofactor trivial_cofactor(const AbelEquation& eq);

/// A = P R, B = -P' - R: an equation for which 1 - P x = 0 is invariant.
AbelEquation from_invariant(const ExactTrigPoly& p, const ExactTrigPoly& r);

/// degree(P1) + degree(P2) == degree(A) for two distinct invariant lines.
bool degree_identity(const AbelEquation& eq, const ExactTrigPoly& p1, const ExactTrigPoly& p2);

/// Upper bound on non-trivial rational limit cycles: 2 when degree(A) is odd
/// or degree(A) < 2 degree(B), otherwise degree(A) + 1.
int rational_cycle_bound(const AbelEquation& eq);

/// Mean of B nonzero: the origin is not a center.
bool center_obstruction(const AbelEquation& eq);

}  // namespace abel
