#include "abel/construction.hpp"

#include "abel/factorization.hpp"

namespace abel {
namespace {

ExactTrigPoly exact_quotient(const ExactTrigPoly& d, const ExactTrigPoly& p, const char* what) {
  auto q = divides_exact(d, p);
  if (!q) throw InconsistencyError(std::string("expected exact division failed: ") + what);
  return *q;
}

ExactTrigPoly unit_constant_term(const ExactTrigPoly& p) { return Rational(1 / p.a(0)) * p; }

}  // namespace

bool factors_divide(const ExactTrigPoly& ghat, const ExactTrigPoly& g) {
  if (ghat.is_zero() || !is_zero_free(ghat)) return false;
  ExactTrigPoly rest = ghat;
  while (rest.deg_or_neg() > 0) {
    const ExactTrigPoly common = detail::trig_gcd(rest, g);
    if (common.deg_or_neg() == 0) return false;
    rest = exact_quotient(common, rest, "gcd must divide its argument");
  }
  return true;
}

void validate(const ParamTuple& p) {
  if (sgn(p.k) == 0) throw PreconditionError("ParamTuple: k = 0 makes the two curves coincide");
  if (p.G.is_zero() || !is_zero_free(p.G)) throw PreconditionError("ParamTuple: G must be zero-free on R");
  if (p.S1.is_zero() || !is_zero_free(p.S1)) throw PreconditionError("ParamTuple: S1 must be zero-free on R");
  if (p.Ghat.is_zero()) throw PreconditionError("ParamTuple: Ghat must be nonzero");
  const ExactTrigPoly s2 = p.S1 + p.k * p.Ghat;
  if (s2.is_zero() || !is_zero_free(s2)) throw PreconditionError("ParamTuple: S1 + k Ghat must be zero-free on R");
  if (!factors_divide(p.Ghat, p.G)) {
    throw PreconditionError("ParamTuple: every irreducible factor of Ghat must divide G");
  }
  if ((p.G * p.S1).deg_or_neg() < 1 || (p.G * s2).deg_or_neg() < 1) {
    throw PreconditionError("ParamTuple: both curves need degree >= 1");
  }
}

TwoCurveEquation construct_two_curves(const ParamTuple& p) {
  validate(p);
  const auto t = divides_exact(p.Ghat, p.G * derivative(p.Ghat));
  if (!t) throw PreconditionError("ParamTuple: Ghat does not divide G Ghat' (factor condition violated)");
  const ExactTrigPoly s = derivative(p.G) + *t;
  const ExactTrigPoly s2 = p.S1 + p.k * p.Ghat;

  TwoCurveEquation out;
  out.P1 = p.G * p.S1;
  out.P2 = p.G * s2;
  out.eq.A = out.P1 * s2 * s;
  out.eq.B = -derivative(out.P1) - s2 * s;
  if (!is_invariant_line(out.eq, out.P1) || !is_invariant_line(out.eq, out.P2)) {
    throw InconsistencyError("construct_two_curves: constructed line is not invariant");
  }
  return out;
}

ParamTuple recover_params(const ExactTrigPoly& p1, const ExactTrigPoly& p2, const AbelEquation& eq) {
  if (p1 == p2) throw PreconditionError("recover_params: the two lines must be distinct");
  if (!is_invariant_line(eq, p1) || !is_invariant_line(eq, p2)) {
    throw PreconditionError("recover_params: both curves must be invariant lines of the equation (CondInv)");
  }
  ParamTuple out;
  out.G = gcd_zero_free(p1, p2);
  out.S1 = exact_quotient(out.G, p1, "gcd divides P1");
  const ExactTrigPoly s2 = exact_quotient(out.G, p2, "gcd divides P2");
  const ExactTrigPoly diff = s2 - out.S1;

  // Ghat: the part of S2 - S1 built from irreducible factors of G.
  ExactTrigPoly ghat = ExactTrigPoly::constant(1);
  ExactTrigPoly rest = diff;
  for (;;) {
    const ExactTrigPoly common = detail::trig_gcd(rest, out.G);
    if (common.deg_or_neg() == 0) break;
    ghat *= common;
    rest = exact_quotient(common, rest, "gcd divides S2 - S1");
  }
  out.Ghat = unit_constant_term(ghat);
  const ExactTrigPoly k = exact_quotient(out.Ghat, diff, "Ghat divides S2 - S1");
  if (k.deg_or_neg() != 0) {
    throw InconsistencyError("recover_params: (S2 - S1) / Ghat is not constant; inputs are not two invariant lines of one equation");
  }
  out.k = k.a(0);
  return out;
}

ParamTuple normalize(const ParamTuple& p) {
  const Rational g0 = p.G.a(0);
  const Rational h0 = p.Ghat.a(0);
  return {unit_constant_term(p.G), unit_constant_term(p.Ghat), g0 * p.S1, Rational(p.k * g0 * h0)};
}

}  // namespace abel
