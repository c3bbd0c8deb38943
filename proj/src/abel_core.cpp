#include "abel/abel.hpp"

#include <algorithm>

#include "abel/factorization.hpp"

namespace abel {
namespace {

void require_zero_free(const ExactTrigPoly& p, const char* op) {
  if (p.is_zero() || !is_zero_free(p)) {
    throw PreconditionError(std::string(op) + ": P must be zero-free on R (1 - P x = 0 is not an invariant-line candidate)");
  }
}

XPoly trimmed(XPoly f) {
  while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
  return f;
}

}  // namespace

InvariantLine::InvariantLine(ExactTrigPoly p) : p_(std::move(p)) {
  require_zero_free(p_, "InvariantLine");
  if (p_.deg_or_neg() < 1) {
    throw PreconditionError("InvariantLine: degree(P) >= 1 required; constant P is the separated-variable case");
  }
}

bool XPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const ExactTrigPoly& c) { return c.is_zero(); });
}

XPoly operator+(const XPoly& f, const XPoly& g) {
  XPoly r;
  r.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()));
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i < f.coeffs.size()) r.coeffs[i] += f.coeffs[i];
    if (i < g.coeffs.size()) r.coeffs[i] += g.coeffs[i];
  }
  return trimmed(std::move(r));
}

XPoly operator*(const Rational& s, const XPoly& f) {
  XPoly r = f;
  for (auto& c : r.coeffs) c = s * c;
  return trimmed(std::move(r));
}

XPoly operator-(const XPoly& f, const XPoly& g) { return f + Rational(-1) * g; }

XPoly operator*(const XPoly& f, const XPoly& g) {
  if (f.coeffs.empty() || g.coeffs.empty()) return {};
  XPoly r;
  r.coeffs.resize(f.coeffs.size() + g.coeffs.size() - 1);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) r.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return trimmed(std::move(r));
}

XPoly apply_vector_field(const AbelEquation& eq, const XPoly& f) {
  XPoly dt;
  XPoly dx;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    dt.coeffs.push_back(derivative(f.coeffs[i]));
    if (i > 0) dx.coeffs.push_back(Rational(static_cast<long>(i)) * f.coeffs[i]);
  }
  const XPoly g{{ExactTrigPoly{}, ExactTrigPoly{}, eq.B, eq.A}};
  return trimmed(dt) + g * trimmed(dx);
}

ExactTrigPoly invariance_residual(const AbelEquation& eq, const ExactTrigPoly& p) {
  return p * derivative(p) + p * eq.B + eq.A;
}

bool is_invariant_line(const AbelEquation& eq, const ExactTrigPoly& p, ConstantLine constant) {
  require_zero_free(p, "is_invariant_line");
  if (p.deg_or_neg() < 1 && constant == ConstantLine::reject) {
    throw PreconditionError("is_invariant_line: degree(P) >= 1 required; constant P is the separated-variable case");
  }
  return invariance_residual(eq, p).is_zero();
}

bool verify_rational_solution(const AbelEquation& eq, const ExactTrigPoly& q, const ExactTrigPoly& p) {
  require_zero_free(p, "verify_rational_solution");
  if (q.is_zero()) return true;  // x = 0
  if (common_irreducible_factor(p, q)) {
    throw PreconditionError("verify_rational_solution: Q and P share an irreducible factor; reduce Q/P first");
  }
  const ExactTrigPoly z = p * (derivative(q) * p - q * derivative(p)) - eq.A * q * q * q - eq.B * p * q * q;
  return z.is_zero();
}

Cofactor cofactor_of_line(const AbelEquation& eq, const InvariantLine& line) {
  if (!is_invariant_line(eq, line.P())) {
    throw PreconditionError("cofactor_of_line: CondInv violated (P P' + P B + A != 0)");
  }
  return {eq.A, -derivative(line.P()), ExactTrigPoly{}};
}

Cofactor trivial_cofactor(const AbelEquation& eq) { return {eq.A, eq.B, ExactTrigPoly{}}; }

AbelEquation from_invariant(const ExactTrigPoly& p, const ExactTrigPoly& r) {
  require_zero_free(p, "from_invariant");
  if (p.deg_or_neg() < 1) throw PreconditionError("from_invariant: degree(P) >= 1 required");
  return {p * r, -derivative(p) - r};
}

bool degree_identity(const AbelEquation& eq, const ExactTrigPoly& p1, const ExactTrigPoly& p2) {
  if (p1 == p2) throw PreconditionError("degree_identity: the two lines must be distinct");
  if (!is_invariant_line(eq, p1) || !is_invariant_line(eq, p2)) {
    throw PreconditionError("degree_identity: both curves must be invariant lines of the equation");
  }
  return p1.deg_or_neg() + p2.deg_or_neg() == eq.A.deg_or_neg();
}

int rational_cycle_bound(const AbelEquation& eq) {
  if (eq.A.is_zero()) {
    throw PreconditionError("rational_cycle_bound: A = 0 is the separated-variable case; bound not applicable");
  }
  const int da = eq.A.deg_or_neg();
  const bool small_a = !eq.B.is_zero() && da < 2 * eq.B.deg_or_neg();
  if (da % 2 == 1 || small_a) return 2;
  return da + 1;
}

bool center_obstruction(const AbelEquation& eq) { return !mean_integral(eq.B).is_zero(); }

}  // namespace abel
