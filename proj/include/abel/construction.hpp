#pragma once

// Abel equations with two prescribed invariant lines.
//
// Given G, Ghat, S1 and k != 0 with G, S1, S1 + k Ghat zero-free and every
// irreducible factor of Ghat dividing G, set
//
//   S = G' + G Ghat' / Ghat
//   A = G S1 (S1 + k Ghat) S
//   B = -(G S1)' - (S1 + k Ghat) S
//
// Then 1 - G S1 x = 0 and 1 - G (S1 + k Ghat) x = 0 are both invariant, and
// every equation with two distinct invariant lines arises this way.

#include "abel/abel.hpp"

namespace abel {

struct ParamTuple {
  ExactTrigPoly G;
  ExactTrigPoly Ghat;
  ExactTrigPoly S1;
  Rational k;

  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

struct TwoCurveEquation {
  AbelEquation eq;
  ExactTrigPoly P1;  // G S1
  ExactTrigPoly P2;  // G (S1 + k Ghat)
};

/// Throws PreconditionError naming the first violated parameter invariant.
void validate(const ParamTuple& p);

/// Whether every irreducible factor of Ghat divides G, decided by iterated
/// exact gcd extraction. Ghat must be zero-free.
bool factors_divide(const ExactTrigPoly& ghat, const ExactTrigPoly& g);

TwoCurveEquation construct_two_curves(const ParamTuple& p);

/// Inverse of construct_two_curves, normalized so that G and Ghat have
/// constant term 1 (the unit of G moves into S1, k absorbs the rest).
ParamTuple recover_params(const ExactTrigPoly& p1, const ExactTrigPoly& p2, const AbelEquation& eq);

/// The tuple recover_params would return for the equation built from `p`
/// when S1 and Ghat have no common factor.
ParamTuple normalize(const ParamTuple& p);

}  // namespace abel
