#pragma once

// Darboux first integrals f = x^alpha0 * prod (1 - P_i x)^alpha_i built from
// invariant lines. The exponents exist exactly when the ratios A / P_i are
// linearly dependent over the rationals.

#include <cstdint>
#include <string>
#include <vector>

#include "abel/abel.hpp"
#include "abel/exact_linalg.hpp"

namespace abel {

struct DarbouxCertificate {
  std::vector<Rational> alphas;  // one per curve
  Rational alpha0;               // -sum(alphas), exponent of x
  std::vector<InvariantLine> curves;
};

/// R_i = A / P_i. Throws InconsistencyError when some P_i does not divide A.
std::vector<ExactTrigPoly> curve_ratios(const AbelEquation& eq, const std::vector<InvariantLine>& lines);

/// Basis of {alpha : sum alpha_i R_i = 0}, primitive integer vectors.
/// Empty means the ratios are linearly independent.
std::vector<ExactVector> dependence_kernel(const std::vector<ExactTrigPoly>& ratios);

/// Checks alpha0 K0 + sum alpha_i K_i = 0 exactly (K0 = trivial cofactor,
/// K_i = line cofactors). Throws PreconditionError otherwise.
DarbouxCertificate first_integral(const AbelEquation& eq, const std::vector<InvariantLine>& lines,
                                  const std::vector<Rational>& alphas);

struct NumericCheckOptions {
  int samples = 20;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  double rtol = 1e-11;
  unsigned threads = 0;
};

struct NumericCheckResult {
  bool passed = false;
  double max_drift = 0.0;  // over the samples that were integrated
  int used = 0;
  std::vector<std::string> warnings;  // skipped samples
};

/// Integrates from seeded random x0 over [0, 2 pi] and tracks
/// alpha0 log|x| + sum alpha_i log|1 - P_i x| along each trajectory.
/// Passes when the drift relative to max(1, |F(0)|) stays within tol.
/// Throws InconclusiveError if every sample had to be skipped.
NumericCheckResult verify_first_integral_numeric(const DarbouxCertificate& cert, const AbelEquation& eq,
                                                 const NumericCheckOptions& opts = {});

}  // namespace abel
