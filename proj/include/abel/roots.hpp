#pragma once

#include <complex>

#include <Eigen/Core>

namespace abel {

struct RootOptions {
  double tol = 1e-12;        // relative correction size that counts as converged
  int max_iterations = 500;
  double cluster = 1e-6;     // roots closer than this (relative) are one multiple root
};

/// All roots of sum_j coeffs[j] z^j (ascending powers, nonzero leading
/// coefficient). Aberth-Ehrlich simultaneous iteration, falling back to the
/// companion-matrix eigenvalues when it stalls; Newton-polished either way.
/// Each cluster of m nearby roots is treated as one root of multiplicity m and
/// refined as a simple root of the (m-1)-th derivative.
Eigen::VectorXcd polynomial_roots(const Eigen::VectorXcd& coeffs, const RootOptions& opts = {});

/// Horner evaluation, ascending coefficients.
std::complex<double> polynomial_eval(const Eigen::VectorXcd& coeffs, std::complex<double> z);

}  // namespace abel
