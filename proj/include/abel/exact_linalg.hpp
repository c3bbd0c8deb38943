#pragma once

// Exact linear algebra over the rationals by fraction-free (Bareiss)
// elimination. No floating-point rank decisions.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "abel/rational.hpp"

namespace abel {

using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

int exact_rank(const ExactMatrix& m);

/// Basis of { x : m x = 0 }. Each vector is scaled to a primitive integer
/// vector whose first nonzero entry is positive. Empty iff the columns are
/// linearly independent.
std::vector<ExactVector> exact_nullspace(const ExactMatrix& m);

/// Some x with m x = rhs (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<ExactVector> exact_solve(const ExactMatrix& m, const ExactVector& rhs);

}  // namespace abel
