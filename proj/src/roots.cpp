#include "abel/roots.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace abel {
namespace {

using cd = std::complex<double>;

// p(z) and p'(z) together.
std::pair<cd, cd> eval_with_derivative(const Eigen::VectorXcd& c, cd z) {
  cd p = c[c.size() - 1];
  cd dp = 0.0;
  for (Eigen::Index j = c.size() - 2; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + c[j];
  }
  return {p, dp};
}

bool aberth(const Eigen::VectorXcd& c, Eigen::VectorXcd& z, const RootOptions& opts) {
  const Eigen::Index n = c.size() - 1;
  const double radius = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n) + 0.4;
    z[i] = std::polar(radius > 0 ? radius : 1.0, angle);
  }
  for (int it = 0; it < opts.max_iterations; ++it) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (p == 0.0) continue;
      const cd ratio = p / dp;
      cd s = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[i] - z[j]);
      }
      const cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst <= opts.tol) return true;
  }
  return false;
}

Eigen::VectorXcd companion_roots(const Eigen::VectorXcd& c) {
  const Eigen::Index n = c.size() - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solver failed");
  return solver.eigenvalues();
}

void polish(const Eigen::VectorXcd& c, Eigen::VectorXcd& z) {
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (dp == 0.0) break;
      const cd next = z[i] - p / dp;
      if (std::abs(polynomial_eval(c, next)) >= std::abs(p)) break;
      z[i] = next;
    }
  }
}

Eigen::VectorXcd derivative(const Eigen::VectorXcd& c, int times) {
  Eigen::VectorXcd d = c;
  for (int k = 0; k < times && d.size() > 1; ++k) {
    Eigen::VectorXcd next(d.size() - 1);
    for (Eigen::Index j = 1; j < d.size(); ++j) next[j - 1] = static_cast<double>(j) * d[j];
    d = next;
  }
  return d;
}

// A root of multiplicity m is a simple root of the (m-1)-th derivative.
cd refine_multiple(const Eigen::VectorXcd& c, cd z, int m) {
  const Eigen::VectorXcd d = derivative(c, m - 1);
  for (int k = 0; k < 8; ++k) {
    auto [p, dp] = eval_with_derivative(d, z);
    if (dp == 0.0) break;
    const cd next = z - p / dp;
    if (std::abs(polynomial_eval(d, next)) >= std::abs(p)) break;
    z = next;
  }
  return z;
}

void merge_clusters(const Eigen::VectorXcd& c, Eigen::VectorXcd& z, double cluster) {
  const Eigen::Index n = z.size();
  std::vector<Eigen::Index> group(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) group[static_cast<std::size_t>(i)] = i;
  auto find = [&](Eigen::Index i) {
    while (group[static_cast<std::size_t>(i)] != i) i = group[static_cast<std::size_t>(i)];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= cluster * std::max(1.0, std::abs(z[i]))) group[static_cast<std::size_t>(find(j))] = find(i);
    }
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    if (find(r) != r) continue;
    cd sum = 0.0;
    int count = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (find(i) == r) {
        sum += z[i];
        ++count;
      }
    }
    if (count < 2) continue;
    const cd root = refine_multiple(c, sum / static_cast<double>(count), count);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (find(i) == r) z[i] = root;
    }
  }
}

}  // namespace

cd polynomial_eval(const Eigen::VectorXcd& coeffs, cd z) {
  cd p = 0.0;
  for (Eigen::Index j = coeffs.size() - 1; j >= 0; --j) p = p * z + coeffs[j];
  return p;
}

Eigen::VectorXcd polynomial_roots(const Eigen::VectorXcd& coeffs, const RootOptions& opts) {
  const Eigen::Index n = coeffs.size() - 1;
  if (n < 1) return {};
  if (coeffs[n] == 0.0) throw std::invalid_argument("polynomial_roots: leading coefficient is zero");
  if (n == 1) return Eigen::VectorXcd::Constant(1, -coeffs[0] / coeffs[1]);

  Eigen::VectorXcd z(n);
  if (coeffs[0] == 0.0 || !aberth(coeffs, z, opts)) z = companion_roots(coeffs);
  polish(coeffs, z);
  merge_clusters(coeffs, z, opts.cluster);
  return z;
}

}  // namespace abel
