#pragma once

// Seeded random inputs for the property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "abel/construction.hpp"
#include "abel/factorization.hpp"

namespace abel::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(integer(0, static_cast<long>(xs.size()) - 1))];
  }

  Rational rational(long range = 6, long max_den = 4) { return make_rational(integer(-range, range), integer(1, max_den)); }

  ExactTrigPoly poly(int max_degree) {
    const int n = static_cast<int>(integer(0, max_degree));
    std::vector<Rational> a;
    std::vector<Rational> b;
    for (int k = 0; k <= n; ++k) a.push_back(rational());
    for (int k = 1; k <= n; ++k) b.push_back(rational());
    return ExactTrigPoly(std::move(a), std::move(b));
  }

  /// a cos t + b sin t + c with c^2 > a^2 + b^2, integer coefficients.
  LinearFactor<Rational> zero_free_factor() {
    long a = 0;
    long b = 0;
    while (a == 0 && b == 0) {
      a = integer(-3, 3);
      b = integer(-3, 3);
    }
    long c = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(a * a + b * b)))) + integer(1, 2);
    if (integer(0, 1) == 1) c = -c;
    return {Rational(a), Rational(b), Rational(c)};
  }

  /// `n` zero-free factors, pairwise non-associated and distinct from `avoid`.
  std::vector<LinearFactor<Rational>> distinct_factors(int n, const std::vector<LinearFactor<Rational>>& avoid = {}) {
    std::vector<LinearFactor<Rational>> out;
    while (static_cast<int>(out.size()) < n) {
      const auto f = zero_free_factor();
      if (contains(out, f) || contains(avoid, f)) continue;
      out.push_back(f);
    }
    return out;
  }

  /// Zero-free G, Ghat built from factors of G, S1 coprime to Ghat, and
  /// k in {+-1, +-2, +-1/2} with S1 + k Ghat zero-free.
  ParamTuple param_tuple() {
    static const std::vector<Rational> ks{make_rational(1), make_rational(-1), make_rational(2),
                                          make_rational(-2), make_rational(1, 2), make_rational(-1, 2)};
    for (;;) {
      const auto g_factors = distinct_factors(static_cast<int>(integer(1, 2)));
      ExactTrigPoly g = product(g_factors);
      if (integer(0, 3) == 0) g = Rational(integer(1, 3)) * g;

      ExactTrigPoly ghat = ExactTrigPoly::constant(1);
      std::vector<LinearFactor<Rational>> ghat_factors;
      for (const auto& f : g_factors) {
        if (integer(0, 1) == 1) {
          ghat_factors.push_back(f);
          ghat *= f.to_poly();
        }
      }
      ExactTrigPoly s1 = ExactTrigPoly::constant(Rational(integer(1, 3)));
      const int s1_factors = static_cast<int>(integer(0, 1));
      if (s1_factors > 0) s1 = s1 * product(distinct_factors(s1_factors, ghat_factors));

      const Rational k = pick(ks);
      const ExactTrigPoly s2 = s1 + k * ghat;
      if (s2.is_zero() || !is_zero_free(s2)) continue;
      return {g, ghat, s1, k};
    }
  }

  static ExactTrigPoly product(const std::vector<LinearFactor<Rational>>& fs) {
    ExactTrigPoly p = ExactTrigPoly::constant(1);
    for (const auto& f : fs) p *= f.to_poly();
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  static bool contains(const std::vector<LinearFactor<Rational>>& fs, const LinearFactor<Rational>& f) {
    const auto nf = normalized(f);
    for (const auto& g : fs) {
      const auto ng = normalized(g);
      if (ng.a == nf.a && ng.b == nf.b && ng.c == nf.c) return true;
    }
    return false;
  }

  std::mt19937_64 rng_;
};

}  // namespace abel::testing
