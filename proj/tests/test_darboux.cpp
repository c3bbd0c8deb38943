#include <doctest.h>

#include "abel/construction.hpp"
#include "abel/darboux.hpp"
#include "abel/errors.hpp"
#include "support/generators.hpp"

using namespace abel;

namespace {

const ExactTrigPoly cos_plus_2 = ExactTrigPoly::linear(1, 0, 2);
const ExactTrigPoly sin_plus_2 = ExactTrigPoly::linear(0, 1, 2);
const ExactTrigPoly sin_plus_4 = ExactTrigPoly::linear(0, 1, 4);

TwoCurveEquation two_cycle_example() {
  return construct_two_curves({cos_plus_2 * sin_plus_2, sin_plus_2, sin_plus_4, Rational(-1)});
}

// Lines G and 3 G: A / P_i are proportional.
TwoCurveEquation proportional_example() {
  return construct_two_curves({cos_plus_2 * sin_plus_2, ExactTrigPoly::constant(1), ExactTrigPoly::constant(1), Rational(2)});
}

std::vector<Rational> as_vector(const ExactVector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

TEST_CASE("ratios of the two-cycle example are independent") {
  const TwoCurveEquation tc = two_cycle_example();
  const std::vector<InvariantLine> lines{InvariantLine(tc.P2), InvariantLine(tc.P1)};
  const auto ratios = curve_ratios(tc.eq, lines);
  REQUIRE(ratios.size() == 2);
  CHECK(ratios[0].deg_or_neg() == 3);
  CHECK(ratios[1].deg_or_neg() == 2);
  CHECK(lines[0].P() * ratios[0] == tc.eq.A);
  CHECK(lines[1].P() * ratios[1] == tc.eq.A);
  CHECK(dependence_kernel(ratios).empty());
  CHECK_THROWS_AS(first_integral(tc.eq, lines, {Rational(1), Rational(1)}), PreconditionError);
  CHECK_THROWS_AS(first_integral(tc.eq, lines, {Rational(2), Rational(-1)}), PreconditionError);
}

TEST_CASE("ratios of a line built by from_invariant") {
  const auto r = ExactTrigPoly::linear(1, -2, Rational(1, 2));
  const AbelEquation eq = from_invariant(cos_plus_2, r);
  CHECK(curve_ratios(eq, {InvariantLine(cos_plus_2)}) == std::vector<ExactTrigPoly>{r});
  CHECK_THROWS_AS(curve_ratios(eq, {InvariantLine(sin_plus_2)}), InconsistencyError);
}

TEST_CASE("proportional columns") {
  const auto r = ExactTrigPoly::linear(1, 2, 3);
  const auto k = dependence_kernel({r, Rational(2) * r});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 2);
  CHECK(k[0][1] == -1);
  CHECK(dependence_kernel({}).empty());
}

TEST_CASE("proportional-ratio certificate") {
  const TwoCurveEquation tc = proportional_example();
  const std::vector<InvariantLine> lines{InvariantLine(tc.P1), InvariantLine(tc.P2)};
  const auto ratios = curve_ratios(tc.eq, lines);
  const auto k = dependence_kernel(ratios);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 1);
  CHECK(k[0][1] == -3);

  const DarbouxCertificate cert = first_integral(tc.eq, lines, as_vector(k[0]));
  CHECK(cert.alpha0 == 2);

  NumericCheckOptions opts;
  opts.samples = 20;
  opts.tol = 1e-6;
  const NumericCheckResult res = verify_first_integral_numeric(cert, tc.eq, opts);
  CHECK(res.passed);
  CHECK(res.used > 0);
  CHECK(res.max_drift <= 1e-6);

  DarbouxCertificate perturbed = cert;
  perturbed.alphas[0] += Rational(1, 1000);
  perturbed.alpha0 = -(perturbed.alphas[0] + perturbed.alphas[1]);
  CHECK_THROWS_AS(first_integral(tc.eq, lines, perturbed.alphas), PreconditionError);
  const NumericCheckResult bad = verify_first_integral_numeric(perturbed, tc.eq, opts);
  CHECK_FALSE(bad.passed);
}

TEST_CASE("first integral preconditions") {
  const TwoCurveEquation tc = proportional_example();
  CHECK_THROWS_AS(first_integral(tc.eq, {}, {}), PreconditionError);
  const std::vector<InvariantLine> lines{InvariantLine(tc.P1), InvariantLine(tc.P2)};
  CHECK_THROWS_AS(first_integral(tc.eq, lines, {Rational(0), Rational(0)}), PreconditionError);
  CHECK_THROWS_AS(first_integral(tc.eq, lines, {Rational(1)}), PreconditionError);
}

TEST_CASE("numeric check is deterministic for a fixed seed") {
  const TwoCurveEquation tc = proportional_example();
  const std::vector<InvariantLine> lines{InvariantLine(tc.P1), InvariantLine(tc.P2)};
  const DarbouxCertificate cert = first_integral(tc.eq, lines, {Rational(1), Rational(-3)});
  NumericCheckOptions opts;
  opts.samples = 6;
  opts.seed = 99;
  const auto a = verify_first_integral_numeric(cert, tc.eq, opts);
  const auto b = verify_first_integral_numeric(cert, tc.eq, opts);
  CHECK(a.max_drift == b.max_drift);
  CHECK(a.used == b.used);
}

TEST_CASE("dimension count forces dependence") {
  testing::Gen gen(61);
  for (int it = 0; it < 30; ++it) {
    const int d = static_cast<int>(gen.integer(1, 3));
    const int r = 2 * d + 2;  // deg(A) + 2 with deg(A) = 2 d
    std::vector<ExactTrigPoly> ratios;
    for (int i = 0; i < r; ++i) {
      std::vector<Rational> a;
      std::vector<Rational> b;
      for (int k = 0; k <= d; ++k) a.push_back(gen.rational());
      for (int k = 1; k <= d; ++k) b.push_back(gen.rational());
      ratios.emplace_back(std::move(a), std::move(b));
    }
    const auto kernel = dependence_kernel(ratios);
    REQUIRE_FALSE(kernel.empty());
    ExactMatrix m(2 * d + 1, r);
    for (int i = 0; i < r; ++i) m.col(i) = coefficient_vector(ratios[static_cast<std::size_t>(i)], d);
    CHECK(static_cast<int>(kernel.size()) + exact_rank(m) == r);
    for (const auto& v : kernel) {
      ExactTrigPoly sum;
      for (int i = 0; i < r; ++i) sum += v[i] * ratios[static_cast<std::size_t>(i)];
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("cofactor combination cancels for lines G and 2 G") {
  const ExactTrigPoly g = cos_plus_2 * sin_plus_2;
  const TwoCurveEquation tc = construct_two_curves({g, ExactTrigPoly::constant(1), ExactTrigPoly::constant(1), Rational(1)});
  const std::vector<InvariantLine> lines{InvariantLine(tc.P1), InvariantLine(tc.P2)};
  const auto k = dependence_kernel(curve_ratios(tc.eq, lines));
  REQUIRE(k.size() == 1);
  const DarbouxCertificate cert = first_integral(tc.eq, lines, as_vector(k[0]));
  const XPoly total = cert.alpha0 * trivial_cofactor(tc.eq).as_xpoly() +
                      cert.alphas[0] * cofactor_of_line(tc.eq, lines[0]).as_xpoly() +
                      cert.alphas[1] * cofactor_of_line(tc.eq, lines[1]).as_xpoly();
  CHECK(total.is_zero());
}
