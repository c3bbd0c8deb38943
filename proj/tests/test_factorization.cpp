#include <doctest.h>

#include <cmath>
#include <complex>

#include "abel/errors.hpp"
#include "abel/factorization.hpp"
#include "support/generators.hpp"

using namespace abel;
using cd = std::complex<double>;

namespace {

const ExactTrigPoly cos_plus_2 = ExactTrigPoly::linear(1, 0, 2);
const ExactTrigPoly sin_plus_2 = ExactTrigPoly::linear(0, 1, 2);
const ExactTrigPoly sin_plus_4 = ExactTrigPoly::linear(0, 1, 4);

LinearFactor<double> to_double(const LinearFactor<Rational>& f) { return {f.a.get_d(), f.b.get_d(), f.c.get_d()}; }

double distance(const LinearFactor<double>& f, const LinearFactor<double>& g) {
  return std::max({std::abs(f.a - g.a), std::abs(f.b - g.b), std::abs(f.c - g.c)});
}

// Every expected factor is matched by a distinct computed one.
bool same_multiset(const std::vector<LinearFactor<double>>& expected, const std::vector<LinearFactor<double>>& got,
                   double tol) {
  if (expected.size() != got.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const auto& e : expected) {
    const auto ne = normalized(e);
    bool found = false;
    for (std::size_t j = 0; j < got.size() && !found; ++j) {
      if (!used[j] && distance(ne, normalized(got[j])) <= tol) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("linear factor normalization") {
  const auto f = normalized(LinearFactor<double>{-3, -4, -10});
  CHECK(f.a == doctest::Approx(0.6));
  CHECK(f.b == doctest::Approx(0.8));
  CHECK(f.c == doctest::Approx(2.0));
  const auto g = normalized(LinearFactor<double>{0, -2, 0});
  CHECK(g.b == 1.0);
  CHECK(g.c == 0.0);
  const auto e = normalized(LinearFactor<Rational>{0, 3, 6});
  CHECK(e.b == 1);
  CHECK(e.c == 2);
  CHECK_THROWS_AS(normalized(LinearFactor<double>{0, 0, 1}), PreconditionError);
}

TEST_CASE("factor a known product") {
  const auto p = cos_plus_2 * sin_plus_2 * sin_plus_4;
  const Factorization f = factor(p);
  CHECK(f.factors.size() == 3);
  CHECK(f.residual <= 1e-12);
  CHECK(same_multiset({{1, 0, 2}, {0, 1, 2}, {0, 1, 4}}, f.factors, 1e-10));
  CHECK(f.unit == doctest::Approx(1.0));
  CHECK(coeff_distance(f.expand(), to_float(p)) <= 1e-12);
}

TEST_CASE("factor with real zeros") {
  const auto s = factor(ExactTrigPoly::sin_term(1, 3));
  REQUIRE(s.factors.size() == 1);
  CHECK(std::abs(s.factors[0].b) == doctest::Approx(1.0));
  CHECK(s.factors[0].c == doctest::Approx(0.0));
  CHECK(s.residual <= 1e-12);

  // sin 2t = 2 sin t cos t
  const auto d = factor(ExactTrigPoly::sin_term(2));
  CHECK(d.factors.size() == 2);
  CHECK(d.residual <= 1e-12);

  const FloatTrigPoly p = FloatTrigPoly::linear(0, std::sqrt(2.0), -1);
  const auto f = factor(p);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.residual <= 1e-12);
}

TEST_CASE("units and zero are not factorable") {
  CHECK_THROWS_AS(factor(ExactTrigPoly::constant(5)), PreconditionError);
  CHECK_THROWS_AS(factor(ExactTrigPoly{}), PreconditionError);
}

TEST_CASE("random products of zero-free factors") {
  testing::Gen gen(31);
  for (int i = 0; i < 60; ++i) {
    const auto fs = gen.distinct_factors(static_cast<int>(gen.integer(1, 4)));
    const Rational unit = gen.rational(5, 3);
    if (sgn(unit) == 0) continue;
    const ExactTrigPoly p = unit * testing::Gen::product(fs);
    const Factorization f = factor(p);
    CHECK(static_cast<int>(f.factors.size()) == p.deg_or_neg());
    CHECK(f.residual <= 1e-9);
    std::vector<LinearFactor<double>> expected;
    for (const auto& x : fs) expected.push_back(to_double(x));
    CHECK(same_multiset(expected, f.factors, 1e-8));
    for (const auto& x : f.factors) CHECK(x.is_zero_free());
  }
}

TEST_CASE("exact zero-freeness") {
  CHECK(is_zero_free(cos_plus_2));
  CHECK(is_zero_free(ExactTrigPoly::constant(-3)));
  CHECK_FALSE(is_zero_free(ExactTrigPoly::sin_term(1)));
  CHECK_FALSE(is_zero_free(ExactTrigPoly::linear(3, 4, 5)));  // tangent: c^2 = a^2 + b^2
  CHECK(is_zero_free(cos_plus_2 * sin_plus_2 * sin_plus_4));
  CHECK_FALSE(is_zero_free(cos_plus_2 * ExactTrigPoly::linear(1, 1, 0)));
  CHECK_FALSE(is_zero_free(ExactTrigPoly::cos_term(2) + ExactTrigPoly::constant(1)));  // 2 cos^2 t, zero at pi/2
  CHECK_FALSE(is_zero_free(ExactTrigPoly::cos_term(2, -1) + ExactTrigPoly::constant(1)));  // 2 sin^2 t
  CHECK(is_zero_free(ExactTrigPoly::cos_term(3) + ExactTrigPoly::constant(Rational(11, 10))));
  CHECK_FALSE(is_zero_free(ExactTrigPoly::cos_term(3) + ExactTrigPoly::constant(1)));  // zero at pi/3 and pi
  CHECK_THROWS_AS(is_zero_free(ExactTrigPoly{}), PreconditionError);

  testing::Gen gen(32);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.poly(4);
    if (p.is_zero() || p.deg_or_neg() < 1) continue;
    // dense sampling can only refute zero-freeness
    const double v0 = eval(p, 0.0);
    bool sign_change = false;
    for (int k = 1; k <= 2000; ++k) {
      if ((eval(p, 2 * M_PI * k / 2000) > 0) != (v0 > 0)) sign_change = true;
    }
    if (sign_change) CHECK_FALSE(is_zero_free(p));
  }
}

TEST_CASE("binary64 zero-freeness") {
  CHECK(is_zero_free(to_float(cos_plus_2 * sin_plus_2)));
  CHECK_FALSE(is_zero_free(FloatTrigPoly::linear(0, std::sqrt(2.0), -1)));
  CHECK_FALSE(is_zero_free(FloatTrigPoly::sin_term(1)));
}

TEST_CASE("exact division") {
  const auto p = cos_plus_2 * sin_plus_2 * sin_plus_4;
  const auto q = divides_exact(sin_plus_2, p);
  REQUIRE(q);
  CHECK(*q == cos_plus_2 * sin_plus_4);
  CHECK_FALSE(divides_exact(ExactTrigPoly::linear(1, 1, 3), p).has_value());
  CHECK(divides_exact(ExactTrigPoly::constant(2), p) == Rational(1, 2) * p);
  CHECK(divides_exact(p, ExactTrigPoly{}) == ExactTrigPoly{});

  testing::Gen gen(33);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.poly(3);
    const auto b = gen.poly(3);
    if (a.is_zero() || b.is_zero()) continue;
    const auto r = divides_exact(a, a * b);
    REQUIRE(r);
    CHECK(*r == b);
  }
}

TEST_CASE("gcd of zero-free elements") {
  const auto g = gcd_zero_free(Rational(2) * cos_plus_2 * sin_plus_2, cos_plus_2 * sin_plus_2 * sin_plus_4);
  CHECK(g == Rational(1, 4) * cos_plus_2 * sin_plus_2);  // normalized to constant term 1
  CHECK(g.a(0) == 1);
  CHECK(gcd_zero_free(cos_plus_2, sin_plus_2) == ExactTrigPoly::constant(1));
  CHECK_THROWS_AS(gcd_zero_free(ExactTrigPoly::sin_term(1), cos_plus_2), PreconditionError);

  testing::Gen gen(34);
  for (int i = 0; i < 60; ++i) {
    const auto fs = gen.distinct_factors(4);
    const auto common = testing::Gen::product({fs[0]});
    const auto p1 = common * fs[1].to_poly() * fs[2].to_poly();
    const auto p2 = common * fs[3].to_poly();
    const auto gcd = gcd_zero_free(p1, p2);
    CHECK(gcd == Rational(1 / common.a(0)) * common);
  }
}

TEST_CASE("common irreducible factors") {
  CHECK(common_irreducible_factor(cos_plus_2 * sin_plus_2, sin_plus_2 * ExactTrigPoly::sin_term(1)));
  CHECK_FALSE(common_irreducible_factor(cos_plus_2, ExactTrigPoly::sin_term(1)));
  CHECK_FALSE(common_irreducible_factor(cos_plus_2, ExactTrigPoly::constant(3)));
  // every factor divides zero
  CHECK(common_irreducible_factor(cos_plus_2, ExactTrigPoly{}));
}

TEST_CASE("complex factorization: sqrt(2) sin t - 1") {
  const double r2 = std::sqrt(2.0);
  const cd i(0, 1);
  const FloatTrigPoly p = FloatTrigPoly::linear(0, r2, -1);
  const ComplexFactorization cf = complex_factors(p);
  REQUIRE(cf.factors.size() == 2);
  CHECK(cf.residual <= 1e-12);
  for (double t : {0.0, 0.7, 2.0, 4.4}) CHECK(std::abs(cf.eval(t) - eval(p, t)) <= 1e-12);

  const ComplexLinearFactor shared{i, 1.0, -(1.0 + i) / r2};
  // The printed cos coefficient (i - 1) is a sign slip; (-1 - i) gives the correct associate.
  const ComplexLinearFactor first{(i - 1.0) / 2.0, -(1.0 + i) / 2.0, -r2 * i / 2.0};
  const ComplexLinearFactor printed{(i - 1.0) / 2.0, (i - 1.0) / 2.0, -r2 * i / 2.0};

  CHECK(std::abs(*shared.root() - std::exp(i * (M_PI / 4))) <= 1e-12);
  CHECK(std::abs(*first.root() - std::exp(i * (3 * M_PI / 4))) <= 1e-12);
  for (double t : {0.1, 1.3, 2.9}) {
    CHECK(std::abs(first.eval(t) * shared.eval(t) - eval(p, t)) <= 1e-12);
    CHECK(std::abs(printed.eval(t) * shared.eval(t) - eval(p, t)) > 1e-3);
  }

  const bool a = associated(cf.factors[0], shared, 1e-8) && associated(cf.factors[1], first, 1e-8);
  const bool b = associated(cf.factors[1], shared, 1e-8) && associated(cf.factors[0], first, 1e-8);
  CHECK((a || b));
}

TEST_CASE("complex factorization: -sqrt(2) cos t + 1") {
  const double r2 = std::sqrt(2.0);
  const cd i(0, 1);
  const FloatTrigPoly q = FloatTrigPoly::linear(-r2, 0, 1);
  const ComplexFactorization cf = complex_factors(q);
  REQUIRE(cf.factors.size() == 2);
  const ComplexLinearFactor h1{-(i + 1.0) / 2.0, -(i - 1.0) / 2.0, -r2 / 2.0};
  const ComplexLinearFactor shared{i, 1.0, -(1.0 + i) / r2};
  for (double t : {0.1, 1.3, 2.9}) CHECK(std::abs(h1.eval(t) * shared.eval(t) - eval(q, t)) <= 1e-12);
  const bool a = associated(cf.factors[0], shared, 1e-8) && associated(cf.factors[1], h1, 1e-8);
  const bool b = associated(cf.factors[1], shared, 1e-8) && associated(cf.factors[0], h1, 1e-8);
  CHECK((a || b));
}

TEST_CASE("complex factor count is twice the degree") {
  testing::Gen gen(35);
  for (int it = 0; it < 40; ++it) {
    const auto p = gen.poly(4);
    if (p.deg_or_neg() < 1) continue;
    const auto cf = complex_factors(to_float(p));
    CHECK(static_cast<int>(cf.factors.size()) == 2 * p.deg_or_neg());
    CHECK(cf.residual <= 1e-8);
  }
}

TEST_CASE("half-angle image and Sturm counts") {
  // (1 + u^2) cos t = 1 - u^2
  const auto h = detail::half_angle_image(ExactTrigPoly::cos_term(1));
  REQUIRE(h.size() == 3);
  CHECK(h[0] == 1);
  CHECK(h[1] == 0);
  CHECK(h[2] == -1);
  CHECK(detail::count_real_roots({-1, 0, 1}) == 2);
  CHECK(detail::count_real_roots({1, 0, 1}) == 0);
  CHECK(detail::count_real_roots({0, 0, 1}) == 1);
  CHECK(detail::count_real_roots({-6, 11, -6, 1}) == 3);
}

TEST_CASE("coefficient vectors") {
  const auto p = cos_plus_2 * sin_plus_2;
  const ExactVector v = coefficient_vector(p, 3);
  REQUIRE(v.size() == 7);
  CHECK(v[0] == 4);
  CHECK(v[1] == 2);
  CHECK(v[2] == 2);
  CHECK(v[3] == 0);
  CHECK(v[4] == Rational(1, 2));
  CHECK(v[6] == 0);
  CHECK(from_coefficient_vector(v) == p);
}
