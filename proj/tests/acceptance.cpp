// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

#include "abel/construction.hpp"
#include "abel/darboux.hpp"
#include "abel/errors.hpp"
#include "abel/poincare.hpp"
#include "support/generators.hpp"

using namespace abel;
using cd = std::complex<double>;

namespace {

const ExactTrigPoly cos_plus_2 = ExactTrigPoly::linear(1, 0, 2);
const ExactTrigPoly sin_plus_2 = ExactTrigPoly::linear(0, 1, 2);
const ExactTrigPoly sin_plus_4 = ExactTrigPoly::linear(0, 1, 4);

ParamTuple example_params() { return {cos_plus_2 * sin_plus_2, sin_plus_2, sin_plus_4, Rational(-1)}; }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;
constexpr double no_limit = std::numeric_limits<double>::infinity();

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs >= limit_seconds) {
    o.ok = false;
    o.detail = "runtime over " + std::to_string(limit_seconds) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("criterion %d [PRIMARY] %s: %s (%.2f s)%s%s\n", id, name, o.ok ? "PASS" : "FAIL", secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome example_reproduction() {
  Outcome o;
  const TwoCurveEquation tc = construct_two_curves(example_params());
  const ExactTrigPoly last = ExactTrigPoly::cos_term(2, 3) + ExactTrigPoly::cos_term(1, 8) +
                             ExactTrigPoly::sin_term(1, -4) + ExactTrigPoly::constant(1);
  const ExactTrigPoly a = cos_plus_2 * sin_plus_2 * sin_plus_4 * last;
  const ExactTrigPoly b = ExactTrigPoly::sin_term(3, Rational(-3, 4)) + ExactTrigPoly::cos_term(2, -9) +
                          ExactTrigPoly::sin_term(2, -2) + ExactTrigPoly::cos_term(1, -20) +
                          ExactTrigPoly::sin_term(1, Rational(49, 4)) + ExactTrigPoly::constant(-1);
  o.require(tc.eq.A == a, "A differs from the displayed product");
  o.require(tc.eq.B == b, "B differs from the displayed sum");
  o.require(coeff_distance(tc.eq.A, a) == 0.0 && coeff_distance(tc.eq.B, b) == 0.0, "nonzero coefficient error");
  return o;
}

Outcome invariance() {
  Outcome o;
  const AbelEquation eq = construct_two_curves(example_params()).eq;
  const ExactTrigPoly p1 = Rational(2) * cos_plus_2 * sin_plus_2;
  const ExactTrigPoly p2 = cos_plus_2 * sin_plus_2 * sin_plus_4;
  o.require(is_invariant_line(eq, p1), "P1 not invariant");
  o.require(is_invariant_line(eq, p2), "P2 not invariant");
  o.require(p1.deg_or_neg() == 2 && p2.deg_or_neg() == 3 && eq.A.deg_or_neg() == 5, "degrees are not 2, 3, 5");
  o.require(degree_identity(eq, p1, p2), "degree identity fails");
  o.require(constant_term(eq.B) == -1, "constant term of B is not -1");
  o.require(mean_integral(eq.B).a0 == -1, "integral of B is not -2 pi");
  return o;
}

Outcome limit_cycles() {
  Outcome o;
  const TwoCurveEquation tc = construct_two_curves(example_params());
  ScanOptions opts;
  opts.x_min = -0.05;
  opts.x_max = 0.2;
  opts.grid = 400;
  opts.rtol = 1e-10;
  const LimitCycleReport r = find_limit_cycles(tc.eq, opts, {tc.P1, tc.P2});
  std::vector<double> nontrivial;
  for (const auto& fp : r.fixed_points) {
    if (!fp.trivial) nontrivial.push_back(fp.x0);
  }
  o.require(nontrivial.size() == 2, "expected 2 nontrivial fixed points, found " + std::to_string(nontrivial.size()));
  if (nontrivial.size() == 2) {
    o.require(std::abs(nontrivial[0] - 1.0 / 24) <= 1e-6, "no fixed point within 1e-6 of 1/24");
    o.require(std::abs(nontrivial[1] - 1.0 / 12) <= 1e-6, "no fixed point within 1e-6 of 1/12");
  }
  o.require(r.count_nontrivial == 2 && r.bound == 2 && rational_cycle_bound(tc.eq) == 2, "count != bound != 2");
  return o;
}

Outcome property_suite() {
  Outcome o;
  testing::Gen gen(20240601);
  int scanned = 0;
  int cycles_total = 0;
  for (int i = 0; i < 100 && o.ok; ++i) {
    const ParamTuple p = gen.param_tuple();
    const TwoCurveEquation tc = construct_two_curves(p);
    const std::string tag = "instance " + std::to_string(i) + ": ";
    o.require(is_invariant_line(tc.eq, tc.P1) && is_invariant_line(tc.eq, tc.P2), tag + "line not invariant");
    o.require(degree_identity(tc.eq, tc.P1, tc.P2), tag + "degree identity fails");
    o.require(recover_params(tc.P1, tc.P2, tc.eq) == normalize(p), tag + "round trip differs from normalized tuple");
    if (!center_obstruction(tc.eq)) continue;

    const double r1 = 1.0 / eval(tc.P1, 0.0);
    const double r2 = 1.0 / eval(tc.P2, 0.0);
    const double m = std::max(std::abs(r1), std::abs(r2));
    ScanOptions opts;
    opts.x_min = -0.5 * m;
    opts.x_max = 1.5 * m;
    opts.grid = 120;
    const LimitCycleReport r = find_limit_cycles(tc.eq, opts, {tc.P1, tc.P2});
    ++scanned;
    cycles_total += r.count_nontrivial;
    o.require(r.bound_respected, tag + "rational cycles exceed the bound");
    for (double x0 : {r1, r2}) {
      const auto x1 = return_map(tc.eq, x0, 1e-12);
      o.require(x1 && std::abs(*x1 - x0) <= 1e-6, tag + "invariant line is not a numeric fixed point");
    }
  }
  if (o.ok) {
    o.detail = std::to_string(scanned) + " non-center instances scanned, " + std::to_string(cycles_total) +
               " nontrivial cycles found in total";
  }
  return o;
}

Outcome factorization() {
  Outcome o;
  testing::Gen gen(777);
  for (int i = 0; i < 200 && o.ok; ++i) {
    const auto fs = gen.distinct_factors(static_cast<int>(gen.integer(1, 4)));
    const ExactTrigPoly p = Rational(gen.integer(1, 5) * (gen.integer(0, 1) == 0 ? 1 : -1)) * testing::Gen::product(fs);
    const Factorization f = factor(p);
    const std::string tag = "instance " + std::to_string(i) + ": ";
    o.require(static_cast<int>(f.factors.size()) == p.deg_or_neg(), tag + "factor count != degree");
    o.require(f.residual <= 1e-9, tag + "residual above 1e-9");
    std::vector<bool> used(f.factors.size(), false);
    for (const auto& e : fs) {
      const auto ne = normalized(LinearFactor<double>{e.a.get_d(), e.b.get_d(), e.c.get_d()});
      bool found = false;
      for (std::size_t j = 0; j < f.factors.size() && !found; ++j) {
        const auto g = normalized(f.factors[j]);
        const double d = std::max({std::abs(g.a - ne.a), std::abs(g.b - ne.b), std::abs(g.c - ne.c)});
        if (!used[j] && d <= 1e-8) used[j] = found = true;
      }
      o.require(found, tag + "factor multiset not recovered at 1e-8");
    }
  }

  const double r2 = std::sqrt(2.0);
  const cd i(0, 1);
  const ComplexFactorization cf = complex_factors(FloatTrigPoly::linear(0, r2, -1));
  const ComplexLinearFactor shared{i, 1.0, -(1.0 + i) / r2};
  const ComplexLinearFactor first{(i - 1.0) / 2.0, -(1.0 + i) / 2.0, -r2 * i / 2.0};
  o.require(cf.factors.size() == 2, "sqrt(2) sin t - 1: expected 2 complex factors");
  if (cf.factors.size() == 2) {
    const bool a = associated(cf.factors[0], shared, 1e-8) && associated(cf.factors[1], first, 1e-8);
    const bool b = associated(cf.factors[1], shared, 1e-8) && associated(cf.factors[0], first, 1e-8);
    o.require(a || b, "sqrt(2) sin t - 1: complex factors not associated to the reference factors");
  }
  o.require(cf.residual <= 1e-8, "sqrt(2) sin t - 1: complex residual above 1e-8");
  return o;
}

Outcome darboux() {
  Outcome o;
  const TwoCurveEquation ex = construct_two_curves(example_params());
  const auto ex_ratios = curve_ratios(ex.eq, {InvariantLine(ex.P1), InvariantLine(ex.P2)});
  o.require(dependence_kernel(ex_ratios).empty(), "example ratios are dependent");

  const TwoCurveEquation pr =
      construct_two_curves({cos_plus_2 * sin_plus_2, ExactTrigPoly::constant(1), ExactTrigPoly::constant(1), Rational(2)});
  const std::vector<InvariantLine> lines{InvariantLine(pr.P1), InvariantLine(pr.P2)};
  const auto kernel = dependence_kernel(curve_ratios(pr.eq, lines));
  o.require(kernel.size() == 1, "proportional pair: kernel rank is not 1");
  if (kernel.size() == 1) {
    const std::vector<Rational> alphas(kernel[0].data(), kernel[0].data() + kernel[0].size());
    const DarbouxCertificate cert = first_integral(pr.eq, lines, alphas);
    XPoly total = cert.alpha0 * trivial_cofactor(pr.eq).as_xpoly();
    for (std::size_t j = 0; j < lines.size(); ++j) total = total + cert.alphas[j] * cofactor_of_line(pr.eq, lines[j]).as_xpoly();
    o.require(total.is_zero(), "cofactor combination does not cancel");
    NumericCheckOptions opts;
    opts.samples = 20;
    opts.tol = 1e-6;
    const NumericCheckResult res = verify_first_integral_numeric(cert, pr.eq, opts);
    o.require(res.passed, "numeric drift " + std::to_string(res.max_drift) + " above 1e-6");
  }

  testing::Gen gen(4242);
  for (int deg_a = 2; deg_a <= 8; deg_a += 2) {
    const int d = deg_a / 2;
    std::vector<ExactTrigPoly> ratios;
    for (int j = 0; j < deg_a + 2; ++j) {
      std::vector<Rational> a;
      std::vector<Rational> b;
      for (int k = 0; k <= d; ++k) a.push_back(gen.rational());
      for (int k = 1; k <= d; ++k) b.push_back(gen.rational());
      ratios.emplace_back(std::move(a), std::move(b));
    }
    const auto k = dependence_kernel(ratios);
    o.require(!k.empty(), "deg(A) + 2 ratios of degree deg(A)/2 gave an empty kernel");
    for (const auto& v : k) {
      ExactTrigPoly sum;
      for (std::size_t j = 0; j < ratios.size(); ++j) sum += v[static_cast<Eigen::Index>(j)] * ratios[j];
      o.require(sum.is_zero(), "kernel vector does not annihilate the ratios");
    }
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "example reproduction (exact)", 1.0, example_reproduction);
  criterion(2, "invariance (exact)", no_limit, invariance);
  criterion(3, "numeric limit cycles", 30.0, limit_cycles);
  criterion(4, "property suite", 300.0, property_suite);
  criterion(5, "factorization", no_limit, factorization);
  criterion(6, "Darboux engine", no_limit, darboux);
  std::printf("%d of 6 criteria passed\n", 6 - failures);
  return failures == 0 ? 0 : 1;
}
