#include "abel/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "abel/factorization.hpp"
#include "abel/poincare.hpp"

namespace abel {

std::vector<ExactTrigPoly> curve_ratios(const AbelEquation& eq, const std::vector<InvariantLine>& lines) {
  std::vector<ExactTrigPoly> out;
  out.reserve(lines.size());
  for (const auto& line : lines) {
    auto r = divides_exact(line.P(), eq.A);
    if (!r) throw InconsistencyError("curve_ratios: P does not divide A; the curve is not an invariant line");
    out.push_back(std::move(*r));
  }
  return out;
}

std::vector<ExactVector> dependence_kernel(const std::vector<ExactTrigPoly>& ratios) {
  if (ratios.empty()) return {};
  int n = 0;
  for (const auto& r : ratios) n = std::max(n, r.deg_or_neg());
  ExactMatrix m(2 * n + 1, static_cast<Eigen::Index>(ratios.size()));
  for (std::size_t j = 0; j < ratios.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = coefficient_vector(ratios[j], n);
  return exact_nullspace(m);
}

DarbouxCertificate first_integral(const AbelEquation& eq, const std::vector<InvariantLine>& lines,
                                  const std::vector<Rational>& alphas) {
  if (lines.empty()) {
    throw PreconditionError("first_integral: at least one nontrivial invariant line is required");
  }
  if (alphas.size() != lines.size()) throw PreconditionError("first_integral: one exponent per curve required");
  if (std::all_of(alphas.begin(), alphas.end(), [](const Rational& a) { return sgn(a) == 0; })) {
    throw PreconditionError("first_integral: exponents must not all vanish");
  }

  DarbouxCertificate cert;
  cert.alphas = alphas;
  cert.alpha0 = 0;
  for (const auto& a : alphas) cert.alpha0 -= a;
  cert.curves = lines;

  XPoly total = cert.alpha0 * trivial_cofactor(eq).as_xpoly();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!is_invariant_line(eq, lines[i].P())) {
      throw PreconditionError("first_integral: CondInv violated for curve " + std::to_string(i));
    }
    total = total + alphas[i] * cofactor_of_line(eq, lines[i]).as_xpoly();
  }
  if (!total.is_zero()) {
    throw PreconditionError("first_integral: not a first integral (alpha0 K0 + sum alpha_i K_i != 0)");
  }
  return cert;
}

NumericCheckResult verify_first_integral_numeric(const DarbouxCertificate& cert, const AbelEquation& eq,
                                                 const NumericCheckOptions& opts) {
  if (opts.samples < 1) throw PreconditionError("verify_first_integral_numeric: samples >= 1 required");
  if (cert.curves.empty() || cert.alphas.size() != cert.curves.size()) {
    throw PreconditionError("verify_first_integral_numeric: malformed certificate");
  }
  const std::size_t r = cert.curves.size();
  const double alpha0 = cert.alpha0.get_d();
  std::vector<double> alphas(r);
  std::vector<FloatTrigPoly> curves;
  double scale = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    alphas[i] = cert.alphas[i].get_d();
    curves.push_back(to_float(cert.curves[i].P()));
    scale = std::max(scale, std::abs(eval(curves[i], 0.0)));
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> starts(static_cast<std::size_t>(opts.samples));
  for (auto& x0 : starts) x0 = unit(rng) * 0.95 / scale;

  auto log_form = [&](double t, double x) {
    double f = alpha0 * std::log(std::abs(x));
    for (std::size_t i = 0; i < r; ++i) f += alphas[i] * std::log(std::abs(1.0 - eval(curves[i], t) * x));
    return f;
  };

  const AbelField field(eq);
  struct Outcome {
    bool used = false;
    double drift = 0.0;
    std::string warning;
  };
  std::vector<Outcome> outcomes(starts.size());
  detail::parallel_for(starts.size(), opts.threads, [&](std::size_t s) {
    const double x0 = starts[s];
    if (x0 == 0.0) {
      outcomes[s].warning = "sample " + std::to_string(s) + ": x0 = 0 lies on the trivial curve, skipped";
      return;
    }
    IntegrateOptions io;
    io.rtol = opts.rtol;
    io.record = true;
    const Trajectory tr = integrate(field, x0, 0.0, 2.0 * M_PI, io);
    if (tr.blew_up) {
      outcomes[s].warning = "sample " + std::to_string(s) + ": trajectory blew up, skipped";
      return;
    }
    const double f0 = log_form(0.0, x0);
    double drift = 0.0;
    for (std::size_t k = 0; k < tr.t.size(); ++k) drift = std::max(drift, std::abs(log_form(tr.t[k], tr.x[k]) - f0));
    outcomes[s].used = true;
    outcomes[s].drift = drift / std::max(1.0, std::abs(f0));
  });

  NumericCheckResult out;
  for (auto& o : outcomes) {
    if (!o.used) {
      out.warnings.push_back(std::move(o.warning));
      continue;
    }
    ++out.used;
    out.max_drift = std::max(out.max_drift, o.drift);
  }
  if (out.used == 0) throw InconclusiveError("verify_first_integral_numeric: every sample was skipped");
  out.passed = out.max_drift <= opts.tol;
  return out;
}

}  // namespace abel
