#include "abel/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "abel/construction.hpp"
#include "abel/darboux.hpp"
#include "abel/json_io.hpp"
#include "abel/poincare.hpp"

namespace abel::cli {
namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Rational rational_member(const Json& doc, const char* key) {
  const Json& v = member(doc, key);
  if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a \"p/q\" string");
  return parse_rational(v.get<std::string>());
}

AbelEquation equation_from(const Json& doc) {
  return {exact_from_json(member(doc, "A"), "A"), exact_from_json(member(doc, "B"), "B")};
}

Json bound_json(const AbelEquation& eq) {
  if (eq.A.is_zero()) return nullptr;
  return rational_cycle_bound(eq);
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json cofactor_json(const Cofactor& k) { return {{"k2", to_json(k.k2)}, {"k1", to_json(k.k1)}, {"k0", to_json(k.k0)}}; }

Json report_json(const LimitCycleReport& r) {
  Json fps = Json::array();
  for (const auto& fp : r.fixed_points) {
    fps.push_back({{"x0", fp.x0},
                   {"multiplier", std::isfinite(fp.multiplier) ? Json(fp.multiplier) : Json(nullptr)},
                   {"stability", to_string(fp.stability)},
                   {"trivial", fp.trivial},
                   {"rational", fp.rational}});
  }
  Json gaps = Json::array();
  for (const auto& g : r.unscanned) gaps.push_back(Json::array({g.lo, g.hi}));
  return {{"fixed_points", fps},
          {"count_nontrivial", r.count_nontrivial},
          {"count_rational", r.count_rational},
          {"rational_lines_supplied", r.rational_lines_supplied},
          {"bound", r.bound < 0 ? Json(nullptr) : Json(r.bound)},
          {"bound_respected", r.bound_respected},
          {"unscanned", gaps},
          {"monotone", r.monotone}};
}

void write_csv(const std::string& path, const LimitCycleReport& r) {
  std::ofstream csv(path);
  if (!csv) throw PreconditionError("cannot open CSV output '" + path + "'");
  csv << "x0,x2pi\n" << std::setprecision(17);
  for (const auto& s : r.samples) {
    csv << s.x0 << ',';
    if (s.x2pi) {
      csv << *s.x2pi;
    } else {
      csv << "blowup";
    }
    csv << '\n';
  }
}

Json cmd_factor(const Json& doc, double tol, bool complex) {
  const AnyTrigPoly p = trig_poly_from_json(doc);
  FactorOptions opts;
  opts.tol = tol;
  if (complex) {
    const ComplexFactorization cf = complex_factors(p.as_float(), opts);
    Json factors = Json::array();
    for (const auto& f : cf.factors) {
      const auto root = f.root();
      factors.push_back({{"sin", complex_json(f.alpha)},
                         {"cos", complex_json(f.beta)},
                         {"const", complex_json(f.gamma)},
                         {"root", root ? complex_json(*root) : Json(nullptr)}});
    }
    return {{"unit", complex_json(cf.unit)}, {"shift", cf.shift}, {"factors", factors}, {"residual", cf.residual}};
  }
  const Factorization f = p.is_exact() ? factor(p.exact(), opts) : factor(p.as_float(), opts);
  Json factors = Json::array();
  for (const auto& lf : f.factors) {
    Json j = to_json(lf);
    j["zero_free"] = lf.is_zero_free();
    factors.push_back(std::move(j));
  }
  return {{"unit", f.unit}, {"factors", factors}, {"residual", f.residual}};
}

int cmd_verify(const Json& doc, std::ostream& out, std::ostream& err) {
  const AbelEquation eq = equation_from(doc);
  ExactTrigPoly p = exact_from_json(member(doc, "P"), "P");
  if (doc.contains("c")) {
    const Rational c = rational_member(doc, "c");
    if (sgn(c) == 0) throw PreconditionError("verify: c = 0 does not define a line c - P x = 0");
    p = Rational(1 / c) * p;
  }
  Json report = {{"bound", bound_json(eq)},
                 {"center_obstruction", center_obstruction(eq)},
                 {"cofactor", nullptr},
                 {"degree_identity", nullptr}};

  if (p.deg_or_neg() < 1) {
    report["separated_variable"] = true;
    report["invariant"] = is_invariant_line(eq, p, ConstantLine::allow);
    out << report.dump(2) << '\n';
    return ok;
  }
  const InvariantLine line(p);
  const bool invariant = is_invariant_line(eq, line.P());
  report["invariant"] = invariant;
  if (!invariant) {
    report["residual"] = to_json(invariance_residual(eq, line.P()));
    out << report.dump(2) << '\n';
    err << "CondInv violated: P P' + P B + A != 0\n";
    return precondition;
  }
  report["cofactor"] = cofactor_json(cofactor_of_line(eq, line));
  if (doc.contains("P2")) report["degree_identity"] = degree_identity(eq, line.P(), exact_from_json(doc["P2"], "P2"));
  out << report.dump(2) << '\n';
  return ok;
}

Json construct_json(const TwoCurveEquation& tc) {
  return {{"A", to_json(tc.eq.A)},
          {"B", to_json(tc.eq.B)},
          {"P1", to_json(tc.P1)},
          {"P2", to_json(tc.P2)},
          {"bound", bound_json(tc.eq)},
          {"center_obstruction", center_obstruction(tc.eq)}};
}

Json params_json(const ParamTuple& p) {
  return {{"G", to_json(p.G)}, {"Ghat", to_json(p.Ghat)}, {"S1", to_json(p.S1)}, {"k", to_json(p.k)}};
}

Json cmd_construct(const Json& doc) {
  const ParamTuple p{exact_from_json(member(doc, "G"), "G"), exact_from_json(member(doc, "Ghat"), "Ghat"),
                     exact_from_json(member(doc, "S1"), "S1"), rational_member(doc, "k")};
  return construct_json(construct_two_curves(p));
}

Json cmd_recover(const Json& doc) {
  const AbelEquation eq = equation_from(doc);
  return params_json(recover_params(exact_from_json(member(doc, "P1"), "P1"), exact_from_json(member(doc, "P2"), "P2"), eq));
}

std::vector<InvariantLine> lines_from(const Json& doc) {
  const Json& curves = member(doc, "curves");
  if (!curves.is_array()) throw ParseError("\"curves\" must be an array");
  std::vector<InvariantLine> lines;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    lines.emplace_back(exact_from_json(curves[i], "curves[" + std::to_string(i) + "]"));
  }
  return lines;
}

Json cmd_darboux(const Json& doc, const NumericCheckOptions& numeric) {
  const AbelEquation eq = equation_from(doc);
  const std::vector<InvariantLine> lines = lines_from(doc);
  const std::vector<ExactTrigPoly> ratios = curve_ratios(eq, lines);
  const std::vector<ExactVector> kernel = dependence_kernel(ratios);

  Json degrees = Json::array();
  for (const auto& r : ratios) degrees.push_back(r.is_zero() ? Json(nullptr) : Json(r.deg_or_neg()));
  Json basis = Json::array();
  for (const auto& v : kernel) basis.push_back(to_json(v));
  Json out = {{"ratios_degrees", degrees}, {"kernel_basis", basis}, {"independent", kernel.empty()}};

  if (numeric.samples > 0 && !kernel.empty()) {
    const std::vector<Rational> alphas(kernel.front().data(), kernel.front().data() + kernel.front().size());
    const DarbouxCertificate cert = first_integral(eq, lines, alphas);
    const NumericCheckResult res = verify_first_integral_numeric(cert, eq, numeric);
    Json a = Json::array();
    for (const auto& x : cert.alphas) a.push_back(to_json(x));
    out["first_integral"] = {{"alpha0", to_json(cert.alpha0)},
                             {"alphas", a},
                             {"max_drift", res.max_drift},
                             {"passed", res.passed},
                             {"samples_used", res.used},
                             {"warnings", res.warnings}};
  }
  return out;
}

Json cmd_poincare(const Json& doc, const ScanOptions& opts, const std::string& csv) {
  const AbelEquation eq = equation_from(doc);
  std::vector<ExactTrigPoly> lines;
  if (doc.contains("curves")) {
    for (const auto& l : lines_from(doc)) lines.push_back(l.P());
  }
  const LimitCycleReport r = find_limit_cycles(eq, opts, lines);
  if (!csv.empty()) write_csv(csv, r);
  return report_json(r);
}

// G = (cos t + 2)(sin t + 2), Ghat = sin t + 2, S1 = sin t + 4, k = -1.
ParamTuple example_params() {
  const auto cos_plus_2 = ExactTrigPoly::linear(1, 0, 2);
  const auto sin_plus_2 = ExactTrigPoly::linear(0, 1, 2);
  return {cos_plus_2 * sin_plus_2, sin_plus_2, ExactTrigPoly::linear(0, 1, 4), Rational(-1)};
}

int cmd_example1(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  const ParamTuple params = example_params();
  const TwoCurveEquation tc = construct_two_curves(params);
  // Listed by increasing degree: G (S1 + k Ghat) = 2 G first.
  const ExactTrigPoly& p1 = tc.P2;
  const ExactTrigPoly& p2 = tc.P1;
  const AbelEquation& eq = tc.eq;

  const bool inv1 = is_invariant_line(eq, p1);
  const bool inv2 = is_invariant_line(eq, p2);
  const bool degrees = degree_identity(eq, p1, p2);
  const bool center = center_obstruction(eq);
  const ParamTuple recovered = recover_params(tc.P1, tc.P2, eq);
  const bool round_trip = recovered == normalize(params);
  const LimitCycleReport scan = find_limit_cycles(eq, opts, {p1, p2});
  const bool cycles = scan.count_nontrivial == 2 && scan.count_rational == 2 && scan.bound_respected;

  Json report = construct_json(tc);
  report["P1"] = to_json(p1);
  report["P2"] = to_json(p2);
  report["params"] = params_json(params);
  report["recovered"] = params_json(recovered);
  report["checks"] = {{"invariant_P1", inv1},
                      {"invariant_P2", inv2},
                      {"degrees", {p1.deg_or_neg(), p2.deg_or_neg(), eq.A.deg_or_neg()}},
                      {"degree_identity", degrees},
                      {"mean_B", to_json(eq.B.a(0))},
                      {"center_obstruction", center},
                      {"round_trip", round_trip},
                      {"limit_cycles", cycles}};
  report["poincare"] = report_json(scan);
  out << report.dump(2) << '\n';

  if (!(inv1 && inv2 && degrees && center && round_trip)) {
    err << "example1: exact verification failed\n";
    return precondition;
  }
  if (!cycles) {
    err << "example1: the scan did not find exactly the two rational limit cycles\n";
    return inconclusive;
  }
  return ok;
}

void add_scan_flags(CLI::App* app, ScanOptions& scan) {
  app->add_option("--xmin", scan.x_min, "Left end of the scanned x0 interval");
  app->add_option("--xmax", scan.x_max, "Right end of the scanned x0 interval");
  app->add_option("--grid", scan.grid, "Number of grid points")->check(CLI::Range(2, 1 << 24));
  app->add_option("--rtol", scan.rtol, "Integrator relative tolerance")->check(CLI::PositiveNumber);
  app->add_option("--tol", scan.tol, "Bisection tolerance")->check(CLI::PositiveNumber);
  app->add_option("--threads", scan.threads, "Worker threads (0: all cores)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abel equations with rational limit cycles", "abel"};
  app.require_subcommand(1, 1);

  std::string input = "-";
  double factor_tol = 1e-9;
  bool complex = false;
  NumericCheckOptions numeric;
  numeric.samples = 0;
  ScanOptions scan;
  std::string csv;

  auto* factor_cmd = app.add_subcommand("factor", "Factor a trigonometric polynomial into linear factors");
  factor_cmd->add_option("input", input, "JSON file or - for stdin");
  factor_cmd->add_option("--tol", factor_tol, "Accepted residual")->check(CLI::PositiveNumber);
  factor_cmd->add_flag("--complex", complex, "Factor over C into 2n factors");

  auto* verify_cmd = app.add_subcommand("verify", "Check that 1 - P x = 0 is an invariant line");
  verify_cmd->add_option("input", input, "JSON file or - for stdin");

  auto* construct_cmd = app.add_subcommand("construct", "Build an equation with two invariant lines");
  construct_cmd->add_option("input", input, "JSON file or - for stdin");

  auto* recover_cmd = app.add_subcommand("recover", "Recover (G, Ghat, S1, k) from two invariant lines");
  recover_cmd->add_option("input", input, "JSON file or - for stdin");

  auto* darboux_cmd = app.add_subcommand("darboux", "Linear dependence of A / P_i and Darboux first integrals");
  darboux_cmd->add_option("input", input, "JSON file or - for stdin");
  darboux_cmd->add_option("--samples", numeric.samples, "Trajectories for the numeric check (0: skip)")
      ->check(CLI::NonNegativeNumber);
  darboux_cmd->add_option("--seed", numeric.seed, "Seed for the sampled initial conditions");
  darboux_cmd->add_option("--tol", numeric.tol, "Accepted relative drift")->check(CLI::PositiveNumber);

  auto* poincare_cmd = app.add_subcommand("poincare", "Scan the return map for periodic solutions");
  poincare_cmd->add_option("input", input, "JSON file or - for stdin");
  add_scan_flags(poincare_cmd, scan);
  poincare_cmd->add_option("--csv", csv, "Write (x0, x(2 pi)) pairs to this file");

  auto* example_cmd = app.add_subcommand("example1", "Rebuild and verify the two-cycle example");
  add_scan_flags(example_cmd, scan);

  std::vector<const char*> argv{"abel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_error;
  }

  try {
    auto emit = [&](const Json& j) {
      out << j.dump(2) << '\n';
      return ok;
    };
    auto doc = [&] { return parse_json(read_input(input, in)); };
    if (*factor_cmd) return emit(cmd_factor(doc(), factor_tol, complex));
    if (*verify_cmd) return cmd_verify(doc(), out, err);
    if (*construct_cmd) return emit(cmd_construct(doc()));
    if (*recover_cmd) return emit(cmd_recover(doc()));
    if (*darboux_cmd) return emit(cmd_darboux(doc(), numeric));
    if (*poincare_cmd) return emit(cmd_poincare(doc(), scan, csv));
    if (*example_cmd) return cmd_example1(scan, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return parse_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return precondition;
  } catch (const NumericError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return inconclusive;
  }
  return parse_error;
}

}  // namespace abel::cli
