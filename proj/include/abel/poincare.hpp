#pragma once

// Numerical return map x0 -> x(2 pi) of the Abel equation and a fixed-point
// scanner for limit cycles.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abel/abel.hpp"

namespace abel {

/// Binary64 evaluator of the right-hand side A(t) x^3 + B(t) x^2.
class AbelField {
 public:
  explicit AbelField(const AbelEquation& eq);

  double operator()(double t, double x) const;

 private:
  std::vector<double> a_cos_, a_sin_, b_cos_, b_sin_;
};

struct IntegrateOptions {
  double rtol = 1e-10;
  double blowup = 1e6;      // |x| beyond this aborts with the blow-up marker
  double min_step = 1e-13;  // smaller steps raise StiffnessError
  bool record = false;      // keep every accepted (t, x)
};

struct Trajectory {
  std::vector<double> t;
  std::vector<double> x;
  double t_end = 0.0;
  double x_end = 0.0;
  bool blew_up = false;
  int steps = 0;
  double max_abs = 0.0;
};

/// Dormand-Prince 5(4) with per-step error <= rtol * max(|x|, |x_new|) + 1e-3 rtol.
Trajectory integrate(const AbelField& field, double x0, double t0, double t1, const IntegrateOptions& opts = {});
Trajectory integrate(const AbelEquation& eq, double x0, double t0, double t1, const IntegrateOptions& opts = {});

struct ReturnMapSample {
  double x0 = 0.0;
  std::optional<double> x2pi;  // empty on blow-up
  int steps = 0;
  double max_abs = 0.0;
};

ReturnMapSample return_map_sample(const AbelField& field, double x0, double rtol = 1e-10);

/// x(2 pi) starting from x0 at t = 0; empty on blow-up.
std::optional<double> return_map(const AbelEquation& eq, double x0, double rtol = 1e-10);

enum class Stability { stable, unstable, neutral };
std::string to_string(Stability s);

struct FixedPoint {
  double x0 = 0.0;
  double multiplier = 0.0;  // derivative of the return map, central difference
  Stability stability = Stability::neutral;
  bool trivial = false;     // x = 0
  bool rational = false;    // matches 1/P(0) for a supplied invariant line
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ScanOptions {
  double x_min = -0.05;
  double x_max = 0.2;
  int grid = 400;
  double rtol = 1e-10;
  double tol = 1e-9;           // bisection tolerance
  double dedup = 1e-8;         // roots closer than this are merged
  double multiplier_step = 1e-6;
  double match_tol = 1e-6;     // distance to 1/P(0) that counts as a rational cycle
  unsigned threads = 0;        // 0: hardware concurrency
};

struct LimitCycleReport {
  std::vector<FixedPoint> fixed_points;  // ascending x0
  int count_nontrivial = 0;
  int count_rational = 0;
  int bound = 0;
  bool bound_respected = false;
  bool rational_lines_supplied = false;
  std::vector<Interval> unscanned;        // grid runs lost to blow-up
  std::vector<ReturnMapSample> samples;   // the grid scan
  bool monotone = true;                   // return map increasing along the grid
};

/// Scan h(x0) = return_map(x0) - x0 on a uniform grid, bisect every sign
/// change, add the trivial fixed point x = 0 when in range, and classify.
/// With `lines` supplied, fixed points at 1/P(0) are flagged rational and the
/// bound is checked against the rational count; otherwise against all
/// nontrivial fixed points.
LimitCycleReport find_limit_cycles(const AbelEquation& eq, const ScanOptions& opts,
                                   const std::vector<ExactTrigPoly>& lines = {});

/// max |x' - A x^3 - B x^2| for x = 1/P on `samples` equispaced points of [0, 2 pi).
double verify_curve_numeric(const AbelEquation& eq, const ExactTrigPoly& p, int samples);

namespace detail {

/// Runs fn(i) for i in [0, n) over worker threads; results land by index.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace detail

}  // namespace abel
