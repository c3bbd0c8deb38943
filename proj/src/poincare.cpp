#include "abel/poincare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace abel {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

void split(const ExactTrigPoly& p, std::vector<double>& a, std::vector<double>& b) {
  const int n = std::max(p.deg_or_neg(), 0);
  a.assign(static_cast<std::size_t>(n) + 1, 0.0);
  b.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= p.deg_or_neg(); ++k) {
    a[static_cast<std::size_t>(k)] = p.a(k).get_d();
    b[static_cast<std::size_t>(k)] = p.b(k).get_d();
  }
}

Stability classify(double multiplier) {
  constexpr double band = 1e-5;
  if (!std::isfinite(multiplier) || std::abs(multiplier - 1.0) <= band) return Stability::neutral;
  return multiplier < 1.0 ? Stability::stable : Stability::unstable;
}

}  // namespace

AbelField::AbelField(const AbelEquation& eq) {
  split(eq.A, a_cos_, a_sin_);
  split(eq.B, b_cos_, b_sin_);
}

double AbelField::operator()(double t, double x) const {
  const std::size_t n = std::max(a_cos_.size(), b_cos_.size());
  const double c1 = std::cos(t);
  const double s1 = std::sin(t);
  double ck = 1.0;
  double sk = 0.0;
  double a = 0.0;
  double b = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < a_cos_.size()) a += a_cos_[k] * ck + a_sin_[k] * sk;
    if (k < b_cos_.size()) b += b_cos_[k] * ck + b_sin_[k] * sk;
    const double next_c = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = next_c;
  }
  return x * x * (a * x + b);
}

Trajectory integrate(const AbelField& f, double x0, double t0, double t1, const IntegrateOptions& opts) {
  if (!(opts.rtol > 0.0)) throw PreconditionError("integrate: rtol must be positive");
  Trajectory out;
  double t = t0;
  double x = x0;
  out.max_abs = std::abs(x0);
  if (opts.record) {
    out.t.push_back(t);
    out.x.push_back(x);
  }
  const double span = t1 - t0;
  const double atol = 1e-3 * opts.rtol;
  double h = span / 100.0;
  double k1 = f(t, x);

  while (t < t1) {
    if (t + h > t1) h = t1 - t;
    const double k2 = f(t + c2 * h, x + h * a21 * k1);
    const double k3 = f(t + c3 * h, x + h * (a31 * k1 + a32 * k2));
    const double k4 = f(t + c4 * h, x + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = f(t + c5 * h, x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = f(t + h, x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double x_new = x + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    const double k7 = f(t + h, x_new);
    const double err_abs = std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
    const double scale = atol + opts.rtol * std::max(std::abs(x), std::abs(x_new));
    const double err = err_abs / scale;

    if (std::isfinite(err) && std::isfinite(x_new) && err <= 1.0) {
      t = (h == t1 - t) ? t1 : t + h;
      x = x_new;
      k1 = k7;
      ++out.steps;
      out.max_abs = std::max(out.max_abs, std::abs(x));
      if (opts.record) {
        out.t.push_back(t);
        out.x.push_back(x);
      }
      if (std::abs(x) > opts.blowup) {
        out.blew_up = true;
        break;
      }
      const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(fac, 0.2, 5.0);
    } else {
      const double fac = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.25;
      h *= std::min(fac, 0.9);
      if (h < opts.min_step) {
        // Runaway growth shrinks the step before |x| reaches the threshold.
        if (std::abs(x) > std::sqrt(opts.blowup)) {
          out.blew_up = true;
          break;
        }
        throw StiffnessError("integrate: step size underflow at t = " + std::to_string(t));
      }
    }
  }
  out.t_end = t;
  out.x_end = x;
  return out;
}

Trajectory integrate(const AbelEquation& eq, double x0, double t0, double t1, const IntegrateOptions& opts) {
  return integrate(AbelField(eq), x0, t0, t1, opts);
}

ReturnMapSample return_map_sample(const AbelField& field, double x0, double rtol) {
  IntegrateOptions opts;
  opts.rtol = rtol;
  const Trajectory tr = integrate(field, x0, 0.0, 2.0 * M_PI, opts);
  ReturnMapSample s;
  s.x0 = x0;
  s.steps = tr.steps;
  s.max_abs = tr.max_abs;
  if (!tr.blew_up) s.x2pi = tr.x_end;
  return s;
}

std::optional<double> return_map(const AbelEquation& eq, double x0, double rtol) {
  return return_map_sample(AbelField(eq), x0, rtol).x2pi;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable:
      return "stable";
    case Stability::unstable:
      return "unstable";
    case Stability::neutral:
      return "neutral";
  }
  return "neutral";
}

LimitCycleReport find_limit_cycles(const AbelEquation& eq, const ScanOptions& opts,
                                   const std::vector<ExactTrigPoly>& lines) {
  if (!(opts.x_min < opts.x_max)) throw PreconditionError("find_limit_cycles: x_min < x_max required");
  if (opts.grid < 2) throw PreconditionError("find_limit_cycles: grid >= 2 required");

  const AbelField field(eq);
  LimitCycleReport report;
  const auto n = static_cast<std::size_t>(opts.grid);
  report.samples.resize(n);
  const double dx = (opts.x_max - opts.x_min) / static_cast<double>(opts.grid - 1);
  detail::parallel_for(n, opts.threads, [&](std::size_t i) {
    const double x0 = (i + 1 == n) ? opts.x_max : opts.x_min + static_cast<double>(i) * dx;
    report.samples[i] = return_map_sample(field, x0, opts.rtol);
  });

  // Blow-up runs and monotonicity.
  std::optional<std::size_t> run_start;
  const ReturnMapSample* last_ok = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = report.samples[i];
    if (!s.x2pi) {
      if (!run_start) run_start = i;
      continue;
    }
    if (run_start) {
      report.unscanned.push_back({report.samples[*run_start].x0, report.samples[i - 1].x0});
      run_start.reset();
    }
    if (last_ok != nullptr && !(*s.x2pi > *last_ok->x2pi)) report.monotone = false;
    last_ok = &s;
  }
  if (run_start) report.unscanned.push_back({report.samples[*run_start].x0, report.samples[n - 1].x0});

  // Sign-change brackets of h(x) = P(x) - x.
  std::vector<Interval> brackets;
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& s = report.samples[i];
    const auto& u = report.samples[i + 1];
    if (!s.x2pi || !u.x2pi) continue;
    const double hs = *s.x2pi - s.x0;
    const double hu = *u.x2pi - u.x0;
    if (hs == 0.0) roots.push_back(s.x0);
    if ((hs < 0.0 && hu > 0.0) || (hs > 0.0 && hu < 0.0)) brackets.push_back({s.x0, u.x0});
  }
  if (const auto& s = report.samples[n - 1]; s.x2pi && *s.x2pi == s.x0) roots.push_back(s.x0);

  std::vector<std::optional<double>> refined(brackets.size());
  detail::parallel_for(brackets.size(), opts.threads, [&](std::size_t b) {
    double lo = brackets[b].lo;
    double hi = brackets[b].hi;
    auto h = [&](double x) -> std::optional<double> {
      const auto r = return_map_sample(field, x, opts.rtol).x2pi;
      if (!r) return std::nullopt;
      return *r - x;
    };
    auto h_lo = h(lo);
    if (!h_lo) return;
    while (hi - lo > opts.tol) {
      const double mid = 0.5 * (lo + hi);
      const auto h_mid = h(mid);
      if (!h_mid) return;
      if (*h_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((*h_mid < 0.0) == (*h_lo < 0.0)) {
        lo = mid;
        h_lo = h_mid;
      } else {
        hi = mid;
      }
    }
    refined[b] = 0.5 * (lo + hi);
  });
  for (const auto& r : refined) {
    if (r) roots.push_back(*r);
  }
  const bool zero_in_range = opts.x_min <= 0.0 && 0.0 <= opts.x_max;
  if (zero_in_range) roots.push_back(0.0);

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (std::abs(r) <= opts.dedup && zero_in_range) r = 0.0;
    if (!unique.empty() && std::abs(r - unique.back()) <= opts.dedup) {
      if (r == 0.0) unique.back() = 0.0;
      continue;
    }
    unique.push_back(r);
  }

  report.fixed_points.resize(unique.size());
  detail::parallel_for(unique.size(), opts.threads, [&](std::size_t i) {
    FixedPoint& fp = report.fixed_points[i];
    fp.x0 = unique[i];
    fp.trivial = unique[i] == 0.0;
    const double step = opts.multiplier_step;
    const auto plus = return_map_sample(field, fp.x0 + step, opts.rtol).x2pi;
    const auto minus = return_map_sample(field, fp.x0 - step, opts.rtol).x2pi;
    fp.multiplier = (plus && minus) ? (*plus - *minus) / (2.0 * step) : std::nan("");
    fp.stability = classify(fp.multiplier);
  });

  report.rational_lines_supplied = !lines.empty();
  for (const auto& p : lines) {
    const double p0 = eval(p, 0.0);
    if (p0 == 0.0) continue;
    for (auto& fp : report.fixed_points) {
      if (!fp.trivial && std::abs(fp.x0 - 1.0 / p0) <= opts.match_tol) fp.rational = true;
    }
  }
  for (const auto& fp : report.fixed_points) {
    if (!fp.trivial) ++report.count_nontrivial;
    if (fp.rational) ++report.count_rational;
  }
  if (eq.A.is_zero()) {
    report.bound = -1;  // separated-variable case: no bound applies
    report.bound_respected = false;
  } else {
    report.bound = rational_cycle_bound(eq);
    const int counted = report.rational_lines_supplied ? report.count_rational : report.count_nontrivial;
    report.bound_respected = counted <= report.bound;
  }
  return report;
}

double verify_curve_numeric(const AbelEquation& eq, const ExactTrigPoly& p, int samples) {
  if (samples < 1) throw PreconditionError("verify_curve_numeric: samples >= 1 required");
  const ExactTrigPoly dp = derivative(p);
  const AbelField field(eq);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * M_PI * i / samples;
    const double pv = eval(p, t);
    if (pv == 0.0) throw PreconditionError("verify_curve_numeric: P vanishes on the sample grid");
    const double x = 1.0 / pv;
    const double dx = -eval(dp, t) / (pv * pv);
    worst = std::max(worst, std::abs(dx - field(t, x)));
  }
  return worst;
}

namespace detail {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

}  // namespace abel
