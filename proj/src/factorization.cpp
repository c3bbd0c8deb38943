#include "abel/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <cstdio>
#include <string>

namespace abel {
namespace {

using cd = std::complex<double>;

// Dense univariate polynomials over Q or Q(i), ascending coefficients.
template <class F>
using Poly = std::vector<F>;

bool is_zero(const Rational& x) { return sgn(x) == 0; }
bool is_zero(const GaussianRational& x) { return x.is_zero(); }

template <class F>
void trim(Poly<F>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class F>
int deg(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, F(Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += F(a[i] * b[j]);
  }
  trim(r);
  return r;
}

// Remainder of a / b (b nonzero).
template <class F>
Poly<F> rem(Poly<F> a, const Poly<F>& b) {
  trim(a);
  const int db = deg(b);
  const F lead = b.back();
  while (deg(a) >= db && !a.empty()) {
    const F f = F(a.back() / lead);
    const int shift = deg(a) - db;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= F(f * b[static_cast<std::size_t>(j)]);
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class F>
Poly<F> monic(Poly<F> p) {
  trim(p);
  if (p.empty()) return p;
  const F lead = p.back();
  for (auto& c : p) c = F(c / lead);
  return p;
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly<F> r = rem(a, b);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

Poly<GaussianRational> laurent_shifted(const ExactTrigPoly& p) {
  Poly<GaussianRational> q = to_laurent(p).coeffs;
  trim(q);
  return q;
}

int sign_at_infinity(const Poly<Rational>& p, bool negative) {
  int s = sgn(p.back());
  if (negative && deg(p) % 2 == 1) s = -s;
  return s;
}

double inf_norm(const FloatTrigPoly& p) {
  double m = 0.0;
  for (int k = 0; k <= p.deg_or_neg(); ++k) m = std::max({m, std::abs(p.a(k)), std::abs(p.b(k))});
  return m;
}

// Real linear factor whose Laurent image has roots zeta1, zeta2 (zeta1*zeta2
// unimodular). a - i b = e^{-i theta} with theta = arg(zeta1 zeta2)/2.
LinearFactor<double> factor_from_root_pair(cd z1, cd z2) {
  const double theta = std::arg(z1 * z2) / 2.0;
  const cd e = std::polar(1.0, -theta);
  return normalized(LinearFactor<double>{std::cos(theta), std::sin(theta), -(e * (z1 + z2)).real() / 2.0});
}

struct PairedRoots {
  std::vector<std::pair<cd, cd>> pairs;
};

PairedRoots pair_roots(const Eigen::VectorXcd& roots, double band) {
  std::vector<cd> inside;
  std::vector<cd> outside;
  std::vector<cd> circle;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const double r = std::abs(roots[i]);
    if (r < 1.0 - band) inside.push_back(roots[i]);
    else if (r > 1.0 + band) outside.push_back(roots[i]);
    else circle.push_back(roots[i]);
  }
  if (inside.size() != outside.size()) {
    throw BoundaryUndecidableError("factor: roots inside and outside the unit circle do not pair up (" +
                                   std::to_string(inside.size()) + " vs " + std::to_string(outside.size()) + ")");
  }
  if (circle.size() % 2 != 0) {
    throw BoundaryUndecidableError("factor: a root lies within the unit-circle band but is unpaired");
  }
  PairedRoots out;
  std::vector<bool> used(outside.size(), false);
  for (const cd& z : inside) {
    const cd target = 1.0 / std::conj(z);
    std::size_t best = outside.size();
    for (std::size_t j = 0; j < outside.size(); ++j) {
      if (used[j]) continue;
      if (best == outside.size() || std::abs(outside[j] - target) < std::abs(outside[best] - target)) best = j;
    }
    used[best] = true;
    out.pairs.emplace_back(z, outside[best]);
  }
  // Unimodular roots: a canonical choice among non-unique factorizations.
  std::sort(circle.begin(), circle.end(), [](cd x, cd y) { return std::arg(x) < std::arg(y); });
  for (std::size_t i = 0; i + 1 < circle.size(); i += 2) out.pairs.emplace_back(circle[i], circle[i + 1]);
  return out;
}

Eigen::VectorXcd laurent_roots(const FloatTrigPoly& p, const RootOptions& opts) {
  const LaurentPoly<double> l = to_laurent(p);
  Eigen::VectorXcd q(static_cast<Eigen::Index>(l.coeffs.size()));
  for (std::size_t j = 0; j < l.coeffs.size(); ++j) q[static_cast<Eigen::Index>(j)] = l.coeffs[j];
  return polynomial_roots(q, opts);
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", r);
  return buf;
}

void require_factorable(const FloatTrigPoly& p, const char* op) {
  if (p.is_zero() || p.deg_or_neg() == 0) {
    throw PreconditionError(std::string(op) + ": input must be nonzero and non-unit (degree >= 1)");
  }
}

}  // namespace

LinearFactor<double> normalized(const LinearFactor<double>& f) {
  const double r = std::hypot(f.a, f.b);
  if (r == 0.0) throw PreconditionError("linear factor requires (a, b) != (0, 0)");
  LinearFactor<double> g{f.a / r, f.b / r, f.c / r};
  const bool flip = g.c < 0.0 || (g.c == 0.0 && (g.a < 0.0 || (g.a == 0.0 && g.b < 0.0)));
  if (flip) g = {-g.a, -g.b, -g.c};
  if (g.c == 0.0) g.c = 0.0;  // drop -0
  return g;
}

LinearFactor<Rational> normalized(const LinearFactor<Rational>& f) {
  const Rational lead = sgn(f.a) != 0 ? f.a : f.b;
  if (sgn(lead) == 0) throw PreconditionError("linear factor requires (a, b) != (0, 0)");
  return {f.a / lead, f.b / lead, f.c / lead};
}

FloatTrigPoly Factorization::expand() const {
  FloatTrigPoly prod = FloatTrigPoly::constant(unit);
  for (const auto& f : factors) prod = prod * f.to_poly();
  return prod;
}

Factorization factor(const FloatTrigPoly& p, const FactorOptions& opts) {
  require_factorable(p, "factor");
  const PairedRoots paired = pair_roots(laurent_roots(p, opts.roots), opts.circle_band);

  Factorization out;
  cd lead = 1.0;
  for (const auto& [z1, z2] : paired.pairs) {
    const LinearFactor<double> f = factor_from_root_pair(z1, z2);
    out.factors.push_back(f);
    lead *= cd(f.a, -f.b) / 2.0;
  }
  // Leading Laurent coefficients multiply; the unit matches them.
  const int n = p.deg_or_neg();
  const cd target(p.a(n) / 2.0, -p.b(n) / 2.0);
  out.unit = (target / lead).real();
  out.residual = coeff_distance(out.expand(), p) / std::max(1.0, inf_norm(p));
  if (!(out.residual <= opts.tol)) {
    throw FactorizationFailedError("factor: re-expanded residual " + format_residual(out.residual) +
                                   " exceeds tolerance");
  }
  return out;
}

Factorization factor(const ExactTrigPoly& p, const FactorOptions& opts) { return factor(to_float(p), opts); }

bool is_zero_free(const FloatTrigPoly& p, double tol) {
  if (p.is_zero()) throw PreconditionError("is_zero_free: input must be nonzero");
  if (p.deg_or_neg() == 0) return true;
  const Eigen::VectorXcd roots = laurent_roots(p, {});
  bool near_circle = false;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    if (std::abs(std::abs(roots[i]) - 1.0) <= tol) near_circle = true;
  }
  if (!near_circle) return true;
  // A sign change certifies a real zero.
  const int samples = 64 * (p.deg_or_neg() + 1);
  const double first = eval(p, 0.0);
  for (int i = 1; i <= samples; ++i) {
    const double v = eval(p, 2.0 * M_PI * i / samples);
    if ((v <= 0.0) != (first <= 0.0) || v == 0.0 || first == 0.0) return false;
  }
  throw BoundaryUndecidableError("is_zero_free: a root of q(z) lies within the unit-circle band");
}

bool is_zero_free(const ExactTrigPoly& p) {
  if (p.is_zero()) throw PreconditionError("is_zero_free: input must be nonzero");
  const int n = p.deg_or_neg();
  if (n == 0) return true;
  if (n == 1) return LinearFactor<Rational>{p.a(1), p.b(1), p.a(0)}.is_zero_free();
  // t = pi is the point the half-angle substitution misses.
  Rational at_pi = 0;
  for (int k = 0; k <= n; ++k) at_pi += (k % 2 == 0) ? p.a(k) : Rational(-p.a(k));
  if (sgn(at_pi) == 0) return false;
  return detail::count_real_roots(detail::half_angle_image(p)) == 0;
}

ExactVector coefficient_vector(const ExactTrigPoly& p, int n) {
  ExactVector v = ExactVector::Constant(2 * n + 1, Rational(0));
  for (int k = 0; k <= std::min(n, p.deg_or_neg()); ++k) {
    if (k == 0) {
      v(0) = p.a(0);
    } else {
      v(2 * k - 1) = p.a(k);
      v(2 * k) = p.b(k);
    }
  }
  return v;
}

ExactTrigPoly from_coefficient_vector(const ExactVector& v) {
  const int n = static_cast<int>(v.size() - 1) / 2;
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> b(static_cast<std::size_t>(n));
  a[0] = v(0);
  for (int k = 1; k <= n; ++k) {
    a[static_cast<std::size_t>(k)] = v(2 * k - 1);
    b[static_cast<std::size_t>(k) - 1] = v(2 * k);
  }
  return {std::move(a), std::move(b)};
}

std::optional<ExactTrigPoly> divides_exact(const ExactTrigPoly& d, const ExactTrigPoly& p) {
  if (d.is_zero()) throw PreconditionError("divides_exact: divisor must be nonzero");
  if (p.is_zero()) return ExactTrigPoly{};
  const int n = p.deg_or_neg();
  const int m = n - d.deg_or_neg();
  if (m < 0) return std::nullopt;

  // Column j holds D * (basis element j) in the (a0, a1, b1, ...) layout.
  ExactMatrix system(2 * n + 1, 2 * m + 1);
  for (int j = 0; j < 2 * m + 1; ++j) {
    const int k = (j + 1) / 2;
    const ExactTrigPoly basis = (j == 0 || j % 2 == 1) ? ExactTrigPoly::cos_term(k) : ExactTrigPoly::sin_term(k);
    system.col(j) = coefficient_vector(d * basis, n);
  }
  const auto x = exact_solve(system, coefficient_vector(p, n));
  if (!x) return std::nullopt;
  ExactTrigPoly q = from_coefficient_vector(*x);
  if (d * q != p) return std::nullopt;
  return q;
}

ExactTrigPoly gcd_zero_free(const ExactTrigPoly& p1, const ExactTrigPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw PreconditionError("gcd_zero_free: inputs must be nonzero");
  if (!is_zero_free(p1) || !is_zero_free(p2)) {
    throw PreconditionError("gcd_zero_free: input has real zeros; gcd is undefined outside zero-free elements");
  }
  return detail::trig_gcd(p1, p2);
}

bool common_irreducible_factor(const ExactTrigPoly& p, const ExactTrigPoly& q) {
  if (p.is_zero()) throw PreconditionError("common_irreducible_factor: P must be nonzero");
  if (!is_zero_free(p)) {
    throw PreconditionError("common_irreducible_factor: P has real zeros; real and complex coprimality differ");
  }
  if (q.is_zero()) return p.deg_or_neg() > 0;
  return detail::laurent_gcd_degree(p, q) > 0;
}

std::optional<cd> ComplexLinearFactor::root(double tol) const {
  // Laurent image: A z + gamma + B / z.
  const cd i(0.0, 1.0);
  const cd a_coef = (beta - i * alpha) / 2.0;
  const cd b_coef = (beta + i * alpha) / 2.0;
  const double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma), 1e-300});
  const bool no_z = std::abs(a_coef) <= tol * scale;
  const bool no_inv = std::abs(b_coef) <= tol * scale;
  if (no_z == no_inv) return std::nullopt;
  if (no_inv) return -gamma / a_coef;
  return -b_coef / gamma;
}

bool associated(const ComplexLinearFactor& f, const ComplexLinearFactor& g, double tol) {
  const auto rf = f.root();
  const auto rg = g.root();
  return rf && rg && std::abs(*rf - *rg) <= tol * std::max(1.0, std::abs(*rf));
}

cd ComplexFactorization::eval(double t) const {
  cd v = unit * std::polar(1.0, shift * t);
  for (const auto& f : factors) v *= f.eval(t);
  return v;
}

ComplexFactorization complex_factors(const FloatTrigPoly& p, const FactorOptions& opts) {
  require_factorable(p, "complex_factors");
  const LaurentPoly<double> l = to_laurent(p);
  const Eigen::VectorXcd roots = laurent_roots(p, opts.roots);

  ComplexFactorization out;
  out.unit = l[l.n];
  out.shift = -l.n;
  Eigen::VectorXcd prod = Eigen::VectorXcd::Constant(1, 1.0);
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    out.factors.push_back({cd(0.0, 1.0), 1.0, -roots[i]});
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(prod.size() + 1);
    next.head(prod.size()) -= roots[i] * prod;
    next.tail(prod.size()) += prod;
    prod = next;
  }
  double err = 0.0;
  double norm = 1.0;
  for (std::size_t j = 0; j < l.coeffs.size(); ++j) {
    err = std::max(err, std::abs(out.unit * prod[static_cast<Eigen::Index>(j)] - l.coeffs[j]));
    norm = std::max(norm, std::abs(l.coeffs[j]));
  }
  out.residual = err / norm;
  if (!(out.residual <= opts.tol)) {
    throw FactorizationFailedError("complex_factors: residual " + format_residual(out.residual) + " exceeds tolerance");
  }
  return out;
}

namespace detail {

ExactTrigPoly trig_gcd(const ExactTrigPoly& p, const ExactTrigPoly& q) {
  const Poly<GaussianRational> g = poly_gcd(laurent_shifted(p), laurent_shifted(q));
  if (deg(g) % 2 != 0) {
    throw InconsistencyError("trig_gcd: gcd of Laurent images has odd degree; both inputs have real zeros");
  }
  const int d = deg(g) / 2;
  if (d == 0) return ExactTrigPoly::constant(1);

  // g is monic with unimodular constant term; mu * z^{-d} g is real for
  // mu / conj(mu) = conj(g_0).
  const GaussianRational w = g.front().conj();
  GaussianRational mu = GaussianRational(Rational(1)) + w;
  if (mu.is_zero()) mu = GaussianRational(Rational(0), Rational(1));
  LaurentPoly<Rational> l;
  l.n = d;
  for (const auto& c : g) l.coeffs.push_back(mu * c);
  ExactTrigPoly r = from_laurent(l);
  const Rational a0 = r.a(0);
  if (sgn(a0) != 0) return Rational(1 / a0) * r;
  const Rational lead = sgn(r.a(d)) != 0 ? r.a(d) : r.b(d);
  return Rational(1 / lead) * r;
}

int laurent_gcd_degree(const ExactTrigPoly& p, const ExactTrigPoly& q) {
  return deg(poly_gcd(laurent_shifted(p), laurent_shifted(q)));
}

std::vector<Rational> half_angle_image(const ExactTrigPoly& p) {
  // (1 + u^2)^n (cos kt + i sin kt) = (1 + i u)^{2k} (1 + u^2)^{n-k}
  const int n = p.deg_or_neg();
  const Poly<GaussianRational> one_plus_iu{GaussianRational(Rational(1)), GaussianRational(Rational(0), Rational(1))};
  const Poly<GaussianRational> one_plus_u2{GaussianRational(Rational(1)), GaussianRational(Rational(0)),
                                           GaussianRational(Rational(1))};
  std::vector<Poly<GaussianRational>> pow_iu{{GaussianRational(Rational(1))}};
  std::vector<Poly<GaussianRational>> pow_u2{{GaussianRational(Rational(1))}};
  for (int k = 1; k <= 2 * n; ++k) pow_iu.push_back(mul(pow_iu.back(), one_plus_iu));
  for (int k = 1; k <= n; ++k) pow_u2.push_back(mul(pow_u2.back(), one_plus_u2));

  std::vector<Rational> h(static_cast<std::size_t>(2 * n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    const Poly<GaussianRational> e = mul(pow_iu[static_cast<std::size_t>(2 * k)], pow_u2[static_cast<std::size_t>(n - k)]);
    for (std::size_t j = 0; j < e.size(); ++j) {
      h[j] += p.a(k) * e[j].re;
      if (k > 0) h[j] += p.b(k) * e[j].im;
    }
  }
  trim(h);
  return h;
}

int count_real_roots(const std::vector<Rational>& poly) {
  Poly<Rational> p0 = poly;
  trim(p0);
  if (p0.empty()) throw PreconditionError("count_real_roots: zero polynomial");
  if (deg(p0) == 0) return 0;
  Poly<Rational> p1;
  for (std::size_t j = 1; j < p0.size(); ++j) p1.push_back(Rational(p0[j] * static_cast<long>(j)));
  std::vector<Poly<Rational>> seq{p0, p1};
  while (deg(seq.back()) > 0) {
    Poly<Rational> r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  auto changes = [&](bool negative) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
      const int v = sign_at_infinity(s, negative);
      if (v != 0 && last != 0 && v != last) ++count;
      if (v != 0) last = v;
    }
    return count;
  };
  return changes(true) - changes(false);
}

}  // namespace detail

}  // namespace abel
