#pragma once

// Ring of real trigonometric polynomials
//
//   P(t) = sum_{k=0}^{n} a_k cos(kt) + b_k sin(kt)
//
// over either exact rationals or binary64. Values are immutable after
// construction; every operation is a pure free function.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "abel/errors.hpp"
#include "abel/rational.hpp"

namespace abel {

template <class Scalar>
using CoeffVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
class TrigPoly {
 public:
  using scalar_type = Scalar;
  using Traits = ScalarTraits<Scalar>;

  /// The zero polynomial.
  TrigPoly() = default;

  /// cos_coeffs = (a_0..a_n), sin_coeffs = (b_1..b_m). Lengths may differ;
  /// the result is canonicalized.
  TrigPoly(std::vector<Scalar> cos_coeffs, std::vector<Scalar> sin_coeffs) {
    const std::size_t n = std::max(cos_coeffs.empty() ? 0 : cos_coeffs.size() - 1, sin_coeffs.size());
    cos_.resize(static_cast<Eigen::Index>(n + 1));
    sin_.resize(static_cast<Eigen::Index>(n + 1));
    for (Eigen::Index k = 0; k <= static_cast<Eigen::Index>(n); ++k) {
      cos_[k] = Scalar(0);
      sin_[k] = Scalar(0);
    }
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) cos_[static_cast<Eigen::Index>(k)] = cos_coeffs[k];
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) sin_[static_cast<Eigen::Index>(k + 1)] = sin_coeffs[k];
    canonicalize();
  }

  static TrigPoly constant(const Scalar& c) { return TrigPoly({c}, {}); }

  /// a cos t + b sin t + c
  static TrigPoly linear(const Scalar& a, const Scalar& b, const Scalar& c) { return TrigPoly({c, a}, {b}); }

  static TrigPoly cos_term(int k, const Scalar& coeff = Scalar(1)) {
    std::vector<Scalar> a(static_cast<std::size_t>(k) + 1, Scalar(0));
    a[static_cast<std::size_t>(k)] = coeff;
    return TrigPoly(std::move(a), {});
  }

  static TrigPoly sin_term(int k, const Scalar& coeff = Scalar(1)) {
    std::vector<Scalar> b(static_cast<std::size_t>(k), Scalar(0));
    if (k >= 1) b[static_cast<std::size_t>(k) - 1] = coeff;
    return TrigPoly({}, std::move(b));
  }

  bool is_zero() const { return cos_.size() == 0; }

  /// Largest k with (a_k, b_k) != (0, 0); empty for the zero polynomial.
  std::optional<int> degree() const {
    if (is_zero()) return std::nullopt;
    return static_cast<int>(cos_.size()) - 1;
  }

  /// Degree for a polynomial known to be nonzero; -1 for zero.
  int deg_or_neg() const { return static_cast<int>(cos_.size()) - 1; }

  Scalar a(int k) const { return k < cos_.size() ? Scalar(cos_[k]) : Scalar(0); }
  Scalar b(int k) const { return (k >= 1 && k < sin_.size()) ? Scalar(sin_[k]) : Scalar(0); }

  std::vector<Scalar> cos_coeffs() const { return {cos_.data(), cos_.data() + cos_.size()}; }
  std::vector<Scalar> sin_coeffs() const {
    if (sin_.size() <= 1) return {};
    return {sin_.data() + 1, sin_.data() + sin_.size()};
  }

  friend bool operator==(const TrigPoly& p, const TrigPoly& q) {
    if (p.cos_.size() != q.cos_.size()) return false;
    for (Eigen::Index k = 0; k < p.cos_.size(); ++k) {
      if (!(p.cos_[k] == q.cos_[k]) || !(p.sin_[k] == q.sin_[k])) return false;
    }
    return true;
  }
  friend bool operator!=(const TrigPoly& p, const TrigPoly& q) { return !(p == q); }

  friend TrigPoly operator+(const TrigPoly& p, const TrigPoly& q) { return combine(p, q, Scalar(1)); }
  friend TrigPoly operator-(const TrigPoly& p, const TrigPoly& q) { return combine(p, q, Scalar(-1)); }
  friend TrigPoly operator-(const TrigPoly& p) { return Scalar(-1) * p; }

  friend TrigPoly operator*(const Scalar& s, const TrigPoly& p) {
    TrigPoly r = p;
    for (Eigen::Index k = 0; k < r.cos_.size(); ++k) {
      r.cos_[k] = Scalar(s * r.cos_[k]);
      r.sin_[k] = Scalar(s * r.sin_[k]);
    }
    r.canonicalize();
    return r;
  }
  friend TrigPoly operator*(const TrigPoly& p, const Scalar& s) { return s * p; }

  // Product-to-sum:
  //   cos j cos k = (cos(j-k) + cos(j+k)) / 2
  //   sin j sin k = (cos(j-k) - cos(j+k)) / 2
  //   cos j sin k = (sin(j+k) - sin(j-k)) / 2
  friend TrigPoly operator*(const TrigPoly& p, const TrigPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const int n = p.deg_or_neg() + q.deg_or_neg();
    std::vector<Scalar> ac(static_cast<std::size_t>(n) + 1, Scalar(0));
    std::vector<Scalar> bs(static_cast<std::size_t>(n) + 1, Scalar(0));
    const Scalar half = Traits::half();
    auto add_cos = [&](int k, const Scalar& v) { ac[static_cast<std::size_t>(std::abs(k))] += v; };
    auto add_sin = [&](int k, const Scalar& v) {
      if (k > 0) bs[static_cast<std::size_t>(k)] += v;
      else if (k < 0) bs[static_cast<std::size_t>(-k)] -= v;
    };
    for (int j = 0; j <= p.deg_or_neg(); ++j) {
      const Scalar pa = p.cos_[j];
      const Scalar pb = p.sin_[j];
      for (int k = 0; k <= q.deg_or_neg(); ++k) {
        const Scalar qa = q.cos_[k];
        const Scalar qb = q.sin_[k];
        if (!Traits::is_zero(pa) && !Traits::is_zero(qa)) {
          const Scalar v = pa * qa * half;
          add_cos(j - k, v);
          add_cos(j + k, v);
        }
        if (!Traits::is_zero(pb) && !Traits::is_zero(qb)) {
          const Scalar v = pb * qb * half;
          add_cos(j - k, v);
          add_cos(j + k, -v);
        }
        if (!Traits::is_zero(pa) && !Traits::is_zero(qb)) {
          // cos j sin k
          const Scalar v = pa * qb * half;
          add_sin(j + k, v);
          add_sin(j - k, -v);
        }
        if (!Traits::is_zero(pb) && !Traits::is_zero(qa)) {
          // sin j cos k
          const Scalar v = pb * qa * half;
          add_sin(j + k, v);
          add_sin(j - k, v);
        }
      }
    }
    bs.erase(bs.begin());
    return TrigPoly(std::move(ac), std::move(bs));
  }

  TrigPoly& operator+=(const TrigPoly& q) { return *this = *this + q; }
  TrigPoly& operator-=(const TrigPoly& q) { return *this = *this - q; }
  TrigPoly& operator*=(const TrigPoly& q) { return *this = *this * q; }

 private:
  static TrigPoly combine(const TrigPoly& p, const TrigPoly& q, const Scalar& sign) {
    const Eigen::Index n = std::max(p.cos_.size(), q.cos_.size());
    TrigPoly r;
    r.cos_.resize(n);
    r.sin_.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Scalar pa = k < p.cos_.size() ? Scalar(p.cos_[k]) : Scalar(0);
      const Scalar pb = k < p.sin_.size() ? Scalar(p.sin_[k]) : Scalar(0);
      const Scalar qa = k < q.cos_.size() ? Scalar(q.cos_[k]) : Scalar(0);
      const Scalar qb = k < q.sin_.size() ? Scalar(q.sin_[k]) : Scalar(0);
      r.cos_[k] = Scalar(pa + sign * qa);
      r.sin_[k] = Scalar(pb + sign * qb);
    }
    r.canonicalize();
    return r;
  }

  // Strip trailing zero (a_k, b_k) pairs; sin_[0] is always 0.
  void canonicalize() {
    if (sin_.size() > 0) sin_[0] = Scalar(0);
    Eigen::Index n = cos_.size();
    while (n > 0 && Traits::is_zero(cos_[n - 1]) && Traits::is_zero(sin_[n - 1])) --n;
    cos_.conservativeResize(n);
    sin_.conservativeResize(n);
  }

  CoeffVector<Scalar> cos_;  // a_0..a_n
  CoeffVector<Scalar> sin_;  // 0, b_1..b_n
};

using ExactTrigPoly = TrigPoly<Rational>;
using FloatTrigPoly = TrigPoly<double>;

template <class Scalar>
std::optional<int> degree(const TrigPoly<Scalar>& p) {
  return p.degree();
}

/// a_k cos(kt) -> -k a_k sin(kt),  b_k sin(kt) -> k b_k cos(kt)
template <class Scalar>
TrigPoly<Scalar> derivative(const TrigPoly<Scalar>& p) {
  const int n = p.deg_or_neg();
  if (n <= 0) return {};
  std::vector<Scalar> a(static_cast<std::size_t>(n) + 1, Scalar(0));
  std::vector<Scalar> b(static_cast<std::size_t>(n), Scalar(0));
  for (int k = 1; k <= n; ++k) {
    a[static_cast<std::size_t>(k)] = Scalar(Scalar(k) * p.b(k));
    b[static_cast<std::size_t>(k) - 1] = Scalar(Scalar(-k) * p.a(k));
  }
  return TrigPoly<Scalar>(std::move(a), std::move(b));
}

/// Numeric value at t. Exact coefficients are rounded to binary64 term by term.
template <class Scalar>
double eval(const TrigPoly<Scalar>& p, double t) {
  const int n = p.deg_or_neg();
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double kt = static_cast<double>(k) * t;
    sum += ScalarTraits<Scalar>::to_double(p.a(k)) * std::cos(kt);
    if (k > 0) sum += ScalarTraits<Scalar>::to_double(p.b(k)) * std::sin(kt);
  }
  return sum;
}

template <class Scalar>
Scalar constant_term(const TrigPoly<Scalar>& p) {
  return p.a(0);
}

/// Integral over one period, kept as a0 * (2 pi) with the 2 pi factor symbolic.
template <class Scalar>
struct MeanIntegral {
  Scalar a0;
  bool is_zero() const { return ScalarTraits<Scalar>::is_zero(a0); }
  double value() const { return ScalarTraits<Scalar>::to_double(a0) * 2.0 * M_PI; }
};

template <class Scalar>
MeanIntegral<Scalar> mean_integral(const TrigPoly<Scalar>& p) {
  return {p.a(0)};
}

/// Explicit conversion to the binary64 field.
inline FloatTrigPoly to_float(const ExactTrigPoly& p) {
  std::vector<double> a;
  std::vector<double> b;
  for (const auto& x : p.cos_coeffs()) a.push_back(x.get_d());
  for (const auto& x : p.sin_coeffs()) b.push_back(x.get_d());
  return FloatTrigPoly(std::move(a), std::move(b));
}

inline FloatTrigPoly to_float(const FloatTrigPoly& p) { return p; }

/// Max absolute coefficient difference, in binary64.
template <class S1, class S2>
double coeff_distance(const TrigPoly<S1>& p, const TrigPoly<S2>& q) {
  const int n = std::max(p.deg_or_neg(), q.deg_or_neg());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) {
    d = std::max(d, std::abs(ScalarTraits<S1>::to_double(p.a(k)) - ScalarTraits<S2>::to_double(q.a(k))));
    d = std::max(d, std::abs(ScalarTraits<S1>::to_double(p.b(k)) - ScalarTraits<S2>::to_double(q.b(k))));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Laurent embedding: cos kt = (z^k + z^-k)/2, sin kt = (z^k - z^-k)/(2i), z = e^{it}.

template <class Scalar>
struct LaurentPoly {
  using Complex = typename ScalarTraits<Scalar>::Complex;

  int n = -1;                  // coefficients span k = -n..n; -1 for zero
  std::vector<Complex> coeffs; // coeffs[k + n] = c_k

  const Complex& operator[](int k) const { return coeffs[static_cast<std::size_t>(k + n)]; }
  Complex& operator[](int k) { return coeffs[static_cast<std::size_t>(k + n)]; }

  /// c_{-k} == conj(c_k) for every k, i.e. the polynomial is real on |z| = 1.
  bool is_real_representable() const {
    for (int k = 0; k <= n; ++k) {
      const Complex& x = (*this)[k];
      const Complex& y = (*this)[-k];
      using T = ScalarTraits<Scalar>;
      if (!(T::real(x) == T::real(y)) || !(T::imag(x) == -T::imag(y))) return false;
    }
    return true;
  }

  /// Coefficients of z^n * L(z) in ascending powers (a polynomial of degree 2n).
  std::vector<Complex> shifted() const { return coeffs; }
};

/// c_0 = a_0, c_k = (a_k - i b_k)/2, c_{-k} = (a_k + i b_k)/2.
template <class Scalar>
LaurentPoly<Scalar> to_laurent(const TrigPoly<Scalar>& p) {
  using T = ScalarTraits<Scalar>;
  LaurentPoly<Scalar> l;
  l.n = p.deg_or_neg();
  if (l.n < 0) return l;
  l.coeffs.resize(static_cast<std::size_t>(2 * l.n + 1));
  const Scalar half = T::half();
  l[0] = T::make_complex(p.a(0), Scalar(0));
  for (int k = 1; k <= l.n; ++k) {
    const Scalar re = p.a(k) * half;
    const Scalar im = p.b(k) * half;
    l[k] = T::make_complex(re, Scalar(-im));
    l[-k] = T::make_complex(re, im);
  }
  return l;
}

/// Inverse of to_laurent. Throws RepresentabilityError unless c_{-k} = conj(c_k).
template <class Scalar>
TrigPoly<Scalar> from_laurent(const LaurentPoly<Scalar>& l) {
  using T = ScalarTraits<Scalar>;
  if (l.n < 0) return {};
  if (!l.is_real_representable()) {
    throw RepresentabilityError("from_laurent: coefficients are not conjugate-symmetric (c_{-k} != conj(c_k))");
  }
  std::vector<Scalar> a(static_cast<std::size_t>(l.n) + 1);
  std::vector<Scalar> b(static_cast<std::size_t>(l.n));
  a[0] = T::real(l[0]);
  for (int k = 1; k <= l.n; ++k) {
    // a_k = c_k + c_-k, b_k = i (c_k - c_-k)
    a[static_cast<std::size_t>(k)] = Scalar(T::real(l[k]) + T::real(l[-k]));
    b[static_cast<std::size_t>(k) - 1] = Scalar(T::imag(l[-k]) - T::imag(l[k]));
  }
  return TrigPoly<Scalar>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Runtime-tagged coefficient field, used at I/O boundaries where the field is
// only known after parsing.

using Coefficient = std::variant<Rational, double>;

class AnyTrigPoly {
 public:
  AnyTrigPoly(ExactTrigPoly p) : value_(std::move(p)) {}
  AnyTrigPoly(FloatTrigPoly p) : value_(std::move(p)) {}

  bool is_exact() const { return std::holds_alternative<ExactTrigPoly>(value_); }
  const ExactTrigPoly& exact() const;
  FloatTrigPoly as_float() const;
  std::optional<int> degree() const;

  friend AnyTrigPoly add(const AnyTrigPoly& p, const AnyTrigPoly& q);
  friend AnyTrigPoly mul(const AnyTrigPoly& p, const AnyTrigPoly& q);

 private:
  std::variant<ExactTrigPoly, FloatTrigPoly> value_;
};

}  // namespace abel
