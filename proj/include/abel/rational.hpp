#pragma once

// Exact scalar types: arbitrary-precision rationals and Gaussian rationals.

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace abel {

/// Always canonical (lowest terms, positive denominator) after construction
/// through the helpers below.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Rational a + b i. std::complex is only specified for floating types.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    Rational n = y.norm();
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
};

/// Scalar traits shared by the exact and binary64 coefficient fields.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Complex = GaussianRational;
  static constexpr bool exact = true;
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational half() { return Rational(1, 2); }
  static Complex make_complex(const Rational& re, const Rational& im) { return {re, im}; }
  static Rational real(const Complex& c) { return c.re; }
  static Rational imag(const Complex& c) { return c.im; }
};

template <>
struct ScalarTraits<double> {
  using Complex = std::complex<double>;
  static constexpr bool exact = false;
  static double to_double(double x) { return x; }
  static bool is_zero(double x) { return x == 0.0; }
  static double half() { return 0.5; }
  static Complex make_complex(double re, double im) { return {re, im}; }
  static double real(const Complex& c) { return c.real(); }
  static double imag(const Complex& c) { return c.imag(); }
};

}  // namespace abel

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
