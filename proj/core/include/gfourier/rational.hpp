#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfourier {

// Exact rational scalar. mpq_class keeps values canonical (reduced, sign in
// the numerator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  long n = e > 0 ? e : -e;
  Rational out(1);
  while (n) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p/q".
inline Rational rat_parse(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Gaussian rational a + bi, the exact coefficient field for the symbolic
// layer.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long v) : re(v) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational conj() const { return {re, -im}; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  std::string str() const {
    if (im == 0) return re.get_str();
    return re.get_str() + (im < 0 ? "-" : "+") + abs(Rational(im)).get_str() + "i";
  }
};

inline GaussianRational gr_i() { return {Rational(0), Rational(1)}; }

// Coefficient traits shared by the exact and double multivector backends.
template <class T>
struct CoeffOps;

template <>
struct CoeffOps<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1)}; }
  static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
  static GaussianRational conj(const GaussianRational& v) { return v.conj(); }
  static double abs2(const GaussianRational& v) {
    auto c = v.to_complex();
    return std::norm(c);
  }
};

template <>
struct CoeffOps<std::complex<double>> {
  static std::complex<double> zero() { return {}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static bool is_zero(const std::complex<double>& v) { return v == std::complex<double>{}; }
  static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
  static double abs2(const std::complex<double>& v) { return std::norm(v); }
};

}  // namespace gfourier
