#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfourier/rational.hpp"

namespace gfourier {

using Blade = std::uint32_t;

// Generator table of a real Clifford algebra: e_i^2 = -1 by default
// (signature (0,m)); bits set in positive_mask flip that generator to
// e_i^2 = +1.  That is all the Cl(p,q) support the geometric-transform
// evaluator needs.
struct Algebra {
  int dim = 0;
  Blade positive_mask = 0;

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

inline int blade_grade(Blade b) { return std::popcount(b); }

// Count of transpositions needed to merge e_A e_B into canonical order.
inline int blade_swaps(Blade a, Blade b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps;
}

// Sign of e_A * e_B: transposition parity times the squares of repeated
// generators.
inline int blade_product_sign(Blade a, Blade b, const Algebra& alg) {
  int sign = (blade_swaps(a, b) & 1) ? -1 : 1;
  Blade common = a & b;
  int neg_squares = std::popcount(common & ~alg.positive_mask);
  if (neg_squares & 1) sign = -sign;
  return sign;
}

inline std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < 32; ++i)
    if (b & (Blade(1) << i)) s += std::to_string(i + 1);
  return s;
}

template <class Coeff>
class Multivector {
 public:
  using Ops = CoeffOps<Coeff>;

  Multivector() = default;

  explicit Multivector(Algebra alg) : alg_(alg) {
    if (alg.dim < 0 || alg.dim > 12)
      throw std::invalid_argument("Multivector: dim must be in [0,12]");
    coeffs_.assign(std::size_t(1) << alg.dim, Ops::zero());
  }

  static Multivector scalar(Algebra alg, Coeff v) {
    Multivector out(alg);
    out.coeffs_[0] = std::move(v);
    return out;
  }

  static Multivector basis_blade(Algebra alg, Blade b, Coeff v = Ops::one()) {
    Multivector out(alg);
    out.at(b) = std::move(v);
    return out;
  }

  static Multivector from_vector(Algebra alg, std::span<const Coeff> comps) {
    if (static_cast<int>(comps.size()) != alg.dim)
      throw std::invalid_argument("from_vector: size mismatch");
    Multivector out(alg);
    for (int i = 0; i < alg.dim; ++i) out.at(Blade(1) << i) = comps[i];
    return out;
  }

  const Algebra& algebra() const { return alg_; }
  int dim() const { return alg_.dim; }
  std::size_t size() const { return coeffs_.size(); }

  Coeff& at(Blade b) { return coeffs_.at(b); }
  const Coeff& at(Blade b) const { return coeffs_.at(b); }
  const Coeff& operator[](Blade b) const { return coeffs_[b]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!Ops::is_zero(c)) return false;
    return true;
  }

  // Highest grade with a nonzero coefficient; -1 for the zero element.
  int max_grade() const {
    int g = -1;
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (!Ops::is_zero(coeffs_[b])) g = std::max(g, blade_grade(b));
    return g;
  }

  bool is_grade(int k) const {
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (!Ops::is_zero(coeffs_[b]) && blade_grade(b) != k) return false;
    return true;
  }

  Coeff scalar_part() const { return coeffs_.empty() ? Ops::zero() : coeffs_[0]; }

  std::vector<Coeff> vector_part() const {
    std::vector<Coeff> v(alg_.dim, Ops::zero());
    for (int i = 0; i < alg_.dim; ++i) v[i] = coeffs_[Blade(1) << i];
    return v;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out = a;
    for (Blade i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out = a;
    for (Blade i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
  }

  friend Multivector operator-(const Multivector& a) {
    Multivector out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Multivector operator*(const Coeff& s, const Multivector& a) {
    Multivector out = a;
    for (auto& c : out.coeffs_) c = s * c;
    return out;
  }

  // Geometric product under the algebra's generator table.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out(a.alg_);
    for (Blade i = 0; i < a.coeffs_.size(); ++i) {
      if (Ops::is_zero(a.coeffs_[i])) continue;
      for (Blade j = 0; j < b.coeffs_.size(); ++j) {
        if (Ops::is_zero(b.coeffs_[j])) continue;
        Coeff term = a.coeffs_[i] * b.coeffs_[j];
        if (blade_product_sign(i, j, a.alg_) < 0) term = -term;
        out.coeffs_[i ^ j] += term;
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    if (a.alg_ != b.alg_) return false;
    for (Blade i = 0; i < a.coeffs_.size(); ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
  }

  Multivector grade_project(int k) const {
    if (k < 0 || k > alg_.dim)
      throw std::invalid_argument("grade_project: grade out of range");
    Multivector out(alg_);
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (blade_grade(b) == k) out.coeffs_[b] = coeffs_[b];
    return out;
  }

  // Main anti-involution: bar(e_i) = -e_i, bar(ab) = bar(b) bar(a).
  // On a grade-k blade this is the sign (-1)^{k(k+1)/2}.
  Multivector bar() const {
    Multivector out = *this;
    for (Blade b = 0; b < coeffs_.size(); ++b) {
      int k = blade_grade(b);
      if (((k * (k + 1)) / 2) & 1) out.coeffs_[b] = -out.coeffs_[b];
    }
    return out;
  }

  // Grade involution: epsilon(e_i) = -e_i, epsilon(ab) = epsilon(a) epsilon(b).
  Multivector epsilon() const {
    Multivector out = *this;
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (blade_grade(b) & 1) out.coeffs_[b] = -out.coeffs_[b];
    return out;
  }

  // Componentwise complex conjugation (blades untouched).
  Multivector conj_coeffs() const {
    Multivector out = *this;
    for (auto& c : out.coeffs_) c = Ops::conj(c);
    return out;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& c : coeffs_) s += Ops::abs2(c);
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0;
    for (const auto& c : coeffs_) s = std::max(s, std::sqrt(Ops::abs2(c)));
    return s;
  }

 private:
  void check_same(const Multivector& other) const {
    if (alg_ != other.alg_)
      throw std::invalid_argument("Multivector: algebra mismatch");
  }

  Algebra alg_;
  std::vector<Coeff> coeffs_;
};

using MultivectorD = Multivector<std::complex<double>>;
using MultivectorQ = Multivector<GaussianRational>;

// inner = -1/2 (xy + yx) = sum x_j y_j,  wedge = 1/2 (xy - yx).
// Both arguments must be pure 1-vectors.
template <class Coeff>
std::pair<Coeff, Multivector<Coeff>> vec_inner_wedge(const Multivector<Coeff>& x,
                                                     const Multivector<Coeff>& y) {
  if (!x.is_grade(1) || !y.is_grade(1))
    throw std::invalid_argument("vec_inner_wedge: arguments must be 1-vectors");
  auto xy = x * y;
  auto yx = y * x;
  Coeff half = Coeff(1) / Coeff(2);
  Coeff inner = -half * (xy.scalar_part() + yx.scalar_part());
  auto wedge = half * (xy - yx);
  return {inner, wedge};
}

// exp(B) = cos(theta) + B sin(theta)/theta for B^2 = -theta^2 <= 0 real.
// Double backend only; the exact backend has no transcendental closure.
inline MultivectorD blade_exp(const MultivectorD& B, double tol = 1e-10) {
  auto B2 = B * B;
  std::complex<double> sq = B2.scalar_part();
  double scale = std::max(1.0, B.max_abs() * B.max_abs());
  auto off = B2 - MultivectorD::scalar(B.algebra(), sq);
  if (off.max_abs() > tol * scale || std::abs(sq.imag()) > tol * scale ||
      sq.real() > tol * scale)
    throw std::domain_error("blade_exp: B^2 is not a negative real scalar");
  double theta = std::sqrt(std::max(0.0, -sq.real()));
  double sinc = theta < 1e-4 ? 1.0 - theta * theta / 6.0 + theta * theta * theta * theta / 120.0
                             : std::sin(theta) / theta;
  return MultivectorD::scalar(B.algebra(), std::cos(theta)) +
         std::complex<double>(sinc) * B;
}

// Reflection r_alpha(x) = 1/2 alpha x alpha for a root alpha with <a,a> = 2.
// strict rejects unnormalized roots; otherwise the root is rescaled.
template <class Coeff>
Multivector<Coeff> reflect(const Multivector<Coeff>& alpha, const Multivector<Coeff>& x,
                           bool strict = true) {
  if (!alpha.is_grade(1) || !x.is_grade(1))
    throw std::invalid_argument("reflect: arguments must be 1-vectors");
  auto a2 = (alpha * alpha).scalar_part();  // = -|alpha|^2
  if constexpr (std::is_same_v<Coeff, GaussianRational>) {
    if (!(a2 == Coeff(Rational(-2)))) {
      if (strict) throw std::invalid_argument("reflect: root not normalized to <a,a>=2");
      Coeff inv = Coeff(Rational(-2)) / a2;
      Coeff half{Rational(1, 2)};
      return half * inv * (alpha * x * alpha);
    }
    Coeff half{Rational(1, 2)};
    return half * (alpha * x * alpha);
  } else {
    double n2 = -std::real(a2);
    if (std::abs(n2 - 2.0) > 1e-12) {
      if (strict) throw std::invalid_argument("reflect: root not normalized to <a,a>=2");
    }
    Coeff factor = Coeff(1.0) / Coeff(n2);
    return factor * (alpha * x * alpha);
  }
}

}  // namespace gfourier
