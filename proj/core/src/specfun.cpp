#include "gfourier/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gfourier/util.hpp"

namespace gfourier {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients (g = 7, n = 9).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
    771.32342877765313,   -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Cplx lanczos_gamma(Cplx z) {
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * lanczos_gamma(Cplx(1.0) - z));
  }
  z -= 1.0;
  Cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Cplx(double(i)));
  Cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool near_nonpositive_int(double x) {
  return x <= 0.0 && std::abs(x - std::round(x)) < 1e-14;
}

}  // namespace

double gamma_real(double x) {
  if (near_nonpositive_int(x)) throw std::domain_error("gamma_real: pole at nonpositive integer");
  return std::tgamma(x);
}

double log_gamma_real(double x) {
  if (near_nonpositive_int(x)) throw std::domain_error("log_gamma_real: pole");
  return std::lgamma(x);
}

Cplx gamma_cplx(Cplx z) {
  if (z.imag() == 0.0) {
    if (near_nonpositive_int(z.real()))
      throw std::domain_error("gamma_cplx: pole at nonpositive integer");
    return Cplx(std::tgamma(z.real()), 0.0);
  }
  return lanczos_gamma(z);
}

std::int64_t double_factorial(int n) {
  if (n < -1) throw std::domain_error("double_factorial: n < -1");
  std::int64_t out = 1;
  for (int k = n; k >= 2; k -= 2) {
    if (out > std::numeric_limits<std::int64_t>::max() / k)
      throw std::overflow_error("double_factorial: overflow");
    out *= k;
  }
  return out;
}

namespace {

// Ascending series of Jtilde_nu(z) = sum (-1)^n (z/2)^{2n} / (n! Gamma(nu+n+1)),
// compensated summation. Safe in double when |z| is moderate; the real-axis
// wrappers switch to Miller's algorithm beyond that.
Cplx jtilde_series(double nu, Cplx z, const SpecFunContext& ctx) {
  Cplx q = 0.25 * z * z;  // (z/2)^2
  double g0 = nu + 1.0;
  Cplx term;
  if (near_nonpositive_int(g0)) {
    // 1/Gamma(nu+1) = 0 at the pole; series starts at the first finite term.
    term = Cplx(0.0);
  } else {
    term = Cplx(1.0 / std::tgamma(g0), 0.0);
  }
  // Separate tracking of the reciprocal-Gamma chain avoids the pole.
  // recip_{n} = 1/(n! Gamma(nu+n+1)); recip_{n+1} = recip_n/((n+1)(nu+n+1)),
  // with the pole handled by restarting once nu+n+1 > 0.
  double recip;
  int n0 = 0;
  if (near_nonpositive_int(g0)) {
    int jump = int(std::round(-g0)) + 1;  // first n with nu+n+1 > 0
    n0 = jump;
    double fact = 1.0;
    for (int i = 1; i <= jump; ++i) fact *= i;
    recip = 1.0 / (fact * std::tgamma(nu + jump + 1.0));
  } else {
    recip = 1.0 / std::tgamma(g0);
  }
  KahanSum<Cplx> sum;
  Cplx zpow(1.0, 0.0);
  // n < n0 contributes nothing.
  for (int n = 0; n < n0; ++n) zpow *= -q;
  Cplx current = zpow * recip;
  sum.add(current);
  double max_mag = std::abs(current);
  for (int n = n0; n < ctx.max_terms; ++n) {
    zpow *= -q;
    recip /= (double(n + 1) * (nu + n + 1.0));
    current = zpow * recip;
    sum.add(current);
    max_mag = std::max(max_mag, std::abs(current));
    if (std::abs(current) < ctx.tol * std::max(1e-300, std::abs(sum.value())) &&
        std::abs(q) < double((n + 1) * (n + 1)))
      return sum.value();
  }
  throw std::runtime_error("bessel_jtilde: series did not converge");
}

// Miller's backward recurrence for the family J_{nu+k}(x), k = 0..count-1,
// normalized with sum_k (nu'+2k) Gamma(nu'+k)/k! J_{nu'+2k}(x) = (x/2)^{nu'}
// where nu' = frac(nu) keeps the anchor order in [0,1).
std::vector<double> miller_seq(double nu, int count, double x) {
  double base = nu - std::floor(nu);
  int offset = int(std::llround(nu - base));
  int need = offset + count;
  int start = need + int(x) + 18 + int(1.8 * std::sqrt(40.0 * (x + need)));
  if (start % 2) ++start;

  std::vector<double> j(start + 2, 0.0);
  j[start + 1] = 0.0;
  j[start] = 1e-150;
  for (int k = start; k >= 1; --k) {
    j[k - 1] = (2.0 * (base + k) / x) * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > 1e250) {
      for (int i = k - 1; i <= start + 1; ++i) j[i] *= 1e-250;
    }
  }
  // Normalization sum: c_0 = Gamma(base+1), e_k = Gamma(base+k)/k!,
  // c_k = (base+2k) e_k.
  double s = std::tgamma(base + 1.0) * j[0];
  double e = std::tgamma(base + 1.0);  // e_1 = Gamma(base+1)/1!
  for (int k = 1; 2 * k <= start; ++k) {
    s += (base + 2.0 * k) * e * j[2 * k];
    e *= (base + k) / double(k + 1);
    if (std::abs(e) > 1e280) break;  // remaining terms multiply negligible j's
  }
  double scale;
  if (s == 0.0) {
    scale = 0.0;
  } else {
    scale = std::pow(x / 2.0, base) / s;
  }
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    double v = j[offset + k] * scale;
    out[k] = std::isfinite(v) ? v : 0.0;
  }
  return out;
}

constexpr double kSeriesCut = 9.0;  // |z| below which the ascending series is full-precision

}  // namespace

double bessel_j_real(double nu, double x, const SpecFunContext& ctx) {
  if (x < 0) throw std::domain_error("bessel_j_real: x < 0");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0 ? 0.0 : bessel_j(nu, Cplx(0.0), ctx).real();
  }
  if (x <= kSeriesCut || nu < 0.0 || nu > 1.5 * x + 20.0) {
    // Large order relative to argument: series has no cancellation either.
    if (x <= kSeriesCut || nu >= x) {
      Cplx jt = jtilde_series(nu, Cplx(x), ctx);
      return std::pow(x / 2.0, nu) * jt.real();
    }
  }
  if (nu < 0.0) {
    // J_{-nu} via the reflection J_{-nu} = J_nu cos(pi nu) - Y_nu sin(pi nu)
    // is out of scope; negative orders at large argument fall back to series.
    Cplx jt = jtilde_series(nu, Cplx(x), ctx);
    return std::pow(x / 2.0, nu) * jt.real();
  }
  return miller_seq(nu, 1, x)[0];
}

double bessel_jtilde_real(double nu, double x, const SpecFunContext& ctx) {
  x = std::abs(x);  // Jtilde is even
  if (x == 0.0) {
    double g = nu + 1.0;
    if (near_nonpositive_int(g)) return 0.0;
    return 1.0 / std::tgamma(g);
  }
  if (x <= kSeriesCut || nu >= x) return jtilde_series(nu, Cplx(x), ctx).real();
  return bessel_j_real(nu, x, ctx) * std::pow(x / 2.0, -nu);
}

std::vector<double> bessel_j_seq(double nu0, int count, double x, const SpecFunContext& ctx) {
  if (count <= 0) return {};
  if (x < 0) throw std::domain_error("bessel_j_seq: x < 0");
  if (x == 0.0) {
    std::vector<double> out(count, 0.0);
    for (int k = 0; k < count; ++k)
      if (nu0 + k == 0.0) out[k] = 1.0;
    return out;
  }
  if (x <= kSeriesCut || nu0 < 0.0) {
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) {
      double nu = nu0 + k;
      if (nu >= x + 8.0 || x <= kSeriesCut) {
        out[k] = std::pow(x / 2.0, nu) * jtilde_series(nu, Cplx(x), ctx).real();
      } else {
        out[k] = bessel_j_real(nu, x, ctx);
      }
    }
    return out;
  }
  return miller_seq(nu0, count, x);
}

Cplx bessel_jtilde(double nu, Cplx z, const SpecFunContext& ctx) {
  if (!(nu > -1.0 || std::abs(nu - std::round(2 * nu) / 2) < 1e-12))
    throw std::domain_error("bessel_jtilde: order out of range");
  if (std::abs(z) > 200.0)
    throw std::domain_error("bessel_jtilde: |z| > 200 unsupported");
  if (z == Cplx(0.0)) {
    double g = nu + 1.0;
    if (near_nonpositive_int(g)) return Cplx(0.0);
    return Cplx(1.0 / std::tgamma(g), 0.0);
  }
  if (z.imag() == 0.0) return Cplx(bessel_jtilde_real(nu, z.real(), ctx), 0.0);
  if (z.real() == 0.0) {
    // Jtilde(iy) = Itilde(y): all-positive series, stable at any size.
    return Cplx(bessel_itilde(nu, std::abs(z.imag()), ctx), 0.0);
  }
  return jtilde_series(nu, z, ctx);
}

Cplx bessel_j(double nu, Cplx z, const SpecFunContext& ctx) {
  Cplx jt = bessel_jtilde(nu, z, ctx);
  if (z == Cplx(0.0)) {
    if (nu == 0.0) return Cplx(1.0);
    if (nu > 0.0) return Cplx(0.0);
    throw std::domain_error("bessel_j: singular at z=0 for negative order");
  }
  if (nu == std::round(nu)) {
    // Integer order: (z/2)^nu is single-valued.
    Cplx p(1.0, 0.0);
    Cplx h = 0.5 * z;
    int n = int(std::llround(std::abs(nu)));
    for (int i = 0; i < n; ++i) p *= h;
    if (nu < 0) p = Cplx(1.0) / p;
    return p * jt;
  }
  return std::pow(0.5 * z, Cplx(nu)) * jt;
}

double bessel_itilde(double nu, double x, const SpecFunContext& ctx) {
  x = std::abs(x);
  double q = 0.25 * x * x;
  double g = nu + 1.0;
  double recip = near_nonpositive_int(g) ? 0.0 : 1.0 / std::tgamma(g);
  int n0 = 0;
  if (near_nonpositive_int(g)) {
    int jump = int(std::round(-g)) + 1;
    n0 = jump;
    double fact = 1.0;
    for (int i = 1; i <= jump; ++i) fact *= i;
    recip = 1.0 / (fact * std::tgamma(nu + jump + 1.0));
  }
  double qn = 1.0;
  for (int n = 0; n < n0; ++n) qn *= q;
  double term = qn * recip, sum = term;
  for (int n = n0; n < ctx.max_terms; ++n) {
    qn *= q;
    recip /= (double(n + 1) * (nu + n + 1.0));
    term = qn * recip;
    sum += term;
    if (term < ctx.tol * sum && q < double((n + 1) * (n + 1))) return sum;
  }
  throw std::runtime_error("bessel_itilde: series did not converge");
}

double bessel_i(double nu, double x, const SpecFunContext& ctx) {
  return std::pow(x / 2.0, nu) * bessel_itilde(nu, x, ctx);
}

double chebyshev_t(int k, double w) {
  if (k == 0) return 1.0;
  double tm = 1.0, t = w;
  for (int i = 2; i <= k; ++i) {
    double tn = 2.0 * w * t - tm;
    tm = t;
    t = tn;
  }
  return t;
}

double chebyshev_u(int k, double w) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  double um = 1.0, u = 2.0 * w;
  for (int i = 2; i <= k; ++i) {
    double un = 2.0 * w * u - um;
    um = u;
    u = un;
  }
  return u;
}

double gegenbauer(int k, double lambda, double w, GegenbauerMode mode) {
  if (k < 0) throw std::domain_error("gegenbauer: k < 0");
  if (mode == GegenbauerMode::limit_scaled) {
    if (k == 0) return 1.0;
    return 2.0 * chebyshev_t(k, w);
  }
  if (k == 0) return 1.0;
  if (lambda <= 0.0)
    throw std::domain_error("gegenbauer: standard mode needs lambda > 0 for k >= 1");
  double cm = 1.0;
  double c = 2.0 * lambda * w;
  for (int i = 2; i <= k; ++i) {
    double cn = (2.0 * w * (i + lambda - 1.0) * c - (i + 2.0 * lambda - 2.0) * cm) / double(i);
    cm = c;
    c = cn;
  }
  return c;
}

std::vector<double> gegenbauer_seq(int kmax, double lambda, double w) {
  std::vector<double> out(kmax + 1);
  out[0] = 1.0;
  if (kmax >= 1) out[1] = 2.0 * lambda * w;
  for (int i = 2; i <= kmax; ++i)
    out[i] = (2.0 * w * (i + lambda - 1.0) * out[i - 1] -
              (i + 2.0 * lambda - 2.0) * out[i - 2]) /
             double(i);
  return out;
}

std::vector<double> gegenbauer_limit_seq(int kmax, double w) {
  std::vector<double> out(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    out[k] = k == 0 ? 1.0 : 2.0 * chebyshev_t(k, w);
  return out;
}

double laguerre(int j, double alpha, double t) {
  if (j < 0) throw std::domain_error("laguerre: j < 0");
  if (j == 0) return 1.0;
  double lm = 1.0;
  double l = 1.0 + alpha - t;
  for (int i = 1; i < j; ++i) {
    double ln = ((2.0 * i + alpha + 1.0 - t) * l - (i + alpha) * lm) / double(i + 1);
    lm = l;
    l = ln;
  }
  return l;
}

}  // namespace gfourier
