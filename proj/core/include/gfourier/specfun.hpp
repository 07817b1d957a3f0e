#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace gfourier {

using Cplx = std::complex<double>;

struct SpecFunContext {
  double tol = 1e-13;   // target relative tolerance
  int max_terms = 500;  // series cutoff
};

inline const SpecFunContext& default_specfun_context() {
  static const SpecFunContext ctx{};
  return ctx;
}

// Gamma function. Real arguments use the C library; complex ones a Lanczos
// approximation with the reflection formula, good to ~1e-13 relative.
double gamma_real(double x);
Cplx gamma_cplx(Cplx z);
double log_gamma_real(double x);

// n!! with (-1)!! = 0!! = 1. Throws on n < -1 or int64 overflow.
std::int64_t double_factorial(int n);

// Normalized Bessel function Jtilde_nu(z) = (z/2)^{-nu} J_nu(z), entire in z.
// Jtilde_nu(0) = 1/Gamma(nu+1).
Cplx bessel_jtilde(double nu, Cplx z, const SpecFunContext& ctx = default_specfun_context());

// J_nu(z) = (z/2)^nu Jtilde_nu(z), principal branch of the power for
// non-integer nu.
Cplx bessel_j(double nu, Cplx z, const SpecFunContext& ctx = default_specfun_context());

// Real-argument fast path (x >= 0); uses Miller's backward recurrence above
// the series range so small orders stay accurate at large argument.
double bessel_j_real(double nu, double x, const SpecFunContext& ctx = default_specfun_context());
double bessel_jtilde_real(double nu, double x, const SpecFunContext& ctx = default_specfun_context());

// J_{nu0}(x), J_{nu0+1}(x), ..., J_{nu0+count-1}(x) in one backward pass.
std::vector<double> bessel_j_seq(double nu0, int count, double x,
                                 const SpecFunContext& ctx = default_specfun_context());

// Modified variants: Itilde_nu(x) = (x/2)^{-nu} I_nu(x) (all-positive series),
// I_nu(x) = (x/2)^nu Itilde_nu(x).
double bessel_itilde(double nu, double x, const SpecFunContext& ctx = default_specfun_context());
double bessel_i(double nu, double x, const SpecFunContext& ctx = default_specfun_context());

enum class GegenbauerMode {
  standard,      // C_k^lambda(w), lambda > 0 (or k = 0)
  limit_scaled,  // lim_{lambda->0} ((k+lambda)/lambda) C_k^lambda(w) = 2 T_k(w), k>=1; 1 for k=0
};

double gegenbauer(int k, double lambda, double w,
                  GegenbauerMode mode = GegenbauerMode::standard);

// C_0..C_K of one Gegenbauer family by the three-term recurrence.
std::vector<double> gegenbauer_seq(int kmax, double lambda, double w);
// limit_scaled values for k = 0..K.
std::vector<double> gegenbauer_limit_seq(int kmax, double w);

double chebyshev_t(int k, double w);
double chebyshev_u(int k, double w);

double laguerre(int j, double alpha, double t);

}  // namespace gfourier
