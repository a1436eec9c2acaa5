#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "dunkl/branching.hpp"
#include "dunkl/integrals.hpp"

namespace dunklcore {

// All canonical spherical signatures of weight |n| <= max_weight, ordered by
// (weight, n lexicographically). Kind C enumerates partitions m (|n| = 2|m|);
// kind D enumerates m with m_r = 0 together with the scalar power.
std::vector<SphericalSignature> spherical_signatures(Kind kind, int r, int max_weight);

// Truncated symmetric Bessel-type kernel sum_n p_n(x) p_n(-i lambda) / |p_n|^2
// over signatures with |n| <= max_degree. The kernel lives in 2r variables:
// x_1..x_r then lambda_1..lambda_r.
struct BesselSeries {
  RootData rd;
  int max_degree = 0;
  MultiPoly kernel;
};

BesselSeries bessel_series(const RootData& rd, int max_degree);

// A polynomial in 2r variables with numeric values substituted for the last r
// (the spectral block), cheap to evaluate at quadrature nodes.
struct NumericKernel {
  int nvars = 0;
  std::vector<std::pair<Exponent, std::complex<long double>>> terms;

  std::complex<long double> eval(const std::vector<long double>& x) const;
};

NumericKernel substitute_spectral(const MultiPoly& p, int r,
                                  const std::vector<long double>& lambda);

// Degree-|n| spectral coefficient of exp(nu*kappa*|x|^2/2) * Bessel kernel,
// extracted by pairing against p_n in the Fischer product. Computed at
// truncation `trunc` and again at trunc+2; a mismatch throws, so the returned
// polynomial is exact, not an approximation. Requires trunc >= |n|.
MultiPoly gaussian_bessel_expansion(const SphericalSignature& s, const RootData& rd,
                                    const BigRational& nu, int trunc);

// Hermite-type spectral polynomial attached to a spherical signature: the
// coefficient of p_n(x) in the expansion of exp(nu*kappa*|x|^2/2) J(x, -i lambda).
// Computed by two independent routes (Rodrigues-style differentiation of the
// truncated product, and the Fischer-pairing projection above) which must
// agree exactly; reflection invariance is also enforced before returning.
struct ZetaPolynomial {
  SphericalSignature s;
  BigRational nu;
  MultiPoly poly;  // r spectral variables
};

ZetaPolynomial zeta_polynomial(const SphericalSignature& s, const RootData& rd,
                               const BigRational& nu);

std::string zeta_to_json(const ZetaPolynomial& z);

// True when p is invariant under the reflection group of the kind (all
// adjacent swaps, plus one sign flip for C, a double sign flip for D).
bool is_weyl_invariant(const MultiPoly& p, Kind kind, int r);

// Exact identity sum_{|n|<=W} p_n(x) zeta_n(lambda) ==
// truncation of exp(nu*kappa*|x|^2/2) J(x, -i lambda) to x-degree <= W.
bool zeta_reconstruction_check(const RootData& rd, const BigRational& nu, int max_weight);

// Gaussian eigenfunction property of the Bessel kernel: the normalized integral
// of J(., -i lambda) against the Gaussian density of variance 1/(nu*kappa) per
// direction equals exp(-kappa|lambda|^2/(2 nu)). Returns |ratio - 1| with the
// kernel truncated at x-degree <= trunc.
long double gaussian_eigen_check(const RootData& rd, const BigRational& nu,
                                 const std::vector<BigRational>& lambda, int trunc,
                                 long double quad_tol = 0, unsigned long long seed = 1);

// Gram matrix of the normalized spectral polynomials sqrt(nu^{-|n|} |p_n|^2) zeta_n
// in the probability measure c1 * (2 pi / nu)^{deg/2} * spectral density. Signatures
// are ordered as in spherical_signatures. Rank 1 integrates adaptively; rank 2+
// (or mc_min_samples > 0) uses stratified Monte Carlo with every entry sharing
// one sample stream. `pair_difference_density` selects |l_i - l_j|^a pair terms
// in place of |l_i^2 - l_j^2|^a.
Eigen::MatrixXd zeta_gram(const RootData& rd, const BigRational& nu, int max_weight,
                          unsigned long long seed = 1, long long mc_min_samples = 0,
                          bool pair_difference_density = false);

// Ratio test for the flat transform: integral of p_n(y) J(y, -i lambda) against
// the Gaussian density of variance 1/(nu*kappa), divided by
// nu^{-|n|} |p_n|^2 zeta_n(lambda) exp(-kappa|lambda|^2/(2 nu)). The ratio is a
// single positive constant independent of n and lambda; the (-nu)^{|n|}-twisted
// form alternates sign with the parity of |n|. Spectral points where zeta_n
// vanishes are nudged before use.
struct FourierRatioReport {
  long double constant = 0;       // mean ratio over all samples
  long double max_spread = 0;     // max |ratio - constant| / |constant|
  bool signs_alternate = false;   // twisted form has sign (-1)^{|n|}
  long long samples = 0;
};

FourierRatioReport fourier_ratio_check(const RootData& rd, const BigRational& nu,
                                       const std::vector<SphericalSignature>& sigs,
                                       const std::vector<std::vector<BigRational>>& lambda_points,
                                       long double quad_tol = 0, unsigned long long seed = 1);

}  // namespace dunklcore
