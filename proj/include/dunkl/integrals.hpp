#pragma once

#include <functional>
#include <vector>

#include "dunkl/quadrature.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/weylops.hpp"

namespace dunklcore {

// squared length of a minimal coordinate vector in the flat model: 2 for kind C, 1 for kind D
int flat_kappa(Kind kind);

long double rat_to_ld(const BigRational& q);

// Gaussian-weighted Selberg density on the flat Cartan subspace:
//   kind C: e^{-kappa*|lambda|^2/(2 nu)} * prod_j |lambda_j|^{iota-1} * prod_{i<j} |lambda_i^2-lambda_j^2|^a
//   kind D: e^{-kappa*|lambda|^2/(2 nu)} * prod_{i<j} |lambda_i^2-lambda_j^2|^a
// pair_difference_density swaps the kind-C pair factor for prod_{i<j}|lambda_i-lambda_j|^a.
struct FlatDensity {
  RootData rd;
  BigRational nu;
  bool pair_difference_density = false;

  long double kappa() const;
  long double gaussian_sigma() const;         // sqrt(nu/kappa), the scale of the Gaussian factor
  long double angular_degree() const;         // homogeneity degree of the non-Gaussian factor
  long double flat_dimension() const;         // r + angular_degree
  long double operator()(const std::vector<long double>& lam) const;
};

// Integral of f against the density over the whole Cartan subspace R^r, computed as
// r! * sum over sign vectors of the integral over the open chamber l1 > ... > lr > 0.
// f must be symmetric under coordinate permutations (sign symmetry is not assumed).
// r <= 2 uses adaptive quadrature; r = 3 (or mc_min_samples > 0) uses stratified
// Monte Carlo with Gaussian importance sampling.
QuadResult chamber_integrate_complex(const std::function<Cx(const std::vector<long double>&)>& f,
                                     const FlatDensity& w, long double tol,
                                     unsigned long long seed, long long mc_min_samples = 0);
QuadResult chamber_integrate(const std::function<long double(const std::vector<long double>&)>& f,
                             const FlatDensity& w, long double tol, unsigned long long seed,
                             long long mc_min_samples = 0);

// Monte Carlo companion evaluating several integrands on one stratified sample stream;
// each output is the integral of f_multi's component against the density over R^r.
std::vector<QuadResult> chamber_integrate_mc_multi(
    const std::function<void(const std::vector<long double>&, std::vector<Cx>&)>& f_multi,
    int n_out, const FlatDensity& w, long long min_samples, unsigned long long seed);

// Normalizing constant making C1 * (2 pi / nu)^{d/2} * density d(lambda) a probability
// measure, d = flat dimension; independence from nu is asserted at nu and 2 nu.
long double c1_normalization(const RootData& rd, const BigRational& nu,
                             long double tol = 1e-9L, unsigned long long seed = 1);

// Gamma function of the symmetric cone of rank r and multiplicity mult:
//   (2 pi)^{(d_cone - r)/2} * prod_{j=1}^r Gamma(s - (j-1) mult / 2),
// d_cone = r + mult r (r-1)/2.
long double gindikin_gamma(long double s, int r, const BigRational& mult);

// Closed value of the ordered hyperbolic Selberg integral
//   I0 = int_{x1>...>xr>0} prod_j (1 - tanh^2 x_j)^sigma *
//        prod_{i<j} (e^{x_i-x_j} - e^{x_j-x_i})^a (e^{x_i+x_j} - e^{-x_i-x_j})^a dx.
long double selberg_i0_closed(long double sigma, int r, const BigRational& a);

// The same integral evaluated numerically after t_j = tanh x_j:
//   4^{(a/2) r (r-1)} * int_{1>t1>...>tr>0} prod (1-t_j^2)^{sigma-a(r-1)-1} prod (t_i^2-t_j^2)^a dt.
QuadResult selberg_i0_numeric(long double sigma, int r, const BigRational& a,
                              long double tol = 1e-9L, unsigned long long seed = 1,
                              long long mc_min_samples = 0);

// Gaussian counterpart sqrt(pi)^d * GammaCone(sigma - (a/2)(r-1)) / GammaCone(sigma + 1/2)
// with d = r + a r (r-1); kind D root data.
long double selberg_i1_closed(long double sigma, const RootData& rd);

// Closed normalization constant sqrt(2 pi)^r / sqrt(2 a r)^r * I1 / I0 for kind D, r >= 2.
// The sigma-probe assembly must agree with the closed form and be sigma-independent;
// an empty probe list defaults to {a(r-1)+1, a(r-1)+2, a(r-1)+3} (all poles avoided).
long double c0_constant(const RootData& rd, const std::vector<long double>& sigma_probes = {},
                        long double tol = 1e-6L);

}  // namespace dunklcore
