#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace dunklcore {

using Cx = std::complex<long double>;

struct QuadResult {
  Cx value{0.0L, 0.0L};
  long double error = 0.0L;  // absolute error estimate
  long long evaluations = 0;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1], generated by
// Newton iteration on the Legendre recurrence and cached.
const std::vector<std::pair<long double, long double>>& gauss_legendre_rule(int n);

// Adaptive bisection with a Gauss-Legendre panel rule; abs_tol is an absolute target.
QuadResult integrate_adaptive(const std::function<Cx(long double)>& f, long double a,
                              long double b, long double abs_tol, int max_depth = 40);

// Iterated integral over the ordered region b > x1 > x2 > a.
QuadResult integrate_ordered_2d(const std::function<Cx(long double, long double)>& f,
                                long double a, long double b, long double abs_tol);

// splitmix64-style counter mix; pure function of (seed, counter).
unsigned long long counter_mix(unsigned long long seed, unsigned long long counter);

// deterministic uniform in (0,1) from (seed, counter)
long double counter_uniform(unsigned long long seed, unsigned long long counter);

// Phi^{-1}(p) for the standard normal, Newton-refined to long-double accuracy.
long double inverse_normal_cdf(long double p);

// Stratified Monte Carlo with N(0, sigma^2 I) importance sampling on R^r:
// estimates integral of each component of h over R^r (h carries every weight factor).
// One sample per quantile cell, K^r >= min_samples cells, fixed evaluation order.
std::vector<QuadResult> mc_integrate_gaussian_multi(
    const std::function<void(const std::vector<long double>&, std::vector<Cx>&)>& h,
    int n_out, int r, long double sigma, long long min_samples, unsigned long long seed);

// Stratified Monte Carlo over the box (lo,hi)^r evaluated on the descending sort of
// each sample: estimates the integral of f over the ordered region hi > x1 > ... > xr > lo.
QuadResult mc_integrate_ordered_box(const std::function<Cx(const std::vector<long double>&)>& f,
                                    int r, long double lo, long double hi,
                                    long long min_samples, unsigned long long seed);

}  // namespace dunklcore
