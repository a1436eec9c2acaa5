#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dunklcore {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Legendre P_n and P_n' at x via the three-term recurrence.
std::pair<long double, long double> legendre_pd(int n, long double x) {
  long double p0 = 1.0L, p1 = x;
  for (int k = 2; k <= n; ++k) {
    long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  long double d = n * (x * p1 - p0) / (x * x - 1.0L);
  return {p1, d};
}

}  // namespace

const std::vector<std::pair<long double, long double>>& gauss_legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<long double, long double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<long double, long double>> rule;
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    long double x = std::cos(kPi * (k - 0.25L) / (n + 0.5L));
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre_pd(n, x);
      long double dx = p / d;
      x -= dx;
      if (std::fabs(dx) < 1e-21L) break;
    }
    auto [p, d] = legendre_pd(n, x);
    (void)p;
    long double w = 2.0L / ((1.0L - x * x) * d * d);
    rule.emplace_back(-x, w);
    if (2 * k <= n) rule.emplace_back(x, w);
  }
  std::sort(rule.begin(), rule.end());
  return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

constexpr int kPanelOrder = 15;

Cx panel(const std::function<Cx(long double)>& f, long double a, long double b,
         long long& evals) {
  const auto& rule = gauss_legendre_rule(kPanelOrder);
  long double mid = 0.5L * (a + b), half = 0.5L * (b - a);
  Cx acc{0.0L, 0.0L};
  for (const auto& [x, w] : rule) acc += w * f(mid + half * x);
  evals += kPanelOrder;
  return half * acc;
}

void adapt(const std::function<Cx(long double)>& f, long double a, long double b, Cx whole,
           long double tol, int depth, QuadResult& out) {
  long double mid = 0.5L * (a + b);
  Cx left = panel(f, a, mid, out.evaluations);
  Cx right = panel(f, mid, b, out.evaluations);
  long double err = std::abs(whole - (left + right));
  if (err <= tol || depth <= 0) {
    out.value += left + right;
    out.error += err;
    return;
  }
  adapt(f, a, mid, left, 0.5L * tol, depth - 1, out);
  adapt(f, mid, b, right, 0.5L * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<Cx(long double)>& f, long double a,
                              long double b, long double abs_tol, int max_depth) {
  QuadResult out;
  if (a == b) return out;
  Cx whole = panel(f, a, b, out.evaluations);
  adapt(f, a, b, whole, abs_tol, max_depth, out);
  return out;
}

QuadResult integrate_ordered_2d(const std::function<Cx(long double, long double)>& f,
                                long double a, long double b, long double abs_tol) {
  QuadResult out;
  if (b <= a) return out;
  long double inner_tol = 0.3L * abs_tol / (b - a);
  long long inner_evals = 0;
  long double inner_err = 0.0L;
  auto outer = [&](long double x1) {
    QuadResult in = integrate_adaptive([&](long double x2) { return f(x1, x2); }, a, x1,
                                       inner_tol);
    inner_evals += in.evaluations;
    inner_err = std::max(inner_err, in.error);
    return in.value;
  };
  QuadResult o = integrate_adaptive(outer, a, b, 0.7L * abs_tol);
  out.value = o.value;
  out.error = o.error + inner_err * (b - a);
  out.evaluations = o.evaluations + inner_evals;
  return out;
}

unsigned long long counter_mix(unsigned long long seed, unsigned long long counter) {
  unsigned long long z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long double counter_uniform(unsigned long long seed, unsigned long long counter) {
  unsigned long long bits = counter_mix(seed, counter) >> 11;  // 53 bits
  return (static_cast<long double>(bits) + 0.5L) * 0x1.0p-53L;
}

long double inverse_normal_cdf(long double p) {
  if (!(p > 0.0L && p < 1.0L)) throw std::domain_error("inverse_normal_cdf: p outside (0,1)");
  const long double inv_sqrt2 = 0.70710678118654752440084436210484904L;
  const long double inv_sqrt2pi = 0.39894228040143267793994605993438187L;
  bool flip = p > 0.5L;
  long double q = flip ? 1.0L - p : p;
  // rational tail start, then Newton on Phi(x) - q with Phi via erfc
  long double t = std::sqrt(-2.0L * std::log(q));
  long double x = -(t - (2.515517L + t * (0.802853L + t * 0.010328L)) /
                            (1.0L + t * (1.432788L + t * (0.189269L + t * 0.001308L))));
  for (int iter = 0; iter < 8; ++iter) {
    long double F = 0.5L * std::erfc(-x * inv_sqrt2);
    long double dens = std::exp(-0.5L * x * x) * inv_sqrt2pi;
    if (dens <= 0.0L) break;
    long double step = (F - q) / dens;
    x -= step;
    if (std::fabs(step) < 1e-18L * (1.0L + std::fabs(x))) break;
  }
  return flip ? -x : x;
}

std::vector<QuadResult> mc_integrate_gaussian_multi(
    const std::function<void(const std::vector<long double>&, std::vector<Cx>&)>& h,
    int n_out, int r, long double sigma, long long min_samples, unsigned long long seed) {
  if (r < 1 || n_out < 1 || min_samples < 1) throw std::invalid_argument("mc_integrate_gaussian_multi");
  long long k = 1;
  while ([&] {
    long long cells = 1;
    for (int j = 0; j < r; ++j) cells *= k;
    return cells < min_samples;
  }())
    ++k;
  long long cells = 1;
  for (int j = 0; j < r; ++j) cells *= k;

  const long double log_norm = -0.5L * r * std::log(2.0L * kPi * sigma * sigma);
  std::vector<Cx> total(n_out, Cx{0.0L, 0.0L});
  // adjacent cells are near-identical strata; successive differences estimate the
  // per-cell sampling variance without a second sample per cell
  std::vector<long double> diff_sq(n_out, 0.0L);
  std::vector<Cx> prev(n_out, Cx{0.0L, 0.0L});
  std::vector<long double> x(r);
  std::vector<Cx> val(n_out);

  for (long long c = 0; c < cells; ++c) {
    long long rest = c;
    long double logq = log_norm;
    for (int j = 0; j < r; ++j) {
      long long digit = rest % k;
      rest /= k;
      long double u = (static_cast<long double>(digit) +
                       counter_uniform(seed, static_cast<unsigned long long>(c) * r + j)) /
                      static_cast<long double>(k);
      long double z = inverse_normal_cdf(u);
      x[j] = sigma * z;
      logq += -0.5L * z * z;
    }
    long double inv_q = std::exp(-logq);
    std::fill(val.begin(), val.end(), Cx{0.0L, 0.0L});
    h(x, val);
    for (int m = 0; m < n_out; ++m) {
      Cx contrib = val[m] * inv_q;
      total[m] += contrib;
      if (c % 2 == 1) diff_sq[m] += 0.5L * std::norm(contrib - prev[m]);
      prev[m] = contrib;
    }
  }

  std::vector<QuadResult> out(n_out);
  long double inv_n = 1.0L / static_cast<long double>(cells);
  for (int m = 0; m < n_out; ++m) {
    out[m].value = total[m] * inv_n;
    out[m].evaluations = cells;
    long double var = diff_sq[m] / std::max<long long>(1, cells / 2);
    out[m].error = std::sqrt(var) * std::sqrt(inv_n);
  }
  return out;
}

QuadResult mc_integrate_ordered_box(const std::function<Cx(const std::vector<long double>&)>& f,
                                    int r, long double lo, long double hi,
                                    long long min_samples, unsigned long long seed) {
  if (r < 1 || hi <= lo || min_samples < 1) throw std::invalid_argument("mc_integrate_ordered_box");
  long long k = 1;
  while ([&] {
    long long cells = 1;
    for (int j = 0; j < r; ++j) cells *= k;
    return cells < min_samples;
  }())
    ++k;
  long long cells = 1;
  for (int j = 0; j < r; ++j) cells *= k;

  long double vol = 1.0L;
  for (int j = 0; j < r; ++j) vol *= (hi - lo);
  long double factorial = 1.0L;
  for (int j = 2; j <= r; ++j) factorial *= j;

  Cx total{0.0L, 0.0L};
  long double diff_sq = 0.0L;
  Cx prev{0.0L, 0.0L};
  std::vector<long double> x(r);
  for (long long c = 0; c < cells; ++c) {
    long long rest = c;
    for (int j = 0; j < r; ++j) {
      long long digit = rest % k;
      rest /= k;
      long double u = (static_cast<long double>(digit) +
                       counter_uniform(seed, static_cast<unsigned long long>(c) * r + j)) /
                      static_cast<long double>(k);
      x[j] = lo + (hi - lo) * u;
    }
    std::sort(x.begin(), x.end(), std::greater<long double>());
    Cx v = f(x);
    total += v;
    if (c % 2 == 1) diff_sq += 0.5L * std::norm(v - prev);
    prev = v;
  }

  QuadResult out;
  long double scale = vol / (factorial * static_cast<long double>(cells));
  out.value = total * scale;
  out.evaluations = cells;
  long double var = diff_sq / std::max<long long>(1, cells / 2);
  out.error = std::sqrt(var / static_cast<long double>(cells)) * vol / factorial;
  return out;
}

}  // namespace dunklcore
