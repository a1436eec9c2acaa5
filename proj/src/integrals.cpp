#include "dunkl/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dunklcore {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

void check_gamma_arg(long double x, const char* who) {
  if (x > 0.0L) return;
  long double nearest = std::floor(x + 0.5L);
  if (std::fabs(x - nearest) < 1e-9L)
    throw std::domain_error(std::string(who) + ": Gamma pole");
}

long double gamma_ld(long double x, const char* who) {
  check_gamma_arg(x, who);
  return std::tgamma(x);
}

long double factorial_ld(int n) {
  long double f = 1.0L;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

int flat_kappa(Kind kind) {
  switch (kind) {
    case Kind::C: return 2;
    case Kind::D: return 1;
    default: throw std::invalid_argument("flat_kappa: flat model covers kinds C and D");
  }
}

long double rat_to_ld(const BigRational& q) {
  return static_cast<long double>(q.get_d());
}

long double FlatDensity::kappa() const { return static_cast<long double>(flat_kappa(rd.kind)); }

long double FlatDensity::gaussian_sigma() const {
  long double nu_ld = rat_to_ld(nu);
  if (nu_ld <= 0.0L) throw std::domain_error("FlatDensity: nu must be positive");
  return std::sqrt(nu_ld / kappa());
}

long double FlatDensity::angular_degree() const {
  long double a = rat_to_ld(rd.a);
  long double pair_deg = (pair_difference_density && rd.kind == Kind::C ? 1.0L : 2.0L) * a *
                         rd.r * (rd.r - 1) / 2.0L;
  if (rd.kind == Kind::D) return pair_deg;
  long double iota = rat_to_ld(rd.iota);
  return rd.r * (iota - 1.0L) + pair_deg;
}

long double FlatDensity::flat_dimension() const { return rd.r + angular_degree(); }

long double FlatDensity::operator()(const std::vector<long double>& lam) const {
  if (static_cast<int>(lam.size()) != rd.r) throw std::invalid_argument("FlatDensity: dimension");
  long double nu_ld = rat_to_ld(nu);
  long double a = rat_to_ld(rd.a);
  long double sum_sq = 0.0L;
  for (long double l : lam) sum_sq += l * l;
  long double out = std::exp(-kappa() * sum_sq / (2.0L * nu_ld));
  if (rd.kind == Kind::C) {
    long double iota = rat_to_ld(rd.iota);
    for (long double l : lam) out *= std::pow(std::fabs(l), iota - 1.0L);
  }
  for (int i = 0; i < rd.r; ++i)
    for (int j = i + 1; j < rd.r; ++j) {
      long double pair = pair_difference_density && rd.kind == Kind::C
                             ? std::fabs(lam[i] - lam[j])
                             : std::fabs(lam[i] * lam[i] - lam[j] * lam[j]);
      out *= std::pow(pair, a);
    }
  return out;
}

namespace {

// sum of f over the full sign orbit of lam
Cx sign_orbit_sum(const std::function<Cx(const std::vector<long double>&)>& f,
                  const std::vector<long double>& lam) {
  int r = static_cast<int>(lam.size());
  std::vector<long double> pt(r);
  Cx acc{0.0L, 0.0L};
  for (int mask = 0; mask < (1 << r); ++mask) {
    for (int j = 0; j < r; ++j) pt[j] = (mask >> j) & 1 ? -lam[j] : lam[j];
    acc += f(pt);
  }
  return acc;
}

}  // namespace

QuadResult chamber_integrate_complex(const std::function<Cx(const std::vector<long double>&)>& f,
                                     const FlatDensity& w, long double tol,
                                     unsigned long long seed, long long mc_min_samples) {
  int r = w.rd.r;
  if (r < 1 || r > 3) throw std::invalid_argument("chamber_integrate: r must be 1..3");
  bool use_mc = mc_min_samples > 0 || r >= 3;
  if (use_mc) {
    long long n = mc_min_samples > 0 ? mc_min_samples : 1000000;
    auto res = chamber_integrate_mc_multi(
        [&](const std::vector<long double>& lam, std::vector<Cx>& out) { out[0] = f(lam); }, 1, w,
        n, seed);
    return res[0];
  }
  long double sigma = w.gaussian_sigma();
  long double cutoff = 34.0L * sigma;
  long double fact = factorial_ld(r);
  long double quad_tol = tol / (2.0L * fact);
  QuadResult res;
  if (r == 1) {
    res = integrate_adaptive(
        [&](long double t) {
          std::vector<long double> lam{t};
          return w(lam) * sign_orbit_sum(f, lam);
        },
        0.0L, cutoff, quad_tol);
  } else {
    res = integrate_ordered_2d(
        [&](long double t1, long double t2) {
          std::vector<long double> lam{t1, t2};
          return w(lam) * sign_orbit_sum(f, lam);
        },
        0.0L, cutoff, quad_tol);
  }
  res.value *= fact;
  res.error *= fact;
  return res;
}

QuadResult chamber_integrate(const std::function<long double(const std::vector<long double>&)>& f,
                             const FlatDensity& w, long double tol, unsigned long long seed,
                             long long mc_min_samples) {
  return chamber_integrate_complex(
      [&](const std::vector<long double>& lam) { return Cx{f(lam), 0.0L}; }, w, tol, seed,
      mc_min_samples);
}

std::vector<QuadResult> chamber_integrate_mc_multi(
    const std::function<void(const std::vector<long double>&, std::vector<Cx>&)>& f_multi,
    int n_out, const FlatDensity& w, long long min_samples, unsigned long long seed) {
  int r = w.rd.r;
  long double orbit = static_cast<long double>(1 << r);
  std::vector<Cx> tmp(n_out);
  std::vector<long double> pt(r);
  auto h = [&](const std::vector<long double>& lam, std::vector<Cx>& out) {
    long double dens = w(lam);
    for (int mask = 0; mask < (1 << r); ++mask) {
      for (int j = 0; j < r; ++j) pt[j] = (mask >> j) & 1 ? -lam[j] : lam[j];
      std::fill(tmp.begin(), tmp.end(), Cx{0.0L, 0.0L});
      f_multi(pt, tmp);
      for (int m = 0; m < n_out; ++m) out[m] += tmp[m] * (dens / orbit);
    }
  };
  // The integrands here are polynomials times the density, so an importance
  // Gaussian matching the density undersamples the polynomial tails badly;
  // widening it by sqrt(3) cuts the stratified variance by two orders.
  const long double fatten = 1.73205080756887729353L;
  return mc_integrate_gaussian_multi(h, n_out, r, w.gaussian_sigma() * fatten, min_samples, seed);
}

long double c1_normalization(const RootData& rd, const BigRational& nu, long double tol,
                             unsigned long long seed) {
  auto one = [](const std::vector<long double>&) { return 1.0L; };
  auto c1_at = [&](const BigRational& n) {
    FlatDensity w{rd, n};
    QuadResult z = chamber_integrate(one, w, tol, seed);
    long double nu_ld = rat_to_ld(n);
    return 1.0L / (std::pow(2.0L * kPi / nu_ld, w.flat_dimension() / 2.0L) * z.value.real());
  };
  long double c1 = c1_at(nu);
  long double c1_twice = c1_at(BigRational(2) * nu);
  if (std::fabs(c1 - c1_twice) > 2.0L * tol + 1e-7L * std::fabs(c1))
    throw std::runtime_error("c1_normalization: value drifts with nu");
  return c1;
}

long double gindikin_gamma(long double s, int r, const BigRational& mult) {
  if (r < 1) throw std::invalid_argument("gindikin_gamma: rank");
  long double m = rat_to_ld(mult);
  long double d_cone = r + m * r * (r - 1) / 2.0L;
  long double out = std::pow(2.0L * kPi, (d_cone - r) / 2.0L);
  for (int j = 1; j <= r; ++j) out *= gamma_ld(s - (j - 1) * m / 2.0L, "gindikin_gamma");
  return out;
}

long double selberg_i0_closed(long double sigma, int r, const BigRational& a) {
  if (r < 1) throw std::invalid_argument("selberg_i0_closed: rank");
  long double al = rat_to_ld(a);
  if (al <= 0.0L) throw std::domain_error("selberg_i0_closed: a must be positive");
  if (!(sigma > al * (r - 1))) throw std::domain_error("selberg_i0_closed: requires sigma > a(r-1)");
  long double out = std::pow(2.0L, al * r * (r - 1) - r);
  for (int i = 1; i <= r; ++i) {
    out *= gamma_ld(sigma - 0.5L * al * (r - 1) - 0.5L * al * (i - 1), "selberg_i0_closed");
    out *= gamma_ld(0.5L + 0.5L * al * (r - 1) - 0.5L * al * (i - 1), "selberg_i0_closed");
    out /= gamma_ld(sigma + 0.5L - 0.5L * al * (i - 1), "selberg_i0_closed");
  }
  for (int j = 1; j <= r; ++j) out *= gamma_ld(0.5L * al * (r - j + 1), "selberg_i0_closed");
  return out / std::pow(gamma_ld(0.5L * al, "selberg_i0_closed"), static_cast<long double>(r));
}

QuadResult selberg_i0_numeric(long double sigma, int r, const BigRational& a, long double tol,
                              unsigned long long seed, long long mc_min_samples) {
  if (r < 1 || r > 3) throw std::invalid_argument("selberg_i0_numeric: r must be 1..3");
  long double al = rat_to_ld(a);
  long double beta = sigma - al * (r - 1) - 1.0L;
  if (beta <= -1.0L) throw std::domain_error("selberg_i0_numeric: divergent parameters");
  auto integrand = [&](const std::vector<long double>& t) {
    long double v = 1.0L;
    for (int j = 0; j < r; ++j) v *= std::pow(1.0L - t[j] * t[j], beta);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) v *= std::pow(t[i] * t[i] - t[j] * t[j], al);
    return Cx{v, 0.0L};
  };
  QuadResult res;
  if (r == 1) {
    res = integrate_adaptive([&](long double t) { return integrand({t}); }, 0.0L, 1.0L, tol);
  } else if (r == 2) {
    res = integrate_ordered_2d([&](long double t1, long double t2) { return integrand({t1, t2}); },
                               0.0L, 1.0L, tol);
  } else {
    res = mc_integrate_ordered_box(integrand, r, 0.0L, 1.0L,
                                   mc_min_samples > 0 ? mc_min_samples : 2000000, seed);
  }
  long double pref = std::pow(2.0L, al * r * (r - 1));
  res.value *= pref;
  res.error *= pref;
  return res;
}

long double selberg_i1_closed(long double sigma, const RootData& rd) {
  if (rd.kind != Kind::D) throw std::invalid_argument("selberg_i1_closed: kind D root data required");
  long double al = rat_to_ld(rd.a);
  int r = rd.r;
  long double d = r + al * r * (r - 1);
  return std::pow(kPi, d / 2.0L) * gindikin_gamma(sigma - 0.5L * al * (r - 1), r, rd.a) /
         gindikin_gamma(sigma + 0.5L, r, rd.a);
}

long double c0_constant(const RootData& rd, const std::vector<long double>& sigma_probes,
                        long double tol) {
  if (rd.kind != Kind::D) throw std::invalid_argument("c0_constant: kind D root data required");
  if (rd.r < 2) throw std::invalid_argument("c0_constant: requires r >= 2");
  long double al = rat_to_ld(rd.a);
  int r = rd.r;
  std::vector<long double> probes = sigma_probes;
  if (probes.empty())
    for (int k = 1; k <= 3; ++k) probes.push_back(al * (r - 1) + k);
  long double d = r + al * r * (r - 1);

  long double closed = std::pow(kPi / (al * r), r / 2.0L) * std::pow(kPi, d / 2.0L) *
                       std::pow(gamma_ld(0.5L * al, "c0_constant"), static_cast<long double>(r)) /
                       std::pow(2.0L, al * r * (r - 1) - r);
  for (int i = 1; i <= r; ++i)
    closed /= gamma_ld(0.5L + 0.5L * al * (r - 1) - 0.5L * al * (i - 1), "c0_constant");
  for (int j = 1; j <= r; ++j) closed /= gamma_ld(0.5L * al * (r - j + 1), "c0_constant");

  long double lo = 0.0L, hi = 0.0L;
  bool first = true;
  for (long double sigma : probes) {
    long double assembled = std::pow(kPi / (al * r), r / 2.0L) * selberg_i1_closed(sigma, rd) /
                            selberg_i0_closed(sigma, r, rd.a);
    if (first) {
      lo = hi = assembled;
      first = false;
    } else {
      lo = std::min(lo, assembled);
      hi = std::max(hi, assembled);
    }
  }
  if (hi - lo > tol * std::fabs(closed))
    throw std::runtime_error("c0_constant: sigma probes disagree");
  if (std::fabs(0.5L * (hi + lo) - closed) > tol * std::fabs(closed))
    throw std::runtime_error("c0_constant: closed form disagrees with the I1/I0 assembly");
  return closed;
}

}  // namespace dunklcore
