#include "dunkl/flatcase.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dunklcore {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

int even_up(int n) { return n + (n & 1); }

// Scalar fed into the differential side of the Fischer pairing.
GaussRational fischer_scale(Kind kind) {
  return kind == Kind::C ? GaussRational(BigRational(1, 2)) : GaussRational(1);
}

MultiPoly sum_squares(int nvars, int r) {
  MultiPoly s = poly_zero(nvars);
  for (int j = 0; j < r; ++j) s = poly_add(s, poly_pow(poly_var(nvars, j), 2));
  return s;
}

// exp(nu*kappa*|x|^2/2) truncated to degree <= maxdeg; the x block is the
// first r of nvars variables.
MultiPoly gaussian_factor(const RootData& rd, const BigRational& nu, int nvars, int maxdeg) {
  BigRational base = nu * flat_kappa(rd.kind);
  base /= 2;
  MultiPoly ss = sum_squares(nvars, rd.r);
  MultiPoly acc = poly_const(nvars, GaussRational(1));
  MultiPoly pw = poly_const(nvars, GaussRational(1));
  BigRational coef = 1;
  for (int k = 1; 2 * k <= maxdeg; ++k) {
    pw = poly_mul(pw, ss);
    coef *= base;
    coef /= k;
    acc = poly_add(acc, poly_scale(pw, GaussRational(coef)));
  }
  return acc;
}

// Fischer pairing (g, f) over the x block of g, for f in exactly r variables.
// The spectral block of g rides along as spectators and enters linearly, so the
// result is a polynomial in the spectral variables alone.
MultiPoly fischer_project(const MultiPoly& f, const MultiPoly& g, const RootData& rd) {
  MultiPoly applied = poly_of_dunkl(poly_scale_vars(f, fischer_scale(rd.kind), 0, rd.r),
                                    poly_conj(g), rd);
  MultiPoly at0 = poly_component_in_block(applied, 0, rd.r, 0);
  MultiPoly out = poly_zero(g.nvars - rd.r);
  for (const auto& [e, c] : at0.terms)
    out.add_term(Exponent(e.begin() + rd.r, e.end()), c.conj());
  return out;
}

MultiPoly drop_x_block(const MultiPoly& p, int r) {
  MultiPoly out = poly_zero(p.nvars - r);
  for (const auto& [e, c] : p.terms) out.add_term(Exponent(e.begin() + r, e.end()), c);
  return out;
}

GaussRational inv_fock_norm(const SphericalSignature& s, const RootData& rd) {
  return GaussRational(BigRational(1)) / GaussRational(fock_norm_closed(s, rd));
}

// Degree-|n| spectral coefficient extracted by Fischer pairing at one truncation.
MultiPoly zeta_projection_at(const SphericalSignature& s, const RootData& rd,
                             const BigRational& nu, int trunc) {
  const int r = rd.r, nv = 2 * r;
  const int d = signature_weight(s);
  BesselSeries series = bessel_series(rd, even_up(trunc));
  BigRational base = nu * flat_kappa(rd.kind);
  base /= 2;
  MultiPoly ss = sum_squares(nv, r);
  MultiPoly comp = poly_component_in_block(series.kernel, 0, r, d);
  MultiPoly pw = poly_const(nv, GaussRational(1));
  BigRational coef = 1;
  for (int k = 1; 2 * k <= d; ++k) {
    pw = poly_mul(pw, ss);
    coef *= base;
    coef /= k;
    comp = poly_add(comp, poly_scale(poly_mul(pw, poly_component_in_block(series.kernel, 0, r, d - 2 * k)),
                                     GaussRational(coef)));
  }
  MultiPoly num = fischer_project(restricted_invariant(s, rd), comp, rd);
  return poly_scale(num, inv_fock_norm(s, rd));
}

// Independent route: truncate the full product first, then differentiate. No
// conjugation is involved anywhere on this path.
MultiPoly zeta_rodrigues(const SphericalSignature& s, const RootData& rd, const BigRational& nu) {
  const int r = rd.r, nv = 2 * r;
  const int d = signature_weight(s);
  BesselSeries series = bessel_series(rd, even_up(d));
  MultiPoly gj = poly_truncate_block(poly_mul(gaussian_factor(rd, nu, nv, d), series.kernel),
                                     0, r, d);
  MultiPoly p = restricted_invariant(s, rd);
  MultiPoly applied = poly_of_dunkl(poly_scale_vars(p, fischer_scale(rd.kind), 0, r), gj, rd);
  MultiPoly out = drop_x_block(poly_component_in_block(applied, 0, r, 0), r);
  return poly_scale(out, inv_fock_norm(s, rd));
}

NumericKernel to_numeric(const MultiPoly& p) {
  NumericKernel k;
  k.nvars = p.nvars;
  k.terms.reserve(p.terms.size());
  for (const auto& [e, c] : p.terms)
    k.terms.emplace_back(e, std::complex<long double>(rat_to_ld(c.re), rat_to_ld(c.im)));
  return k;
}

long double sum_sq_ld(const std::vector<long double>& v) {
  long double s = 0;
  for (long double x : v) s += x * x;
  return s;
}

std::vector<long double> to_ld(const std::vector<BigRational>& v) {
  std::vector<long double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_ld(v[i]);
  return out;
}

}  // namespace

std::vector<SphericalSignature> spherical_signatures(Kind kind, int r, int max_weight) {
  if (r < 1) throw std::invalid_argument("spherical_signatures: rank must be positive");
  std::vector<SphericalSignature> out;
  if (kind == Kind::C) {
    for (int w = 0; 2 * w <= max_weight; ++w)
      for (const auto& m : partitions_of(w, r)) out.push_back(signature_from_m(m, 0, Kind::C));
  } else if (kind == Kind::D) {
    for (int ms = 0; ms * r <= max_weight; ++ms)
      for (int w = 0; 2 * w + ms * r <= max_weight; ++w)
        for (const auto& m : partitions_of(w, r))
          if (m.back() == 0) out.push_back(signature_from_m(m, ms, Kind::D));
  } else {
    throw std::invalid_argument("spherical_signatures: no spherical structure for kind A");
  }
  std::sort(out.begin(), out.end(), [](const SphericalSignature& a, const SphericalSignature& b) {
    int wa = signature_weight(a), wb = signature_weight(b);
    if (wa != wb) return wa < wb;
    return a.n < b.n;
  });
  return out;
}

BesselSeries bessel_series(const RootData& rd, int max_degree) {
  flat_kappa(rd.kind);  // rejects kind A
  if (max_degree < 0 || (max_degree & 1))
    throw std::invalid_argument("bessel_series: max_degree must be even and nonnegative");
  const int nv = 2 * rd.r;
  const GaussRational minus_i(BigRational(0), BigRational(-1));
  MultiPoly kernel = poly_zero(nv);
  for (const auto& s : spherical_signatures(rd.kind, rd.r, max_degree)) {
    MultiPoly p = restricted_invariant(s, rd);
    MultiPoly px = poly_embed(p, nv, 0);
    MultiPoly pl = poly_embed(poly_scale_vars(p, minus_i, 0, rd.r), nv, rd.r);
    kernel = poly_add(kernel, poly_scale(poly_mul(px, pl), inv_fock_norm(s, rd)));
  }
  return {rd, max_degree, kernel};
}

std::complex<long double> NumericKernel::eval(const std::vector<long double>& x) const {
  std::complex<long double> acc = 0;
  for (const auto& [e, c] : terms) {
    long double m = 1;
    for (size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) m *= x[j];
    acc += c * m;
  }
  return acc;
}

NumericKernel substitute_spectral(const MultiPoly& p, int r,
                                  const std::vector<long double>& lambda) {
  if (r < 0 || p.nvars < r || p.nvars - r != static_cast<int>(lambda.size()))
    throw std::invalid_argument("substitute_spectral: block sizes do not match");
  std::map<Exponent, std::complex<long double>> acc;
  for (const auto& [e, c] : p.terms) {
    long double lm = 1;
    for (int j = r; j < p.nvars; ++j)
      for (int k = 0; k < e[j]; ++k) lm *= lambda[j - r];
    acc[Exponent(e.begin(), e.begin() + r)] +=
        std::complex<long double>(rat_to_ld(c.re), rat_to_ld(c.im)) * lm;
  }
  NumericKernel out;
  out.nvars = r;
  out.terms.assign(acc.begin(), acc.end());
  return out;
}

MultiPoly gaussian_bessel_expansion(const SphericalSignature& s, const RootData& rd,
                                    const BigRational& nu, int trunc) {
  if (s.kind != rd.kind) throw std::invalid_argument("gaussian_bessel_expansion: kind mismatch");
  if (trunc < signature_weight(s))
    throw std::invalid_argument("gaussian_bessel_expansion: trunc below the signature weight");
  MultiPoly a = zeta_projection_at(s, rd, nu, trunc);
  MultiPoly b = zeta_projection_at(s, rd, nu, trunc + 2);
  if (a != b)
    throw std::runtime_error("gaussian_bessel_expansion: projection is not stable under truncation growth");
  return a;
}

bool is_weyl_invariant(const MultiPoly& p, Kind kind, int r) {
  std::vector<Reflection> gens;
  for (int i = 1; i < r; ++i) gens.push_back(Reflection::swap(i, i + 1));
  if (kind == Kind::C) gens.push_back(Reflection::sign(1));
  if (kind == Kind::D && r >= 2) gens.push_back(Reflection::signed_swap(1, 2));
  for (const auto& w : gens)
    if (apply_reflection(p, w) != p) return false;
  return true;
}

ZetaPolynomial zeta_polynomial(const SphericalSignature& s, const RootData& rd,
                               const BigRational& nu) {
  if (s.kind != rd.kind) throw std::invalid_argument("zeta_polynomial: kind mismatch");
  const int d = signature_weight(s);
  MultiPoly direct = zeta_rodrigues(s, rd, nu);
  MultiPoly projected = gaussian_bessel_expansion(s, rd, nu, even_up(d));
  if (direct != projected)
    throw std::logic_error("zeta_polynomial: differentiation and projection routes disagree");
  if (!is_weyl_invariant(direct, rd.kind, rd.r))
    throw std::logic_error("zeta_polynomial: result is not reflection invariant");
  // i^d * zeta must have real coefficients (every term degree has the parity of d).
  static const GaussRational unit_i = GaussRational::i();
  GaussRational twist(1);
  for (int k = 0; k < (d & 3); ++k) twist *= unit_i;
  for (const auto& [e, c] : poly_scale(direct, twist).terms) {
    (void)e;
    if (!c.is_real())
      throw std::logic_error("zeta_polynomial: coefficients break the i^{|n|} reality pattern");
  }
  return {s, nu, direct};
}

std::string zeta_to_json(const ZetaPolynomial& z) {
  nlohmann::ordered_json j;
  j["kind"] = kind_str(z.s.kind);
  j["m"] = z.s.m;
  j["m_scalar"] = z.s.m_scalar;
  j["nu"] = rat_str(z.nu);
  j["lambda_poly"] = nlohmann::ordered_json::parse(poly_to_json(z.poly));
  return j.dump();
}

bool zeta_reconstruction_check(const RootData& rd, const BigRational& nu, int max_weight) {
  const int r = rd.r, nv = 2 * r;
  const int cap = even_up(max_weight);
  BesselSeries series = bessel_series(rd, cap);
  MultiPoly gj = poly_truncate_block(poly_mul(gaussian_factor(rd, nu, nv, cap), series.kernel),
                                     0, r, max_weight);
  MultiPoly acc = poly_zero(nv);
  for (const auto& s : spherical_signatures(rd.kind, r, max_weight)) {
    MultiPoly p = restricted_invariant(s, rd);
    ZetaPolynomial z = zeta_polynomial(s, rd, nu);
    acc = poly_add(acc, poly_mul(poly_embed(p, nv, 0), poly_embed(z.poly, nv, r)));
  }
  return acc == gj;
}

long double gaussian_eigen_check(const RootData& rd, const BigRational& nu,
                                 const std::vector<BigRational>& lambda, int trunc,
                                 long double quad_tol, unsigned long long seed) {
  if (static_cast<int>(lambda.size()) != rd.r)
    throw std::invalid_argument("gaussian_eigen_check: lambda size must equal the rank");
  if (quad_tol <= 0) quad_tol = rd.r == 1 ? 1e-10L : 1e-7L;
  BesselSeries series = bessel_series(rd, even_up(trunc));
  std::vector<long double> lam = to_ld(lambda);
  NumericKernel kernel = substitute_spectral(series.kernel, rd.r, lam);

  FlatDensity wx{rd, BigRational(1) / nu};
  auto num = chamber_integrate_complex(
      [&](const std::vector<long double>& y) { return kernel.eval(y); }, wx, quad_tol, seed);
  auto den = chamber_integrate_complex(
      [](const std::vector<long double>&) { return std::complex<long double>(1); }, wx,
      quad_tol, seed);

  long double kappa = flat_kappa(rd.kind);
  long double target = std::exp(-kappa * sum_sq_ld(lam) / (2 * rat_to_ld(nu)));
  std::complex<long double> ratio = num.value / den.value / target;
  return std::abs(ratio - std::complex<long double>(1));
}

Eigen::MatrixXd zeta_gram(const RootData& rd, const BigRational& nu, int max_weight,
                          unsigned long long seed, long long mc_min_samples,
                          bool pair_difference_density) {
  auto sigs = spherical_signatures(rd.kind, rd.r, max_weight);
  const int n = static_cast<int>(sigs.size());
  const long double nu_ld = rat_to_ld(nu);

  std::vector<NumericKernel> zh(n);
  for (int i = 0; i < n; ++i) {
    ZetaPolynomial z = zeta_polynomial(sigs[i], rd, nu);
    long double scale = std::sqrt(rat_to_ld(fock_norm_closed(sigs[i], rd)) *
                                  std::pow(nu_ld, -signature_weight(sigs[i])));
    zh[i] = to_numeric(z.poly);
    for (auto& t : zh[i].terms) t.second *= scale;
  }

  FlatDensity w{rd, nu, pair_difference_density};
  Eigen::MatrixXd gram(n, n);
  const bool use_mc = rd.r >= 3 || mc_min_samples > 0;

  if (!use_mc) {
    long double pref;
    if (pair_difference_density) {
      // No closed bookkeeping for the flagged density; normalize by raw mass.
      long double mass_tol = rd.r == 1 ? 1e-10L : 1e-8L;
      pref = 1.0L / chamber_integrate([](const std::vector<long double>&) { return 1.0L; }, w,
                                      mass_tol, seed)
                        .value.real();
    } else {
      pref = c1_normalization(rd, nu) *
             std::pow(2.0L * kPi / nu_ld, w.flat_dimension() / 2.0L);
    }
    long double quad_tol = rd.r == 1 ? 1e-10L : 1e-8L;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        auto res = chamber_integrate_complex(
            [&](const std::vector<long double>& lam) {
              return zh[i].eval(lam) * std::conj(zh[j].eval(lam));
            },
            w, quad_tol, seed);
        gram(i, j) = gram(j, i) = static_cast<double>(pref * res.value.real());
      }
    return gram;
  }

  // One sample stream shared by every entry plus the plain mass, so the final
  // ratio cancels the normalizing constant and most of the common variance.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  long long samples = mc_min_samples > 0 ? mc_min_samples : 1000000;
  auto outs = chamber_integrate_mc_multi(
      [&](const std::vector<long double>& lam, std::vector<std::complex<long double>>& out) {
        std::vector<std::complex<long double>> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = zh[i].eval(lam);
        for (size_t k = 0; k < pairs.size(); ++k)
          out[k] = vals[pairs[k].first] * std::conj(vals[pairs[k].second]);
        out[pairs.size()] = 1;
      },
      pairs.size() + 1, w, samples, seed);
  std::complex<long double> mass = outs.back().value;
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    gram(i, j) = gram(j, i) = static_cast<double>((outs[k].value / mass).real());
  }
  return gram;
}

FourierRatioReport fourier_ratio_check(const RootData& rd, const BigRational& nu,
                                       const std::vector<SphericalSignature>& sigs,
                                       const std::vector<std::vector<BigRational>>& lambda_points,
                                       long double quad_tol, unsigned long long seed) {
  if (sigs.empty() || lambda_points.empty())
    throw std::invalid_argument("fourier_ratio_check: needs at least one signature and point");
  if (quad_tol <= 0) quad_tol = rd.r == 1 ? 1e-11L : 1e-8L;
  const long double kappa = flat_kappa(rd.kind);
  const long double nu_ld = rat_to_ld(nu);

  int maxw = 0;
  for (const auto& s : sigs) maxw = std::max(maxw, signature_weight(s));
  // Tail bound: with per-direction variance 1/(nu*kappa) and spectral points of
  // modulus <= 3/2, terms beyond degree ~ weight+36 are below the ld epsilon.
  BesselSeries series = bessel_series(rd, even_up(maxw + 36));
  FlatDensity wx{rd, BigRational(1) / nu};

  FourierRatioReport rep;
  std::vector<long double> ratios;
  std::vector<int> weights;
  for (const auto& s : sigs) {
    const int d = signature_weight(s);
    ZetaPolynomial z = zeta_polynomial(s, rd, nu);
    NumericKernel pn = to_numeric(restricted_invariant(s, rd));
    long double norm = rat_to_ld(fock_norm_closed(s, rd)) * std::pow(nu_ld, -d);
    for (auto lambda : lambda_points) {
      std::complex<long double> zval;
      for (int tries = 0;; ++tries) {
        std::vector<std::complex<long double>> pt;
        for (const auto& c : lambda) pt.emplace_back(rat_to_ld(c), 0.0L);
        zval = poly_eval_numeric(z.poly, pt);
        if (std::abs(zval) > 1e-8L) break;
        if (tries >= 8) throw std::runtime_error("fourier_ratio_check: spectral point stuck on a zero");
        for (auto& c : lambda) c += BigRational(1, 7);
      }
      std::vector<long double> lam = to_ld(lambda);
      NumericKernel kernel = substitute_spectral(series.kernel, rd.r, lam);
      auto q = chamber_integrate_complex(
          [&](const std::vector<long double>& y) { return pn.eval(y) * kernel.eval(y); }, wx,
          quad_tol, seed);
      std::complex<long double> denom =
          zval * norm * std::exp(-kappa * sum_sq_ld(lam) / (2 * nu_ld));
      std::complex<long double> ratio = q.value / denom;
      if (std::abs(ratio.imag()) > 1e-5L * std::abs(ratio.real()))
        throw std::runtime_error("fourier_ratio_check: ratio has a significant imaginary part");
      ratios.push_back(ratio.real());
      weights.push_back(d);
    }
  }

  long double mean = 0;
  for (long double v : ratios) mean += v;
  mean /= static_cast<long double>(ratios.size());
  rep.constant = mean;
  rep.samples = static_cast<long long>(ratios.size());
  for (long double v : ratios)
    rep.max_spread = std::max(rep.max_spread, std::abs(v - mean) / std::abs(mean));
  // All plain ratios sharing one sign is exactly the statement that the
  // (-nu)^{|n|}-twisted form alternates with the parity of |n|.
  rep.signs_alternate = true;
  for (size_t k = 0; k < ratios.size(); ++k) {
    long double twisted = ratios[k] * std::pow(-1.0L, weights[k]);
    if (twisted * std::pow(-1.0L, weights[k]) * mean <= 0) rep.signs_alternate = false;
  }
  return rep;
}

}  // namespace dunklcore
