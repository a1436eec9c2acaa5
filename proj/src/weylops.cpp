#include "dunkl/weylops.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace dunklcore {

std::string kind_str(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::C: return "C";
    case Kind::D: return "D";
  }
  throw std::logic_error("kind_str");
}

Kind kind_parse(const std::string& s) {
  if (s == "A" || s == "a") return Kind::A;
  if (s == "C" || s == "c") return Kind::C;
  if (s == "D" || s == "d") return Kind::D;
  throw std::invalid_argument("kind_parse: expected A, C or D, got '" + s + "'");
}

RootData root_data_a(int r, const BigRational& a) {
  if (r < 1) throw std::invalid_argument("root_data_a: rank must be positive");
  return RootData{Kind::A, r, a, 0, false};
}

RootData root_data_c(int r, const BigRational& a, const BigRational& iota) {
  if (r < 1) throw std::invalid_argument("root_data_c: rank must be positive");
  return RootData{Kind::C, r, a, iota, true};
}

RootData root_data_d(int r, const BigRational& a) {
  if (r < 1) throw std::invalid_argument("root_data_d: rank must be positive");
  return RootData{Kind::D, r, a, 0, false};
}

static void check_var_index(const MultiPoly& p, int j, const char* who) {
  if (j < 1 || j > p.nvars) throw std::out_of_range(std::string(who) + ": index out of range");
}

MultiPoly apply_reflection(const MultiPoly& p, const Reflection& w) {
  check_var_index(p, w.i, "apply_reflection");
  if (w.type != Reflection::Sign) check_var_index(p, w.j, "apply_reflection");
  int i0 = w.i - 1, j0 = w.j - 1;
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    Exponent ne = e;
    GaussRational nc = c;
    switch (w.type) {
      case Reflection::Swap:
        std::swap(ne[i0], ne[j0]);
        break;
      case Reflection::SignedSwap:
        std::swap(ne[i0], ne[j0]);
        if ((ne[i0] + ne[j0]) % 2 != 0) nc = -nc;
        break;
      case Reflection::Sign:
        if (ne[i0] % 2 != 0) nc = -nc;
        break;
    }
    out.add_term(ne, nc);
  }
  return out;
}

MultiPoly divided_difference(const MultiPoly& p, int i, int j, int sign) {
  if (i == j) throw std::invalid_argument("divided_difference: equal indices");
  Reflection w = sign == 1 ? Reflection::swap(i, j) : Reflection::signed_swap(i, j);
  MultiPoly num = poly_sub(p, apply_reflection(p, w));
  return poly_div_linear(num, i - 1, j - 1, sign);
}

MultiPoly sign_difference_quotient(const MultiPoly& p, int j) {
  MultiPoly num = poly_sub(p, apply_reflection(p, Reflection::sign(j)));
  return poly_div_var(num, j - 1);
}

MultiPoly dunkl(const MultiPoly& p, int j, const RootData& rd) {
  if (j < 1 || j > rd.r) throw std::out_of_range("dunkl: operator index out of range");
  if (p.nvars < rd.r) throw std::invalid_argument("dunkl: polynomial has fewer variables than rank");
  if (rd.kind == Kind::C && !rd.has_iota) throw std::invalid_argument("dunkl: kind C needs iota");

  BigRational half_a = rd.a / 2;
  MultiPoly out = partial_derivative(p, j - 1);
  if (rd.kind == Kind::C && rd.iota != 1) {
    MultiPoly t = sign_difference_quotient(p, j);
    out = poly_add(out, poly_scale(t, GaussRational((rd.iota - 1) / 2)));
  }
  if (half_a != 0) {
    MultiPoly pair(p.nvars);
    for (int i = 1; i <= rd.r; ++i) {
      if (i == j) continue;
      pair = poly_add(pair, divided_difference(p, j, i, +1));
      if (rd.kind != Kind::A) pair = poly_add(pair, divided_difference(p, j, i, -1));
    }
    out = poly_add(out, poly_scale(pair, GaussRational(half_a)));
  }
  return out;
}

MultiPoly cherednik(const MultiPoly& p, int j, const RootData& rd) {
  if (j < 1 || j > rd.r) throw std::out_of_range("cherednik: operator index out of range");
  if (rd.kind == Kind::C)
    throw std::invalid_argument(
        "cherednik: no standalone kind-C operator; use the composed product forms");
  MultiPoly xp = poly_mul(poly_var(p.nvars, j - 1), p);
  MultiPoly out = dunkl(xp, j, rd);
  if (rd.a != 0) {
    MultiPoly corr(p.nvars);
    for (int i = 1; i < j; ++i) {
      corr = poly_add(corr, apply_reflection(p, Reflection::swap(i, j)));
      if (rd.kind == Kind::D)
        corr = poly_add(corr, apply_reflection(p, Reflection::signed_swap(i, j)));
    }
    out = poly_sub(out, poly_scale(corr, GaussRational(rd.a / 2)));
  }
  return out;
}

MultiPoly prod_dunkl(const MultiPoly& p, const RootData& rd) {
  MultiPoly out = p;
  for (int j = rd.r; j >= 1; --j) out = dunkl(out, j, rd);
  return out;
}

MultiPoly prod_cherednik_shifted(const MultiPoly& p, const RootData& rd,
                                 const BigRational& alpha) {
  MultiPoly out = p;
  for (int j = rd.r; j >= 1; --j) {
    MultiPoly u = cherednik(out, j, rd);
    if (alpha != 0) u = poly_add(u, poly_scale(out, GaussRational(alpha)));
    out = std::move(u);
  }
  return out;
}

MultiPoly poly_of_dunkl(const MultiPoly& f, const MultiPoly& g, const RootData& rd) {
  if (f.nvars != rd.r) throw std::invalid_argument("poly_of_dunkl: f must have rank variables");
  if (g.nvars < rd.r) throw std::invalid_argument("poly_of_dunkl: g has fewer variables than rank");
  MultiPoly out(g.nvars);
  for (const auto& [e, c] : f.terms) {
    std::vector<int> seq;
    for (int k = 0; k < rd.r; ++k) seq.insert(seq.end(), e[k], k + 1);
    MultiPoly t = g;
    for (int k : seq) t = dunkl(t, k, rd);

    // The operators commute, so ascending order is canonical; recompute in a
    // scrambled order and insist on agreement to guard that invariant.
    int distinct = 0;
    for (int k = 0; k < rd.r; ++k) distinct += e[k] > 0 ? 1 : 0;
    if (distinct > 1) {
      unsigned long state = 0x9e3779b97f4a7c15ULL;
      for (int k : seq) state = state * 6364136223846793005ULL + static_cast<unsigned long>(k);
      for (size_t s = seq.size(); s > 1; --s) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(seq[s - 1], seq[(state >> 33) % s]);
      }
      MultiPoly t2 = g;
      for (int k : seq) t2 = dunkl(t2, k, rd);
      if (!(t == t2))
        throw std::logic_error("poly_of_dunkl: operator order changed the result");
    }
    out = poly_add(out, poly_scale(t, c));
  }
  return out;
}

GaussRational sigma_inner(const MultiPoly& f, const MultiPoly& g, const RootData& rd) {
  if (rd.kind == Kind::A)
    throw std::invalid_argument("sigma_inner: defined for kinds C and D only");
  if (f.nvars != rd.r || g.nvars != rd.r)
    throw std::invalid_argument("sigma_inner: rank mismatch");
  MultiPoly fs = rd.kind == Kind::C
                     ? poly_scale_vars(f, GaussRational(rat(1, 2)), 0, f.nvars)
                     : f;
  MultiPoly applied = poly_of_dunkl(fs, poly_conj(g), rd);
  return poly_constant_term(applied);
}

MultiPoly res_cayley(const MultiPoly& p, long alpha, const RootData& rd) {
  if (alpha < 0) throw std::invalid_argument("res_cayley: alpha must be nonnegative");
  if (p.nvars < rd.r) throw std::invalid_argument("res_cayley: rank mismatch");
  int sq = rd.kind == Kind::C ? 2 : 1;
  MultiPoly prod_x = poly_const(p.nvars, GaussRational(1));
  for (int k = 0; k < rd.r; ++k) prod_x = poly_mul(prod_x, poly_var(p.nvars, k));

  MultiPoly out = poly_mul(p, poly_pow(prod_x, sq * (1 + static_cast<int>(alpha))));
  for (int pass = 0; pass < sq; ++pass) out = prod_dunkl(out, rd);
  for (int k = 0; k < rd.r; ++k) out = poly_div_var(out, k, sq * static_cast<int>(alpha));
  if (rd.kind == Kind::C) out = poly_scale(out, GaussRational(rat_pow(rat(1, 4), rd.r)));
  return out;
}

namespace {

MultiPoly apply_f0_half_laplace(const MultiPoly& g, const RootData& rd) {
  MultiPoly out(g.nvars);
  for (int j = 1; j <= rd.r; ++j) out = poly_add(out, dunkl(dunkl(g, j, rd), j, rd));
  return poly_scale(out, GaussRational(rat(-1, 2)));
}

// (ad F0)^k (p . ) applied to g, expanded recursively:
// X_k g = F0 (X_{k-1} g) - X_{k-1} (F0 g).
MultiPoly ad_power_apply(const MultiPoly& p, int k, const MultiPoly& g, const RootData& rd) {
  if (k == 0) return poly_mul(p, g);
  MultiPoly left = apply_f0_half_laplace(ad_power_apply(p, k - 1, g, rd), rd);
  MultiPoly right = ad_power_apply(p, k - 1, apply_f0_half_laplace(g, rd), rd);
  return poly_sub(left, right);
}

}  // namespace

MultiPoly heckman_pd(const MultiPoly& p, const MultiPoly& g, const RootData& rd) {
  int m = poly_total_degree(p);
  if (m < 0) return poly_zero(g.nvars);
  for (const auto& [e, c] : p.terms) {
    (void)c;
    int d = 0;
    for (int x : e) d += x;
    if (d != m) throw std::invalid_argument("heckman_pd: p must be homogeneous");
  }
  MultiPoly out = ad_power_apply(p, m, g, rd);
  BigRational factor = m % 2 == 0 ? 1 : -1;
  for (int i = 2; i <= m; ++i) factor /= i;
  return poly_scale(out, GaussRational(factor));
}

}  // namespace dunklcore
