#include "dunkl/jack.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dunklcore {

namespace {

Partition trim_zeros(Partition m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

}  // namespace

BigRational jack_eigenvalue(const Partition& m, int r, const BigRational& a,
                            const BigRational& alpha) {
  Partition mm = trim_zeros(m);
  if (static_cast<int>(mm.size()) > r)
    throw std::invalid_argument("jack_eigenvalue: more parts than rank");
  mm = pad_partition(mm, r);
  BigRational out = 1;
  for (int k = 1; k <= r; ++k) out *= a / 2 * (r - k) + 1 + alpha + mm[k - 1];
  return out;
}

namespace {

void require_symmetric(const MultiPoly& p, const char* who) {
  for (int i = 0; i + 1 < p.nvars; ++i)
    if (!(apply_reflection(p, Reflection::swap(i + 1, i + 2)) == p))
      throw std::invalid_argument(std::string(who) + ": polynomial is not symmetric");
}

std::string partition_key(const Partition& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

}  // namespace

JackPoly jack_omega(const Partition& m, int r, const BigRational& a) {
  if (!is_partition(m)) throw std::invalid_argument("jack_omega: not a partition");
  Partition trimmed = trim_zeros(m);
  if (static_cast<int>(trimmed.size()) > r)
    throw std::invalid_argument("jack_omega: more parts than rank");
  if (a <= 0) throw std::invalid_argument("jack_omega: multiplicity must be positive");
  RootData rd = root_data_a(r, a);
  Partition top = pad_partition(trimmed, r);
  int weight = partition_weight(top);

  // Basis in lexicographically descending order refines dominance, so the
  // operator matrices below are triangular with the eigenvalues on the
  // diagonal.
  std::vector<Partition> basis = partitions_of(weight, r);
  size_t ntop = 0;
  while (ntop < basis.size() && basis[ntop] != top) ++ntop;
  if (ntop == basis.size()) throw std::logic_error("jack_omega: label missing from basis");

  const long max_shift = r + 2;
  // columns[alpha][nu] = symmetric expansion of the shifted product applied
  // to the monomial-symmetric polynomial labeled nu; filled on demand.
  std::vector<std::vector<std::map<Partition, GaussRational>>> columns(
      max_shift + 1, std::vector<std::map<Partition, GaussRational>>(basis.size()));
  std::vector<std::vector<bool>> have(max_shift + 1,
                                      std::vector<bool>(basis.size(), false));
  auto column = [&](long alpha, size_t nu) -> const std::map<Partition, GaussRational>& {
    if (!have[alpha][nu]) {
      MultiPoly img = prod_cherednik_shifted(monomial_symmetric(basis[nu], r), rd,
                                             BigRational(alpha));
      columns[alpha][nu] = expand_symmetric(img);
      have[alpha][nu] = true;
    }
    return columns[alpha][nu];
  };

  std::vector<BigRational> c(basis.size(), 0);
  c[ntop] = 1;
  for (size_t k = ntop + 1; k < basis.size(); ++k) {
    const Partition& mu = basis[k];
    long shift = -1;
    for (long al = 0; al <= max_shift; ++al)
      if (jack_eigenvalue(mu, r, a, al) != jack_eigenvalue(top, r, a, al)) {
        shift = al;
        break;
      }
    if (shift < 0)
      throw std::domain_error("jack_omega: degenerate multiplicity a=" + rat_str(a) +
                              ", eigenvalues coincide for " + partition_key(top) +
                              " and " + partition_key(mu));
    BigRational num = 0;
    for (size_t nu = ntop; nu < k; ++nu) {
      if (c[nu] == 0) continue;
      const auto& col = column(shift, nu);
      auto it = col.find(mu);
      if (it != col.end()) {
        if (!it->second.is_real()) throw std::logic_error("jack_omega: complex entry");
        num += it->second.re * c[nu];
      }
    }
    c[k] = num / (jack_eigenvalue(top, r, a, shift) - jack_eigenvalue(mu, r, a, shift));
  }

  MultiPoly poly = poly_zero(r);
  for (size_t k = ntop; k < basis.size(); ++k)
    if (c[k] != 0)
      poly = poly_add(poly, poly_scale(monomial_symmetric(basis[k], r),
                                       GaussRational(c[k])));

  for (long al : {0L, 1L}) {
    MultiPoly lhs = prod_cherednik_shifted(poly, rd, BigRational(al));
    MultiPoly rhs = poly_scale(poly, GaussRational(jack_eigenvalue(top, r, a, al)));
    if (!(lhs == rhs))
      throw std::logic_error("jack_omega: eigen-equation failed at shift " +
                             std::to_string(al));
  }

  std::vector<GaussRational> ones(r, GaussRational(1));
  GaussRational at_ones = poly_eval(poly, ones);
  if (at_ones.is_zero()) throw std::logic_error("jack_omega: vanishing value at ones");
  poly = poly_scale(poly, GaussRational(1) / at_ones);

  JackPoly jp;
  jp.m = top;
  jp.r = r;
  jp.a = a;
  jp.poly = poly;
  for (const auto& [mu, coeff] : expand_symmetric(poly))
    if (!coeff.is_zero()) jp.coeffs[mu] = coeff.re;
  return jp;
}

BigRational binomial_coeff(const Partition& m, int j, const BigRational& a) {
  if (!is_partition(m)) throw std::invalid_argument("binomial_coeff: not a partition");
  int r = static_cast<int>(m.size());
  if (j < 1 || j > r) throw std::out_of_range("binomial_coeff: part index");
  if (!decrement_part(m, j - 1).has_value()) return 0;
  BigRational out = m[j - 1] + a / 2 * (r - j);
  for (int i = 1; i <= r; ++i) {
    if (i == j) continue;
    BigRational den = m[j - 1] - m[i - 1] + a / 2 * (i - j);
    if (den == 0) throw std::domain_error("binomial_coeff: degenerate multiplicity");
    out *= (m[j - 1] - m[i - 1] + a / 2 * (i - j - 1)) / den;
  }
  return out;
}

BigRational c_coeff(const Partition& m, int j, const BigRational& a) {
  if (!is_partition(m)) throw std::invalid_argument("c_coeff: not a partition");
  int r = static_cast<int>(m.size());
  if (j < 1 || j > r) throw std::out_of_range("c_coeff: part index");
  if (!increment_part(m, j - 1).has_value()) return 0;
  BigRational out = 1;
  for (int i = 1; i <= r; ++i) {
    if (i == j) continue;
    BigRational den = m[j - 1] - m[i - 1] + a / 2 * (i - j);
    if (den == 0) throw std::domain_error("c_coeff: degenerate multiplicity");
    out *= (m[j - 1] - m[i - 1] + a / 2 * (1 + i - j)) / den;
  }
  return out;
}

MultiPoly macdonald_box1(const MultiPoly& p, const BigRational& a) {
  require_symmetric(p, "macdonald_box1");
  int r = p.nvars;
  MultiPoly out(r);
  for (int j = 0; j < r; ++j)
    out = poly_add(out, poly_mul(poly_var(r, j),
                                 partial_derivative(partial_derivative(p, j), j)));
  if (a != 0) {
    MultiPoly pair(r);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        MultiPoly num = poly_sub(poly_mul(poly_var(r, i), partial_derivative(p, i)),
                                 poly_mul(poly_var(r, j), partial_derivative(p, j)));
        pair = poly_add(pair, poly_div_linear(num, i, j, 1));
      }
    out = poly_add(out, poly_scale(pair, GaussRational(a)));
  }
  return out;
}

MultiPoly macdonald_eps1(const MultiPoly& p) {
  require_symmetric(p, "macdonald_eps1");
  MultiPoly out(p.nvars);
  for (int j = 0; j < p.nvars; ++j) out = poly_add(out, partial_derivative(p, j));
  return out;
}

MultiPoly mult_e1(const MultiPoly& p) {
  require_symmetric(p, "mult_e1");
  MultiPoly s(p.nvars);
  for (int j = 0; j < p.nvars; ++j) s = poly_add(s, poly_var(p.nvars, j));
  return poly_mul(s, p);
}

namespace {

BigRational multiplicity_weight(const RootData& rd) {
  // Half of (r + total root multiplicity), the constant part of H0.
  BigRational total = rd.a * rd.r * (rd.r - 1);
  if (rd.kind == Kind::C) total += (rd.iota - 1) * rd.r;
  return (rd.r + total) / 2;
}

}  // namespace

MultiPoly sl2_actions(const MultiPoly& p, Sl2Which which, const RootData& rd) {
  if (rd.kind == Kind::A)
    throw std::invalid_argument("sl2_actions: defined for kinds C and D");
  if (p.nvars != rd.r) throw std::invalid_argument("sl2_actions: rank mismatch");
  switch (which) {
    case Sl2Which::E0: {
      MultiPoly sq(rd.r);
      for (int j = 0; j < rd.r; ++j)
        sq = poly_add(sq, poly_pow(poly_var(rd.r, j), 2));
      if (rd.kind == Kind::D) sq = poly_scale(sq, GaussRational(rat(1, 2)));
      return poly_mul(sq, p);
    }
    case Sl2Which::F0: {
      MultiPoly lap(rd.r);
      for (int j = 1; j <= rd.r; ++j) lap = poly_add(lap, dunkl(dunkl(p, j, rd), j, rd));
      return poly_scale(lap, GaussRational(rd.kind == Kind::C ? rat(-1, 4) : rat(-1, 2)));
    }
    case Sl2Which::H0: {
      MultiPoly out(rd.r);
      for (int j = 0; j < rd.r; ++j)
        out = poly_add(out, poly_mul(poly_var(rd.r, j), partial_derivative(p, j)));
      return poly_add(out, poly_scale(p, GaussRational(multiplicity_weight(rd))));
    }
  }
  throw std::logic_error("sl2_actions");
}

MultiPoly f0_invariant(const MultiPoly& p, const RootData& rd) {
  if (rd.kind == Kind::A)
    throw std::invalid_argument("f0_invariant: defined for kinds C and D");
  if (p.nvars != rd.r) throw std::invalid_argument("f0_invariant: rank mismatch");
  MultiPoly box = macdonald_box1(p, rd.a);
  MultiPoly eps = macdonald_eps1(p);
  if (rd.kind == Kind::C)
    return poly_neg(poly_add(box, poly_scale(eps, GaussRational(rd.iota / 2))));
  return poly_scale(poly_add(box, poly_scale(eps, GaussRational(rat(1, 2)))),
                    GaussRational(-2));
}

MultiPoly e0_invariant(const MultiPoly& p, const RootData& rd) {
  if (rd.kind == Kind::A)
    throw std::invalid_argument("e0_invariant: defined for kinds C and D");
  if (p.nvars != rd.r) throw std::invalid_argument("e0_invariant: rank mismatch");
  MultiPoly out = mult_e1(p);
  if (rd.kind == Kind::D) out = poly_scale(out, GaussRational(rat(1, 2)));
  return out;
}

std::string jack_to_json(const JackPoly& jp) {
  nlohmann::ordered_json j;
  j["m"] = jp.m;
  j["a"] = rat_str(jp.a);
  nlohmann::ordered_json co = nlohmann::ordered_json::object();
  for (const auto& [mu, coeff] : jp.coeffs) co[partition_key(mu)] = rat_str(coeff);
  j["coeffs"] = co;
  return j.dump();
}

}  // namespace dunklcore
