#include "dunkl/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dunklcore {

bool is_partition(const Partition& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return false;
    if (i + 1 < m.size() && m[i] < m[i + 1]) return false;
  }
  return true;
}

Partition pad_partition(const Partition& m, int r) {
  if (!is_partition(m)) throw std::invalid_argument("pad_partition: not weakly decreasing");
  if (static_cast<int>(m.size()) > r) {
    for (size_t i = r; i < m.size(); ++i)
      if (m[i] != 0) throw std::invalid_argument("pad_partition: more than r nonzero parts");
  }
  Partition out(m.begin(), m.begin() + std::min<size_t>(m.size(), r));
  out.resize(r, 0);
  return out;
}

int partition_weight(const Partition& m) { return std::accumulate(m.begin(), m.end(), 0); }

static void partitions_rec(int n, int max_parts, int bound, Partition& cur,
                           std::vector<Partition>& out) {
  if (max_parts == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int first = std::min(n, bound); first >= (max_parts == 1 ? n : 0); --first) {
    if (first * max_parts < n) break;
    cur.push_back(first);
    partitions_rec(n - first, max_parts - 1, first, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  if (n < 0 || max_parts < 1) throw std::invalid_argument("partitions_of: bad arguments");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, max_parts, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n, int max_parts) {
  std::vector<Partition> out;
  for (int w = 0; w <= n; ++w) {
    auto batch = partitions_of(w, max_parts);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (partition_weight(mu) != partition_weight(nu))
    throw std::invalid_argument("dominance_leq: weights differ");
  int smu = 0, snu = 0;
  size_t len = std::max(mu.size(), nu.size());
  for (size_t i = 0; i < len; ++i) {
    smu += i < mu.size() ? mu[i] : 0;
    snu += i < nu.size() ? nu[i] : 0;
    if (smu > snu) return false;
  }
  return true;
}

std::optional<Partition> decrement_part(const Partition& m, int j) {
  if (j < 0 || j >= static_cast<int>(m.size())) return std::nullopt;
  Partition out = m;
  out[j] -= 1;
  if (!is_partition(out)) return std::nullopt;
  return out;
}

std::optional<Partition> increment_part(const Partition& m, int j) {
  if (j < 0 || j >= static_cast<int>(m.size())) return std::nullopt;
  Partition out = m;
  out[j] += 1;
  if (!is_partition(out)) return std::nullopt;
  return out;
}

long distinct_permutation_count(const Partition& m) {
  long total = 1;
  for (size_t i = 1; i <= m.size(); ++i) total *= static_cast<long>(i);
  std::map<int, long> mult;
  for (int part : m) mult[part]++;
  for (auto& [part, k] : mult) {
    (void)part;
    for (long i = 2; i <= k; ++i) total /= i;
  }
  return total;
}

void MultiPoly::add_term(const Exponent& e, const GaussRational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

MultiPoly poly_zero(int nvars) { return MultiPoly(nvars); }

MultiPoly poly_const(int nvars, const GaussRational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly poly_var(int nvars, int j) {
  if (j < 0 || j >= nvars) throw std::out_of_range("poly_var: index");
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e[j] = 1;
  p.add_term(e, GaussRational(1));
  return p;
}

MultiPoly poly_monomial(int nvars, const Exponent& e, const GaussRational& c) {
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

static void check_vars(const MultiPoly& p, const MultiPoly& q, const char* who) {
  if (p.nvars != q.nvars)
    throw std::invalid_argument(std::string(who) + ": variable-count mismatch");
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) {
  check_vars(p, q, "poly_add");
  MultiPoly out = p;
  for (const auto& [e, c] : q.terms) out.add_term(e, c);
  return out;
}

MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q) {
  check_vars(p, q, "poly_sub");
  MultiPoly out = p;
  for (const auto& [e, c] : q.terms) out.add_term(e, -c);
  return out;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  check_vars(p, q, "poly_mul");
  MultiPoly out(p.nvars);
  Exponent e(p.nvars);
  for (const auto& [ep, cp] : p.terms) {
    for (const auto& [eq, cq] : q.terms) {
      for (int k = 0; k < p.nvars; ++k) e[k] = ep[k] + eq[k];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

MultiPoly poly_neg(const MultiPoly& p) {
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms) out.terms.emplace(e, -c);
  return out;
}

MultiPoly poly_scale(const MultiPoly& p, const GaussRational& c) {
  MultiPoly out(p.nvars);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : p.terms) out.terms.emplace(e, k * c);
  return out;
}

MultiPoly poly_pow(const MultiPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
  MultiPoly acc = poly_const(p.nvars, GaussRational(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1) acc = poly_mul(acc, base);
    if (k >>= 1) base = poly_mul(base, base);
  }
  return acc;
}

GaussRational poly_eval(const MultiPoly& p, const std::vector<GaussRational>& point) {
  if (static_cast<int>(point.size()) != p.nvars)
    throw std::invalid_argument("poly_eval: point length mismatch");
  GaussRational total(0);
  for (const auto& [e, c] : p.terms) {
    GaussRational t = c;
    for (int k = 0; k < p.nvars; ++k)
      for (int i = 0; i < e[k]; ++i) t *= point[k];
    total += t;
  }
  return total;
}

std::complex<long double> poly_eval_numeric(const MultiPoly& p,
                                            const std::vector<std::complex<long double>>& point) {
  if (static_cast<int>(point.size()) != p.nvars)
    throw std::invalid_argument("poly_eval_numeric: point length mismatch");
  std::complex<long double> total = 0;
  for (const auto& [e, c] : p.terms) {
    std::complex<long double> t(rat_long_double(c.re), rat_long_double(c.im));
    for (int k = 0; k < p.nvars; ++k) {
      if (e[k] == 0) continue;
      std::complex<long double> b = point[k], acc = 1;
      int n = e[k];
      while (n > 0) {
        if (n & 1) acc *= b;
        if (n >>= 1) b *= b;
      }
      t *= acc;
    }
    total += t;
  }
  return total;
}

GaussRational poly_coeff(const MultiPoly& p, const Exponent& e) {
  auto it = p.terms.find(e);
  return it == p.terms.end() ? GaussRational(0) : it->second;
}

GaussRational poly_constant_term(const MultiPoly& p) {
  return poly_coeff(p, Exponent(p.nvars, 0));
}

int poly_total_degree(const MultiPoly& p) {
  int d = -1;
  for (const auto& [e, c] : p.terms) {
    (void)c;
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

int poly_degree_in_block(const MultiPoly& p, int begin, int end) {
  int d = -1;
  for (const auto& [e, c] : p.terms) {
    (void)c;
    d = std::max(d, std::accumulate(e.begin() + begin, e.begin() + end, 0));
  }
  return d;
}

MultiPoly partial_derivative(const MultiPoly& p, int j) {
  if (j < 0 || j >= p.nvars) throw std::out_of_range("partial_derivative: index");
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    if (e[j] == 0) continue;
    Exponent d = e;
    d[j] -= 1;
    out.add_term(d, c * GaussRational(e[j]));
  }
  return out;
}

MultiPoly poly_component_in_block(const MultiPoly& p, int begin, int end, int d) {
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms)
    if (std::accumulate(e.begin() + begin, e.begin() + end, 0) == d) out.terms.emplace(e, c);
  return out;
}

MultiPoly poly_truncate_block(const MultiPoly& p, int begin, int end, int maxdeg) {
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms)
    if (std::accumulate(e.begin() + begin, e.begin() + end, 0) <= maxdeg) out.terms.emplace(e, c);
  return out;
}

MultiPoly poly_scale_vars(const MultiPoly& p, const GaussRational& c, int begin, int end) {
  MultiPoly out(p.nvars);
  for (const auto& [e, k] : p.terms) {
    int d = std::accumulate(e.begin() + begin, e.begin() + end, 0);
    GaussRational f = k;
    for (int i = 0; i < d; ++i) f *= c;
    out.add_term(e, f);
  }
  return out;
}

MultiPoly poly_embed(const MultiPoly& p, int new_nvars, int offset) {
  if (offset < 0 || offset + p.nvars > new_nvars)
    throw std::invalid_argument("poly_embed: block out of range");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : p.terms) {
    Exponent ne(new_nvars, 0);
    std::copy(e.begin(), e.end(), ne.begin() + offset);
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly poly_square_vars(const MultiPoly& p) {
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    Exponent ne = e;
    for (int& x : ne) x *= 2;
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly poly_conj(const MultiPoly& p) {
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms) out.terms.emplace(e, c.conj());
  return out;
}

MultiPoly poly_div_var(const MultiPoly& p, int j, int power) {
  MultiPoly out(p.nvars);
  for (const auto& [e, c] : p.terms) {
    if (e[j] < power)
      throw std::domain_error("poly_div_var: term not divisible by variable power");
    Exponent ne = e;
    ne[j] -= power;
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly poly_div_linear(const MultiPoly& p, int i, int j, int sign) {
  if (i == j || i < 0 || j < 0 || i >= p.nvars || j >= p.nvars || (sign != 1 && sign != -1))
    throw std::invalid_argument("poly_div_linear: bad arguments");
  // Synthetic division in x_i by (x_i - u) with u = sign*x_j: descending in the
  // x_i-degree, b_{k-1} = c_k + u*b_k; the remainder c_0 + u*b_0 must vanish.
  int top = 0;
  for (const auto& [e, c] : p.terms) {
    (void)c;
    top = std::max(top, e[i]);
  }
  std::vector<MultiPoly> comp(top + 1, MultiPoly(p.nvars));
  for (const auto& [e, c] : p.terms) {
    Exponent ne = e;
    int k = ne[i];
    ne[i] = 0;
    comp[k].add_term(ne, c);
  }
  auto mul_u = [&](const MultiPoly& q) {
    MultiPoly out(p.nvars);
    for (const auto& [e, c] : q.terms) {
      Exponent ne = e;
      ne[j] += 1;
      out.terms.emplace(std::move(ne), sign == 1 ? c : -c);
    }
    return out;
  };
  MultiPoly quotient(p.nvars);
  MultiPoly carry(p.nvars);  // b_k
  for (int k = top; k >= 1; --k) {
    MultiPoly bk = poly_add(comp[k], mul_u(carry));
    for (const auto& [e, c] : bk.terms) {
      Exponent ne = e;
      ne[i] = k - 1;
      quotient.add_term(ne, c);
    }
    carry = std::move(bk);
  }
  MultiPoly rem = poly_add(comp[0], mul_u(carry));
  if (!rem.is_zero())
    throw std::domain_error("poly_div_linear: nonzero remainder (input not divisible)");
  return quotient;
}

MultiPoly monomial_symmetric(const Partition& mu, int r) {
  Partition m = pad_partition(mu, r);
  MultiPoly out(r);
  Exponent e = m;
  std::sort(e.begin(), e.end());
  do {
    out.terms.emplace(e, GaussRational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::map<Partition, GaussRational> expand_symmetric(const MultiPoly& p) {
  std::map<Partition, GaussRational> out;
  for (const auto& [e, c] : p.terms) {
    Exponent s = e;
    std::sort(s.begin(), s.end(), std::greater<int>());
    if (s == e) out.emplace(s, c);
  }
  MultiPoly rebuilt(p.nvars);
  for (const auto& [m, c] : out) rebuilt = poly_add(rebuilt, poly_scale(monomial_symmetric(m, p.nvars), c));
  if (rebuilt != p) throw std::invalid_argument("expand_symmetric: polynomial is not symmetric");
  return out;
}

std::string poly_to_json(const MultiPoly& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.nvars;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["re"] = rat_str(c.re);
    t["im"] = rat_str(c.im);
    j["terms"].push_back(t);
  }
  return j.dump();
}

MultiPoly poly_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MultiPoly p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    GaussRational c(rat_parse(t.at("re").get<std::string>()),
                    rat_parse(t.at("im").get<std::string>()));
    p.add_term(e, c);
  }
  return p;
}

std::string poly_str(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    os << gauss_str(c);
    for (int k = 0; k < p.nvars; ++k) {
      if (e[k] == 0) continue;
      os << "*x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

}  // namespace dunklcore
