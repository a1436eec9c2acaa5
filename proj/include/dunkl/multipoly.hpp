#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dunkl/partitions.hpp"
#include "dunkl/rational.hpp"

namespace dunklcore {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over the Gaussian rationals. Terms are held in
// a lexicographically ordered map with no zero coefficients, so equality is map
// equality and iteration order is canonical for serialization.
struct MultiPoly {
  int nvars = 0;
  std::map<Exponent, GaussRational> terms;

  MultiPoly() = default;
  explicit MultiPoly(int n) : nvars(n) {}

  bool is_zero() const { return terms.empty(); }

  // Adds c * x^e, pruning the term if the sum cancels.
  void add_term(const Exponent& e, const GaussRational& c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
};

MultiPoly poly_zero(int nvars);
MultiPoly poly_const(int nvars, const GaussRational& c);
MultiPoly poly_var(int nvars, int j);  // x_j, 0-based
MultiPoly poly_monomial(int nvars, const Exponent& e, const GaussRational& c);

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_neg(const MultiPoly& p);
MultiPoly poly_scale(const MultiPoly& p, const GaussRational& c);
MultiPoly poly_pow(const MultiPoly& p, int k);

GaussRational poly_eval(const MultiPoly& p, const std::vector<GaussRational>& point);
std::complex<long double> poly_eval_numeric(const MultiPoly& p,
                                            const std::vector<std::complex<long double>>& point);

GaussRational poly_coeff(const MultiPoly& p, const Exponent& e);
GaussRational poly_constant_term(const MultiPoly& p);

// Total degree; -1 for the zero polynomial.
int poly_total_degree(const MultiPoly& p);
// Max total degree counting only variables in [begin, end); -1 for zero.
int poly_degree_in_block(const MultiPoly& p, int begin, int end);

MultiPoly partial_derivative(const MultiPoly& p, int j);

// Keeps the terms whose degree in variables [begin, end) equals d.
MultiPoly poly_component_in_block(const MultiPoly& p, int begin, int end, int d);
// Drops the terms whose degree in variables [begin, end) exceeds maxdeg.
MultiPoly poly_truncate_block(const MultiPoly& p, int begin, int end, int maxdeg);

// x_k -> c * x_k for k in [begin, end).
MultiPoly poly_scale_vars(const MultiPoly& p, const GaussRational& c, int begin, int end);
// Reinterprets p in new_nvars variables, shifting its variables by offset.
MultiPoly poly_embed(const MultiPoly& p, int new_nvars, int offset);
// y_k -> x_k^2 for every variable.
MultiPoly poly_square_vars(const MultiPoly& p);
// Conjugates every coefficient.
MultiPoly poly_conj(const MultiPoly& p);

// Exact division by x_j; throws if any term lacks the factor.
MultiPoly poly_div_var(const MultiPoly& p, int j, int power = 1);
// Exact division by (x_i - sign*x_j), sign = +1 or -1; throws on nonzero remainder.
MultiPoly poly_div_linear(const MultiPoly& p, int i, int j, int sign);

// Monomial symmetric polynomial m_mu in r variables.
MultiPoly monomial_symmetric(const Partition& mu, int r);
// Expands a symmetric polynomial over the monomial symmetric basis; throws if p
// is not symmetric (the reassembled sum must reproduce p exactly).
std::map<Partition, GaussRational> expand_symmetric(const MultiPoly& p);

// JSON round-trip: {"vars": n, "terms": [{"exp": [..], "re": "p/q", "im": "p/q"}]},
// terms in lexicographic exponent order.
std::string poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const std::string& text);

std::string poly_str(const MultiPoly& p);  // human-readable, for logs and errors

}  // namespace dunklcore
