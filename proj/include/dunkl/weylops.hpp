#pragma once

#include "dunkl/multipoly.hpp"
#include "dunkl/rational.hpp"

namespace dunklcore {

enum class Kind { A, C, D };

std::string kind_str(Kind k);
Kind kind_parse(const std::string& s);

// Root-system data driving every operator. `a` is the multiplicity of the
// half-sum roots (pair terms); `iota - 1` the multiplicity of the single-variable
// roots (kind C only; must be left unset otherwise). Rational multiplicities are
// allowed so the Jack parameter can be varied continuously.
struct RootData {
  Kind kind;
  int r;
  BigRational a;
  BigRational iota;  // meaningful iff kind == C
  bool has_iota = false;
};

RootData root_data_a(int r, const BigRational& a);
RootData root_data_c(int r, const BigRational& a, const BigRational& iota);
// Kind D: rank 1 and 2 are accepted for testing even though the geometric
// source cases start at r = 3; at r = 1 every pair term is empty.
RootData root_data_d(int r, const BigRational& a);

// Generators of the relevant reflection groups: Swap is s_ij (exchange),
// SignedSwap is the composition exchanging and negating both variables, Sign
// negates one variable. Indices are 1-based like the operator subscripts.
struct Reflection {
  enum Type { Swap, SignedSwap, Sign } type;
  int i, j;  // Sign uses only i

  static Reflection swap(int i, int j) { return {Swap, i, j}; }
  static Reflection signed_swap(int i, int j) { return {SignedSwap, i, j}; }
  static Reflection sign(int j) { return {Sign, j, j}; }
};

MultiPoly apply_reflection(const MultiPoly& p, const Reflection& w);

// (p - s*p)/(x_i - sign*x_j): s = Swap(i,j) for sign=+1, SignedSwap(i,j) for
// sign=-1. The quotient is always exact; a nonzero remainder is a hard error.
MultiPoly divided_difference(const MultiPoly& p, int i, int j, int sign);

// (p - Sign(j)*p)/x_j, the single-variable difference quotient (kind C).
MultiPoly sign_difference_quotient(const MultiPoly& p, int j);

// Dunkl operator D_j, 1 <= j <= rd.r. Variables beyond rd.r are spectators.
MultiPoly dunkl(const MultiPoly& p, int j, const RootData& rd);

// Cherednik operator U_j (kinds A and D; kind C has no standalone form and is
// reached through compositions).
MultiPoly cherednik(const MultiPoly& p, int j, const RootData& rd);

// D_1 D_2 ... D_r p (the D_j commute, so the order is immaterial).
MultiPoly prod_dunkl(const MultiPoly& p, const RootData& rd);

// (U_1+alpha)(U_2+alpha)...(U_r+alpha) p with U_r applied first.
MultiPoly prod_cherednik_shifted(const MultiPoly& p, const RootData& rd,
                                 const BigRational& alpha);

// f(D) g: substitutes D_k for the k-th variable of f (well-defined by
// commutativity) and applies to g. f must have exactly rd.r variables; g at
// least rd.r (extra variables ride along untouched).
MultiPoly poly_of_dunkl(const MultiPoly& f, const MultiPoly& g, const RootData& rd);

// (f,g)_Sigma = f(cD)conj(g)(0) with c = 1/2 for kind C and c = 1 for kind D.
// Kind A is rejected at this entry point.
GaussRational sigma_inner(const MultiPoly& f, const MultiPoly& g, const RootData& rd);

// Conjugated product operator (Px)^{-alpha} (PD) (Px)^{1+alpha} for kinds A, D,
// and 2^{-2r} (Px)^{-2alpha} (PD^2) (Px)^{2(1+alpha)} for kind C (the square of
// each variable is what restricts there). Division must be exact; it is on
// W-invariant input of the right parity.
MultiPoly res_cayley(const MultiPoly& p, long alpha, const RootData& rd);

// p(D) g computed as ((-1)^m/m!) (ad F0)^m (p . ) applied to g, where m = deg p
// (homogeneous) and F0 = -(1/2) sum D_j^2. Independent route to poly_of_dunkl.
MultiPoly heckman_pd(const MultiPoly& p, const MultiPoly& g, const RootData& rd);

}  // namespace dunklcore
