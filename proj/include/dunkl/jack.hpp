#pragma once

#include <map>
#include <string>

#include "dunkl/weylops.hpp"

namespace dunklcore {

// Symmetric joint eigenfunction of the shifted difference-product operators,
// scaled so that its value at (1,...,1) is 1.
struct JackPoly {
  Partition m;
  int r = 0;
  BigRational a;
  MultiPoly poly;                          // in y_1..y_r
  std::map<Partition, BigRational> coeffs; // monomial-symmetric expansion
};

// Eigenvalue of prod_j (U_j + alpha) on the eigenfunction labeled by m:
// prod_k ((a/2)(r-k) + 1 + alpha + m_k).
BigRational jack_eigenvalue(const Partition& m, int r, const BigRational& a,
                            const BigRational& alpha);

// Solve the triangular eigenproblem over the monomial-symmetric basis of
// weight |m|. Rejects values of a where the relevant eigenvalues collide for
// every shift; verifies the assembled eigenfunction at shifts 0 and 1.
JackPoly jack_omega(const Partition& m, int r, const BigRational& a);

// Generalized binomial coefficient attached to lowering part j (1-based);
// zero whenever the lowered tuple is not a partition. Rank is m.size().
BigRational binomial_coeff(const Partition& m, int j, const BigRational& a);

// Raising coefficient attached to part j (1-based); zero whenever the raised
// tuple is not a partition.
BigRational c_coeff(const Partition& m, int j, const BigRational& a);

// Degree-lowering second-order operator
//   sum_j y_j d_j^2 + a sum_{i<j} (y_i d_i - y_j d_j)/(y_i - y_j)
// on symmetric polynomials.
MultiPoly macdonald_box1(const MultiPoly& p, const BigRational& a);

// sum_j d_j on symmetric polynomials.
MultiPoly macdonald_eps1(const MultiPoly& p);

// Multiplication by y_1 + ... + y_r.
MultiPoly mult_e1(const MultiPoly& p);

enum class Sl2Which { E0, F0, H0 };

// Raising / lowering / grading operators in the x-coordinates, kinds C and D.
// E0 is multiplication by |x|^2 (C) or |x|^2/2 (D); F0 is -(1/4) resp. -(1/2)
// times the sum of squared rational operators; H0 is the Euler operator plus
// r/2 plus half the total multiplicity weight.
MultiPoly sl2_actions(const MultiPoly& p, Sl2Which which, const RootData& rd);

// The same lowering operator conjugated to the invariant coordinates
// y_j = x_j^2: -(box1 + (iota/2) eps1) for kind C, -2(box1 + (1/2) eps1) for
// kind D. Acts on symmetric polynomials in r variables.
MultiPoly f0_invariant(const MultiPoly& p, const RootData& rd);

// Raising operator in invariant coordinates: e1 (C) or e1/2 (D).
MultiPoly e0_invariant(const MultiPoly& p, const RootData& rd);

std::string jack_to_json(const JackPoly& jp);

}  // namespace dunklcore
