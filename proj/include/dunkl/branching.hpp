#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/jack.hpp"
#include "dunkl/weylops.hpp"

namespace dunklcore {

// One row of the classification of irreducible real bounded symmetric
// subdomains: ambient pair (g, k), real pair (h, l), and the restricted root
// system of the real form. Rows 1-9 are parametric families; the strings
// keep the parameters symbolic and domain_instantiate() produces numbers.
enum class SigmaKind { B, BC, C, D };

std::string sigma_kind_str(SigmaKind k);

struct DomainRecord {
  int row = 0;  // 1-based position in the table
  std::string g_name, k_name, h_name, l_name;
  SigmaKind sigma;
  std::string sigma_label;   // e.g. "D_r", "BC_1"
  std::string param_names;   // "", "r", "r,b", "p,q", or "p"
};

// Concrete numeric data for one instantiated row.
struct DomainInstance {
  int row = 0;
  SigmaKind sigma;
  int rank = 0;
  BigRational a;       // multiplicity on the difference roots
  BigRational iota;    // multiplicity bundle on the sign roots (1 for kind D)
  BigRational h_mult;  // extra short/double multiplicity (B/BC rows)
  int d = 0;           // real dimension of the ambient space
  int genus = 0;
  int r_prime = 0;     // rank of the complex domain
  BigRational a_prime; // complex-side multiplicity
};

std::vector<DomainRecord> domain_table();

// p1, p2 feed the row's parameters in the order given by param_names; unused
// parameters are ignored. Throws when a parameter is out of the family's
// range (e.g. even r for the odd-rank family).
DomainInstance domain_instantiate(int row, int p1 = 0, int p2 = 0);

// Enforces the rank/multiplicity relations between the real and complex
// sides and the dimension bookkeeping d = r*iota + r(r-1)a + r*h.
void domain_instance_check(const DomainInstance& inst);

// The dimension count claimed by the rank-one reduction argument
// (r/2 plus half the total root multiplicity) next to the stored dimension;
// the two differ by r/2 on every row, which is why d is stored explicitly.
std::pair<BigRational, int> domain_dimension_diagnostic(const DomainInstance& inst);

// Spherical signature: the tuples n for which the complex polynomial space
// contains an L-invariant vector, parametrized by a partition m (and for
// kind D a scalar power). Kind D representatives are canonicalized to
// m_r = 0 via the shift (m, ms) -> (m - t, ms + 2t).
struct SphericalSignature {
  Kind kind = Kind::C;  // C or D
  Partition m;
  int m_scalar = 0;     // kind D only
  std::vector<int> n;
};

// Builds the signature with n = (m1,m1,...,mr,mr) for kind C and
// n_j = 2 m_j + m_scalar for kind D (after canonicalization).
SphericalSignature signature_from_m(const Partition& m, int m_scalar, Kind kind);

// Inverse map: the canonical (m, m_scalar) when n is spherical, else empty.
std::optional<SphericalSignature> is_spherical(const std::vector<int>& n, Kind kind);

int signature_weight(const SphericalSignature& s);

std::string signature_to_json(const SphericalSignature& s);

// Eigenvalue of the complex-side invariant operator with shift alpha:
// prod_{j=1}^{r'} ((a'/2)(r'-j) + 1 + alpha + n_j).
BigRational capelli_eigenvalue_complex(const std::vector<int>& n, int r_prime,
                                       const BigRational& a_prime, long alpha);

// Real-side eigenvalue. Kind C pairs two factors per part; kind D carries
// the scalar power. Equals the complex-side value under the rank and
// multiplicity relations (r'=2r, a=2a', iota=2+a' resp. r'=r, a'=2a).
BigRational capelli_eigenvalue_real(const SphericalSignature& s, const RootData& rd,
                                    long alpha);

// Restriction of the L-invariant polynomial to the real diagonal:
// Omega_m(x_1^2,...,x_r^2), times (x_1...x_r)^{m_scalar} for kind D.
MultiPoly restricted_invariant(const SphericalSignature& s, const RootData& rd);

// Closed form for the squared Fock-space norm of the restricted invariant,
// as a telescoped product of rational Pochhammer factors.
BigRational fock_norm_closed(const SphericalSignature& s, const RootData& rd);

// One-step ratio |Omega_m|^2 / |Omega_{m with part j lowered}|^2 (1-based j)
// coming from the raising/lowering adjointness; m_scalar held fixed.
BigRational norm_ratio_recursion(const SphericalSignature& s, int j, const RootData& rd);

// prod_j prod_{k=1}^{n_j} (nu - (a'/2)(j-1) + k - 1).
BigRational generalized_pochhammer(const BigRational& nu, const std::vector<int>& n,
                                   int r_prime, const BigRational& a_prime);

// Weighted Bergman norm square: fock_norm_closed / (nu)_n with the complex
// parameters induced by rd. Throws when (nu)_n vanishes.
BigRational bergman_norm_sq(const SphericalSignature& s, const RootData& rd,
                            const BigRational& nu);

}  // namespace dunklcore
