#include "dunkl/branching.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace dunklcore {

std::string sigma_kind_str(SigmaKind k) {
  switch (k) {
    case SigmaKind::B: return "B";
    case SigmaKind::BC: return "BC";
    case SigmaKind::C: return "C";
    case SigmaKind::D: return "D";
  }
  throw std::logic_error("sigma_kind_str");
}

std::vector<DomainRecord> domain_table() {
  return {
      {1, "su(r,r)", "s(u(r)+u(r))", "so(r,r)", "so(r)+so(r)", SigmaKind::D, "D_r", "r"},
      {2, "su(r,r+b)", "s(u(r)+u(r+b))", "so(r,r+b)", "so(r)+so(r+b)", SigmaKind::B,
       "B_r", "r,b"},
      {3, "su(2r,2r)", "s(u(2r)+u(2r))", "sp(r,r)", "sp(r)+sp(r)", SigmaKind::C, "C_r",
       "r"},
      {4, "su(2r,2r+2b)", "s(u(2r)+u(2r+2b))", "sp(r,r+b)", "sp(r)+sp(r+b)",
       SigmaKind::BC, "BC_r", "r,b"},
      {5, "so*(4r)", "u(2r)", "so(2r,C)", "so(2r)", SigmaKind::D, "D_r", "r"},
      {6, "so*(2r)", "u(r)", "so(r,C)", "so(r)", SigmaKind::B, "B_(r-1)/2, r odd", "r"},
      {7, "so(2,p+q)", "so(2)+so(p+q)", "so(1,p)+so(1,q)", "so(p)+so(q)", SigmaKind::D,
       "D_2, q>0", "p,q"},
      {8, "so(2,p)", "so(2)+so(p)", "so(1,p)", "so(p)", SigmaKind::C, "C_1", "p"},
      {9, "sp(2r,R)", "u(2r)", "sp(r,C)", "sp(r)", SigmaKind::C, "C_r", "r"},
      {10, "e6(-14)", "so(10)+R", "sp(2,2)", "sp(2)+sp(2)", SigmaKind::B, "B_2", ""},
      {11, "e6(-14)", "so(10)+R", "f4(-20)", "so(9)", SigmaKind::BC, "BC_1", ""},
      {12, "e7(-25)", "e6+R", "su*(8)", "sp(4)", SigmaKind::D, "D_3", ""},
  };
}

DomainInstance domain_instantiate(int row, int p1, int p2) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("domain_instantiate: ") + what);
  };
  DomainInstance t;
  t.row = row;
  int r = p1, b = p2, p = p1, q = p2;
  switch (row) {
    case 1:
      need(r >= 1, "row 1 needs r >= 1");
      t = {row, SigmaKind::D, r, 1, 1, 0, r * r, 2 * r, r, 2};
      break;
    case 2:
      need(r >= 1 && b >= 1, "row 2 needs r, b >= 1");
      t = {row, SigmaKind::B, r, 1, 1, b, r * (r + b), 2 * r + b, r, 2};
      break;
    case 3:
      need(r >= 1, "row 3 needs r >= 1");
      t = {row, SigmaKind::C, r, 4, 4, 0, 4 * r * r, 4 * r, 2 * r, 2};
      break;
    case 4:
      need(r >= 1 && b >= 1, "row 4 needs r, b >= 1");
      t = {row, SigmaKind::BC, r, 4, 4, rat(4 * b), 4 * r * (r + b), 4 * r + 2 * b,
           2 * r, 2};
      break;
    case 5:
      need(r >= 1, "row 5 needs r >= 1");
      t = {row, SigmaKind::D, r, 2, 1, 0, r * (2 * r - 1), 4 * r - 2, r, 4};
      break;
    case 6: {
      need(r >= 3 && r % 2 == 1, "row 6 needs odd r >= 3");
      int rho = (r - 1) / 2;
      t = {row, SigmaKind::B, rho, 2, 1, 2, r * (r - 1) / 2, 2 * r - 2, rho, 4};
      break;
    }
    case 7:
      need(p >= 1 && q >= 1, "row 7 needs p, q >= 1");
      t = {row, SigmaKind::D, 2, rat(p + q - 2, 2), 1, 0, p + q, p + q, 2,
           rat(p + q - 2)};
      break;
    case 8:
      need(p >= 3, "row 8 needs p >= 3");
      t = {row, SigmaKind::C, 1, rat(2 * (p - 2)), rat(p), 0, p, p, 2, rat(p - 2)};
      break;
    case 9:
      need(r >= 1, "row 9 needs r >= 1");
      t = {row, SigmaKind::C, r, 2, 3, 0, r * (2 * r + 1), 2 * r + 1, 2 * r, 1};
      break;
    case 10:
      t = {row, SigmaKind::B, 2, 4, 4, 0, 16, 12, 2, 6};
      break;
    case 11:
      t = {row, SigmaKind::BC, 1, 0, 8, 8, 16, 12, 2, 6};
      break;
    case 12:
      t = {row, SigmaKind::D, 3, 4, 1, 0, 27, 18, 3, 8};
      break;
    default:
      throw std::out_of_range("domain_instantiate: row must be 1..12");
  }
  domain_instance_check(t);
  return t;
}

void domain_instance_check(const DomainInstance& t) {
  auto fail = [&](const char* what) {
    throw std::logic_error("domain row " + std::to_string(t.row) + ": " + what);
  };
  if (t.sigma == SigmaKind::D) {
    if (t.r_prime != t.rank) fail("rank relation r' = r violated");
    if (t.a_prime != 2 * t.a) fail("multiplicity relation a' = 2a violated");
    if (t.iota != 1 || t.h_mult != 0) fail("sign multiplicities must be trivial");
  }
  if (t.sigma == SigmaKind::C) {
    if (t.r_prime != 2 * t.rank) fail("rank relation r' = 2r violated");
    if (t.a != 2 * t.a_prime) fail("multiplicity relation a = 2a' violated");
    if (t.iota != 2 + t.a_prime) fail("multiplicity relation iota = 2 + a' violated");
  }
  BigRational dim = t.rank * t.iota + t.rank * (t.rank - 1) * t.a + t.rank * t.h_mult;
  if (dim != t.d) fail("dimension bookkeeping violated");
}

std::pair<BigRational, int> domain_dimension_diagnostic(const DomainInstance& t) {
  // Claimed count: rank/2 plus half the multiplicity sum over the full root
  // system. The positive-root multiplicity sum is d - rank on every row, so
  // the claim lands at d - rank/2, short of the stored dimension by rank/2.
  BigRational claimed = BigRational(t.rank) / 2 + BigRational(t.d - t.rank);
  return {claimed, t.d};
}

SphericalSignature signature_from_m(const Partition& m, int m_scalar, Kind kind) {
  if (!is_partition(m)) throw std::invalid_argument("signature_from_m: not a partition");
  if (m_scalar < 0) throw std::invalid_argument("signature_from_m: negative scalar");
  if (kind == Kind::A) throw std::invalid_argument("signature_from_m: kind must be C or D");
  SphericalSignature s;
  s.kind = kind;
  s.m = m;
  if (kind == Kind::C) {
    s.m_scalar = 0;
    for (int part : m) {
      s.n.push_back(part);
      s.n.push_back(part);
    }
  } else {
    int shift = m.empty() ? 0 : m.back();
    for (int& part : s.m) part -= shift;
    s.m_scalar = m_scalar + 2 * shift;
    for (int part : s.m) s.n.push_back(2 * part + s.m_scalar);
  }
  return s;
}

std::optional<SphericalSignature> is_spherical(const std::vector<int>& n, Kind kind) {
  if (kind == Kind::A) throw std::invalid_argument("is_spherical: kind must be C or D");
  for (size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) return std::nullopt;
    if (i + 1 < n.size() && n[i] < n[i + 1]) return std::nullopt;
  }
  SphericalSignature s;
  s.kind = kind;
  s.n = n;
  if (kind == Kind::C) {
    std::vector<int> padded = n;
    if (padded.size() % 2 != 0) padded.push_back(0);
    for (size_t i = 0; i + 1 < padded.size(); i += 2) {
      if (padded[i] != padded[i + 1]) return std::nullopt;
      s.m.push_back(padded[i]);
    }
    s.m_scalar = 0;
  } else {
    if (n.empty()) return s;
    s.m_scalar = n.back();
    for (int v : n) {
      if ((v - s.m_scalar) % 2 != 0) return std::nullopt;
      s.m.push_back((v - s.m_scalar) / 2);
    }
  }
  return s;
}

int signature_weight(const SphericalSignature& s) {
  int w = 0;
  for (int v : s.n) w += v;
  return w;
}

std::string signature_to_json(const SphericalSignature& s) {
  nlohmann::ordered_json j;
  j["kind"] = kind_str(s.kind);
  j["m"] = s.m;
  j["m_scalar"] = s.m_scalar;
  j["n"] = s.n;
  return j.dump();
}

BigRational capelli_eigenvalue_complex(const std::vector<int>& n, int r_prime,
                                       const BigRational& a_prime, long alpha) {
  if (static_cast<int>(n.size()) > r_prime)
    throw std::invalid_argument("capelli_eigenvalue_complex: tuple longer than rank");
  BigRational out = 1;
  for (int j = 1; j <= r_prime; ++j) {
    int nj = j <= static_cast<int>(n.size()) ? n[j - 1] : 0;
    out *= a_prime / 2 * (r_prime - j) + 1 + alpha + nj;
  }
  return out;
}

BigRational capelli_eigenvalue_real(const SphericalSignature& s, const RootData& rd,
                                    long alpha) {
  if (s.kind != rd.kind)
    throw std::invalid_argument("capelli_eigenvalue_real: kind mismatch");
  Partition m = pad_partition(s.m, rd.r);
  BigRational out = 1;
  if (s.kind == Kind::C) {
    for (int j = 1; j <= rd.r; ++j) {
      BigRational base = rd.a / 2 * (rd.r - j) + m[j - 1] + alpha;
      out *= (base + rd.iota / 2) * (base + 1);
    }
  } else {
    for (int j = 1; j <= rd.r; ++j)
      out *= rd.a * (rd.r - j) + 1 + alpha + s.m_scalar + 2 * m[j - 1];
  }
  return out;
}

MultiPoly restricted_invariant(const SphericalSignature& s, const RootData& rd) {
  if (s.kind != rd.kind)
    throw std::invalid_argument("restricted_invariant: kind mismatch");
  MultiPoly even = poly_square_vars(jack_omega(s.m, rd.r, rd.a).poly);
  if (s.kind == Kind::D && s.m_scalar > 0) {
    MultiPoly prod_x = poly_const(rd.r, 1);
    for (int k = 0; k < rd.r; ++k) prod_x = poly_mul(prod_x, poly_var(rd.r, k));
    even = poly_mul(even, poly_pow(prod_x, s.m_scalar));
  }
  return even;
}

namespace {

BigRational pair_factor(const Partition& m, const BigRational& a, int i, int j) {
  // i < j, 1-based. Telescoped ratio of the Gamma factors attached to the
  // difference roots.
  int k = m[i - 1] - m[j - 1];
  BigRational gap = a / 2 * (j - i);
  BigRational den1 = k + gap;
  BigRational den2 = rat_pochhammer(a / 2 * (j + 1 - i), k);
  if (den1 == 0 || den2 == 0)
    throw std::domain_error("fock_norm_closed: pole in a paired factor");
  return gap / den1 / den2 * rat_pochhammer(1 + a / 2 * (j - 1 - i), k);
}

}  // namespace

BigRational fock_norm_closed(const SphericalSignature& s, const RootData& rd) {
  if (s.kind != rd.kind) throw std::invalid_argument("fock_norm_closed: kind mismatch");
  Partition m = pad_partition(s.m, rd.r);
  BigRational out = 1;
  for (int i = 1; i <= rd.r; ++i)
    for (int j = i + 1; j <= rd.r; ++j) out *= pair_factor(m, rd.a, i, j);
  if (s.kind == Kind::C) {
    for (int j = 1; j <= rd.r; ++j) {
      out *= rat_pochhammer(rd.iota / 2 + rd.a / 2 * (rd.r - j), m[j - 1]);
      out *= rat_pochhammer(1 + rd.a / 2 * (rd.r - j), m[j - 1]);
    }
  } else {
    int weight = partition_weight(m);
    out *= rat_pow(rat(4), weight);
    for (int j = 1; j <= rd.r; ++j) {
      out *= rat_pochhammer(rat(1, 2) + rd.a / 2 * (rd.r - j), m[j - 1]);
      out *= rat_pochhammer(1 + rd.a / 2 * (rd.r - j), m[j - 1]);
      out *= rat_pochhammer(rd.a * (rd.r - j) + 1 + 2 * m[j - 1], s.m_scalar);
    }
  }
  if (out <= 0) throw std::domain_error("fock_norm_closed: nonpositive value");
  return out;
}

BigRational norm_ratio_recursion(const SphericalSignature& s, int j, const RootData& rd) {
  if (s.kind != rd.kind)
    throw std::invalid_argument("norm_ratio_recursion: kind mismatch");
  Partition m = pad_partition(s.m, rd.r);
  if (j < 1 || j > rd.r) throw std::out_of_range("norm_ratio_recursion: part index");
  auto lowered = decrement_part(m, j - 1);
  if (!lowered.has_value())
    throw std::invalid_argument("norm_ratio_recursion: part cannot be lowered");
  BigRational b = binomial_coeff(m, j, rd.a);
  BigRational c = c_coeff(lowered.value(), j, rd.a);
  if (c == 0) throw std::logic_error("norm_ratio_recursion: raising coefficient vanished");
  if (s.kind == Kind::C)
    return b * (m[j - 1] - 1 + rd.iota / 2 + rd.a / 2 * (rd.r - j)) / c;
  BigRational ratio =
      4 * b * (m[j - 1] - rat(1, 2) + rd.a / 2 * (rd.r - j)) / c;
  if (s.m_scalar > 0) {
    // The scalar-power factor of the closed form shifts by two when the part
    // is lowered; fold in the corresponding Pochhammer ratio.
    BigRational x = rd.a * (rd.r - j) + 2 * m[j - 1] - 1;
    ratio *= (x + s.m_scalar) * (x + s.m_scalar + 1) / (x * (x + 1));
  }
  return ratio;
}

BigRational generalized_pochhammer(const BigRational& nu, const std::vector<int>& n,
                                   int r_prime, const BigRational& a_prime) {
  if (static_cast<int>(n.size()) > r_prime)
    throw std::invalid_argument("generalized_pochhammer: tuple longer than rank");
  BigRational out = 1;
  for (size_t j = 0; j < n.size(); ++j)
    out *= rat_pochhammer(nu - a_prime / 2 * static_cast<long>(j), n[j]);
  return out;
}

BigRational bergman_norm_sq(const SphericalSignature& s, const RootData& rd,
                            const BigRational& nu) {
  int r_prime = s.kind == Kind::C ? 2 * rd.r : rd.r;
  BigRational a_prime = s.kind == Kind::C ? BigRational(rd.a / 2) : BigRational(2 * rd.a);
  BigRational poch = generalized_pochhammer(nu, s.n, r_prime, a_prime);
  if (poch == 0) throw std::domain_error("bergman_norm_sq: vanishing Pochhammer");
  return fock_norm_closed(s, rd) / poch;
}

}  // namespace dunklcore
