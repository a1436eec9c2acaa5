#include <doctest.h>

#include <dunkl/flatcase.hpp>

#include <cmath>

using namespace dunklcore;

namespace {
constexpr long double kPi = 3.14159265358979323846264338327950288L;
}

TEST_CASE("signature enumeration is canonical and ordered") {
  auto sc = spherical_signatures(Kind::C, 2, 4);
  REQUIRE(sc.size() == 4);
  CHECK(sc[0].m == Partition{0, 0});
  CHECK(sc[1].m == Partition{1, 0});
  CHECK(sc[2].m == Partition{1, 1});  // n = (1,1,1,1) precedes (2,2,0,0)
  CHECK(sc[3].m == Partition{2, 0});

  auto sd = spherical_signatures(Kind::D, 2, 3);
  REQUIRE(sd.size() == 3);
  CHECK(signature_weight(sd[0]) == 0);
  CHECK(sd[1].m_scalar == 1);      // n = (1,1)
  CHECK(sd[2].m == Partition{1, 0});  // n = (2,0)

  // Rank-1 kind D: the scalar power alone, one signature per weight.
  auto s1 = spherical_signatures(Kind::D, 1, 4);
  REQUIRE(s1.size() == 5);
  for (int k = 0; k <= 4; ++k) {
    CHECK(s1[k].m_scalar == k);
    CHECK(s1[k].m == Partition{0});
  }

  // Every enumerated n is recognized as spherical with the same representative.
  for (const auto& s : spherical_signatures(Kind::D, 3, 4)) {
    auto back = is_spherical(s.n, Kind::D);
    REQUIRE(back.has_value());
    CHECK(back->m == s.m);
    CHECK(back->m_scalar == s.m_scalar);
  }

  CHECK_THROWS_AS(spherical_signatures(Kind::A, 2, 2), std::invalid_argument);
}

TEST_CASE("symmetric kernel basics") {
  RootData rd = root_data_d(2, BigRational(1));
  auto series = bessel_series(rd, 4);
  CHECK(series.kernel.nvars == 4);

  // Constant term 1 and value 1 at lambda = 0.
  auto at0 = substitute_spectral(series.kernel, 2, {0.0L, 0.0L});
  CHECK(at0.eval({0.7L, -0.3L}) == std::complex<long double>(1));

  // K(x, lambda) = K(lambda, x): swap the two blocks exactly.
  MultiPoly swapped = poly_zero(4);
  for (const auto& [e, c] : series.kernel.terms)
    swapped.add_term({e[2], e[3], e[0], e[1]}, c);
  CHECK(swapped == series.kernel);

  CHECK_THROWS_AS(bessel_series(rd, 3), std::invalid_argument);
  CHECK_THROWS_AS(bessel_series(root_data_a(2, BigRational(1)), 4), std::invalid_argument);
}

TEST_CASE("kernel reproduces invariant polynomials under the Fischer pairing") {
  // (p, K(., lambda)) = p(i lambda) for any invariant p up to the kernel degree.
  auto reproduce = [](const RootData& rd, const MultiPoly& p, int deg) {
    const int r = rd.r, nv = 2 * r;
    auto series = bessel_series(rd, deg);
    GaussRational c = rd.kind == Kind::C ? GaussRational(BigRational(1, 2)) : GaussRational(1);
    MultiPoly q = poly_of_dunkl(poly_scale_vars(p, c, 0, r), poly_conj(series.kernel), rd);
    MultiPoly got = poly_component_in_block(q, 0, r, 0);
    MultiPoly expect = poly_conj(
        poly_embed(poly_scale_vars(p, GaussRational::i(), 0, r), nv, r));
    CHECK(got == expect);
  };

  RootData rc = root_data_c(2, BigRational(1), BigRational(2));
  MultiPoly pc = poly_add(restricted_invariant(signature_from_m({1, 0}, 0, Kind::C), rc),
                          restricted_invariant(signature_from_m({1, 1}, 0, Kind::C), rc));
  pc = poly_add(pc, poly_const(2, GaussRational(3)));
  reproduce(rc, pc, 4);

  RootData rdd = root_data_d(2, BigRational(2));
  MultiPoly pd = poly_add(restricted_invariant(signature_from_m({0, 0}, 1, Kind::D), rdd),
                          restricted_invariant(signature_from_m({1, 0}, 1, Kind::D), rdd));
  reproduce(rdd, pd, 4);
}

TEST_CASE("spectral polynomial frozen values") {
  // Kind C, iota=2, m=(1), nu=1: 1 - l^2.
  RootData rc = root_data_c(1, BigRational(1), BigRational(2));
  auto z = zeta_polynomial(signature_from_m({1}, 0, Kind::C), rc, BigRational(1));
  MultiPoly expect = poly_sub(poly_const(1, GaussRational(1)), poly_pow(poly_var(1, 0), 2));
  CHECK(z.poly == expect);
  CHECK(zeta_to_json(z) ==
        "{\"kind\":\"C\",\"m\":[1],\"m_scalar\":0,\"nu\":\"1\",\"lambda_poly\":{\"vars\":1,"
        "\"terms\":[{\"exp\":[0],\"re\":\"1\",\"im\":\"0\"},{\"exp\":[2],\"re\":\"-1\","
        "\"im\":\"0\"}]}}");

  // Kind D rank 1 reduces to classical Hermite polynomials:
  // zeta_k = (-i)^k nu^{k/2} He_k(l / sqrt(nu)) / k!; k=3, nu=2 gives i(l^3/6 - l).
  RootData rdd = root_data_d(1, BigRational(1));
  auto z3 = zeta_polynomial(signature_from_m({0}, 3, Kind::D), rdd, BigRational(2));
  MultiPoly h3 = poly_zero(1);
  h3.add_term({1}, GaussRational(BigRational(0), BigRational(-1)));
  h3.add_term({3}, GaussRational(BigRational(0), BigRational(1, 6)));
  CHECK(z3.poly == h3);

  // Leading term of zeta_n is (-i)^{|n|} p_n(lambda) / (nu^{|n|} |p_n|^2)
  // up to normalization; check just the degree and parity structure here.
  CHECK(poly_total_degree(z3.poly) == 3);
  for (const auto& [e, c] : z3.poly.terms) CHECK(e[0] % 2 == 1);
  (void)z3;
}

TEST_CASE("dual-route construction across the small grid") {
  // zeta_polynomial itself recomputes every value by two routes and throws on
  // any mismatch, truncation instability, broken reflection invariance, or a
  // coefficient outside the i^{|n|} reality pattern. Constructing the whole
  // grid is therefore the assertion.
  for (int nu = 1; nu <= 2; ++nu) {
    RootData rc1 = root_data_c(1, BigRational(1), BigRational(2));
    for (const auto& s : spherical_signatures(Kind::C, 1, 3))
      zeta_polynomial(s, rc1, BigRational(nu));
    RootData rc2 = root_data_c(2, BigRational(1), BigRational(3, 2));
    for (const auto& s : spherical_signatures(Kind::C, 2, 3))
      zeta_polynomial(s, rc2, BigRational(nu));
    RootData rd1 = root_data_d(1, BigRational(1));
    for (const auto& s : spherical_signatures(Kind::D, 1, 3))
      zeta_polynomial(s, rd1, BigRational(nu));
    RootData rd2 = root_data_d(2, BigRational(2));
    for (const auto& s : spherical_signatures(Kind::D, 2, 3))
      zeta_polynomial(s, rd2, BigRational(nu));
  }

  RootData rd2 = root_data_d(2, BigRational(1));
  CHECK_THROWS_AS(zeta_polynomial(signature_from_m({1}, 0, Kind::C), rd2, BigRational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_bessel_expansion(signature_from_m({0, 0}, 2, Kind::D), rd2,
                                            BigRational(1), 1),
                  std::invalid_argument);
}

TEST_CASE("degreewise reconstruction of the gaussian kernel product") {
  CHECK(zeta_reconstruction_check(root_data_c(1, BigRational(1), BigRational(2)),
                                  BigRational(1), 6));
  CHECK(zeta_reconstruction_check(root_data_d(1, BigRational(1)), BigRational(3, 2), 5));
  CHECK(zeta_reconstruction_check(root_data_c(2, BigRational(1), BigRational(3, 2)),
                                  BigRational(2), 4));
  CHECK(zeta_reconstruction_check(root_data_d(2, BigRational(2)), BigRational(1), 3));
}

TEST_CASE("reflection invariance helper") {
  MultiPoly x = poly_var(2, 0);
  CHECK_FALSE(is_weyl_invariant(x, Kind::C, 2));
  MultiPoly sym = poly_add(poly_pow(poly_var(2, 0), 2), poly_pow(poly_var(2, 1), 2));
  CHECK(is_weyl_invariant(sym, Kind::C, 2));
  CHECK(is_weyl_invariant(sym, Kind::D, 2));
  // x1 x2 is kind-D invariant (even sign flips only) but not kind-C invariant.
  MultiPoly prod = poly_mul(poly_var(2, 0), poly_var(2, 1));
  CHECK(is_weyl_invariant(prod, Kind::D, 2));
  CHECK_FALSE(is_weyl_invariant(prod, Kind::C, 2));
}

TEST_CASE("gaussian integral eigen-identity") {
  RootData rdd = root_data_d(1, BigRational(1));
  CHECK(gaussian_eigen_check(rdd, BigRational(1), {BigRational(1, 2)}, 16) < 1e-9L);
  RootData rc = root_data_c(1, BigRational(1), BigRational(2));
  CHECK(gaussian_eigen_check(rc, BigRational(2), {BigRational(1)}, 20) < 1e-9L);
  RootData rd2 = root_data_d(2, BigRational(1));
  CHECK(gaussian_eigen_check(rd2, BigRational(1), {BigRational(1), BigRational(1, 3)}, 12) <
        1e-4L);
}

TEST_CASE("orthonormality of normalized spectral polynomials, rank 1") {
  auto check_identity = [](const Eigen::MatrixXd& g, double tol) {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(g.rows(), g.cols());
    CHECK((g - id).cwiseAbs().maxCoeff() < tol);
  };
  check_identity(zeta_gram(root_data_d(1, BigRational(1)), BigRational(1), 4), 1e-8);
  check_identity(zeta_gram(root_data_c(1, BigRational(1), BigRational(2)), BigRational(2), 4),
                 1e-8);
}

TEST_CASE("orthonormality rank 2: stratified sampling and adaptive quadrature") {
  RootData rd2 = root_data_d(2, BigRational(1));
  auto g = zeta_gram(rd2, BigRational(1), 3, 42, 200000);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(g.rows(), g.cols());
  CHECK((g - id).cwiseAbs().maxCoeff() < 1e-3);

  // Same instance through the adaptive route, much tighter.
  auto ga = zeta_gram(rd2, BigRational(1), 3);
  CHECK((ga - id).cwiseAbs().maxCoeff() < 1e-8);

  // The pair-difference density variant is *not* orthonormal for kind C:
  // recording which density diagonalizes pins down the right pair factor.
  RootData rc2 = root_data_c(2, BigRational(1), BigRational(2));
  auto gs = zeta_gram(rc2, BigRational(1), 3);
  auto gp = zeta_gram(rc2, BigRational(1), 3, 1, 0, true);
  Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(gs.rows(), gs.cols());
  CHECK((gs - id2).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((gp - id2).cwiseAbs().maxCoeff() > 1e-1);
}

TEST_CASE("flat transform ratio is the x-side mass, with alternating twist") {
  RootData rdd = root_data_d(1, BigRational(1));
  for (int nu = 1; nu <= 2; ++nu) {
    auto rep = fourier_ratio_check(rdd, BigRational(nu), spherical_signatures(Kind::D, 1, 3),
                                   {{BigRational(1, 2)}, {BigRational(5, 4)}});
    CHECK(rep.max_spread < 1e-10L);
    CHECK(rep.signs_alternate);
    // constant = integral of the x-side density: sqrt(2 pi / nu) at rank 1 kind D
    CHECK(std::fabs((double)rep.constant - std::sqrt(2.0 * (double)kPi / nu)) < 1e-9);
  }
  RootData rcc = root_data_c(1, BigRational(1), BigRational(2));
  auto rep = fourier_ratio_check(rcc, BigRational(2), spherical_signatures(Kind::C, 1, 4),
                                 {{BigRational(1, 2)}, {BigRational(5, 4)}});
  CHECK(rep.max_spread < 1e-10L);
  CHECK(rep.signs_alternate);
  // mass of |y| exp(-2 y^2) over R is 1/2
  CHECK(std::fabs((double)rep.constant - 0.5) < 1e-9);
}
