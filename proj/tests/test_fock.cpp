#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/fock.hpp"
#include "core/partition.hpp"

using namespace dualpair;
using fock::Ambient;
using fock::SparsePoly;
using fock::WittKind;

namespace {

SparsePoly var(Ambient a, long alpha, long j) { return SparsePoly::variable(a, {alpha, j}); }

}  // namespace

TEST_CASE("witt coordinate forms") {
  Ambient a2{2, 1, 1};
  CHECK(fock::witt_w(a2, WittKind::WDoublePrime, 1, 1) ==
        var(a2, 1, 1) - var(a2, 2, 1) * GaussianRational::i());
  CHECK(fock::witt_w(a2, WittKind::WPrime, 1, 1) ==
        var(a2, 1, 1) + var(a2, 2, 1) * GaussianRational::i());

  Ambient a4{4, 1, 2};
  // alpha' = 2*p0 - alpha + 1: for p = 4 and alpha = 2 the partner is 3.
  CHECK(fock::witt_w(a4, WittKind::WDoublePrime, 2, 1) ==
        var(a4, 2, 1) - var(a4, 3, 1) * GaussianRational::i());

  Ambient a5{5, 1, 1};
  CHECK(fock::witt_t(a5, 1) == var(a5, 5, 1));
  CHECK_THROWS(fock::witt_t(a4, 1));
  CHECK_THROWS(fock::witt_w(a4, WittKind::WPrime, 3, 1));

  // The paper's index extension identity w'_{alpha',j} = i w''_{alpha,j},
  // built directly from the definition.
  for (long alpha = 1; alpha <= 2; ++alpha) {
    long abar = 2 * 2 - alpha + 1;
    SparsePoly extended = var(a4, abar, 1) + var(a4, 2 * 2 - abar + 1, 1) * GaussianRational::i();
    CHECK(extended ==
          fock::witt_w(a4, WittKind::WDoublePrime, alpha, 1) * GaussianRational::i());
  }
}

TEST_CASE("laplacian values") {
  Ambient a{2, 1, 1};
  SparsePoly wpp = fock::witt_w(a, WittKind::WDoublePrime, 1, 1);
  CHECK(fock::laplacian(wpp * wpp, 1, 1).is_zero());

  Ambient a1{1, 1, 1};
  CHECK(fock::laplacian(var(a1, 1, 1) * var(a1, 1, 1), 1, 1) ==
        SparsePoly::constant(a1, GaussianRational(2)));

  Ambient a12{1, 1, 2};
  CHECK(fock::laplacian(var(a12, 1, 1) * var(a12, 1, 2), 1, 2) ==
        SparsePoly::constant(a12, GaussianRational(1)));

  // Negative variables are outside the pluriharmonic theory.
  Ambient am{2, 2, 1};
  CHECK_THROWS_AS(fock::laplacian(var(am, 3, 1), 1, 1), std::domain_error);
}

TEST_CASE("pluriharmonic membership") {
  Ambient a{2, 1, 1};
  SparsePoly z11 = var(a, 1, 1), z21 = var(a, 2, 1);
  CHECK_FALSE(fock::is_pluriharmonic(z11 * z11 + z21 * z21));
  CHECK(fock::is_pluriharmonic(fock::witt_w(a, WittKind::WDoublePrime, 1, 1)));
}

TEST_CASE("products of w'' polynomials stay pluriharmonic") {
  std::mt19937 rng(31415);
  for (long p = 2; p <= 6; p += 2) {
    for (long n = 1; n <= 3; ++n) {
      Ambient a{p, 1, n};
      std::uniform_int_distribution<long> pick_alpha(1, p / 2), pick_j(1, n), coef(-3, 3);
      for (int round = 0; round < 6; ++round) {
        SparsePoly prod = SparsePoly::constant(a, GaussianRational(1));
        std::uniform_int_distribution<int> deg(1, 5);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) {
          SparsePoly factor =
              fock::witt_w(a, WittKind::WDoublePrime, pick_alpha(rng), pick_j(rng)) *
              GaussianRational(coef(rng), coef(rng));
          if (factor.is_zero()) continue;
          prod = prod * factor;
        }
        CHECK(fock::is_pluriharmonic(prod));
      }
    }
  }
}

TEST_CASE("minors") {
  Ambient a2{2, 1, 1};
  CHECK(fock::minor_delta(a2, 1) == fock::witt_w(a2, WittKind::WDoublePrime, 1, 1));

  Ambient a4{4, 1, 2};
  SparsePoly expected = fock::witt_w(a4, WittKind::WDoublePrime, 1, 1) *
                            fock::witt_w(a4, WittKind::WDoublePrime, 2, 2) -
                        fock::witt_w(a4, WittKind::WDoublePrime, 1, 2) *
                            fock::witt_w(a4, WittKind::WDoublePrime, 2, 1);
  CHECK(fock::minor_delta(a4, 2) == expected);
  CHECK(fock::is_pluriharmonic(fock::minor_delta(a4, 2)));
  long deg = 0;
  CHECK(fock::minor_delta(a4, 2).is_homogeneous(&deg));
  CHECK(deg == 2);
  CHECK_THROWS(fock::minor_delta(a4, 3));

  // Delta_1 evaluated at the dual Witt vector u''_1 = (v_1 + i v_2)/2 is 1.
  std::vector<std::vector<GaussianRational>> coords(
      2, std::vector<GaussianRational>(1, GaussianRational(0)));
  coords[0][0] = GaussianRational(frac(1, 2), Rational(0));
  coords[1][0] = GaussianRational(Rational(0), frac(1, 2));
  CHECK(fock::minor_delta(a2, 1).evaluate(coords) == GaussianRational(1));
}

TEST_CASE("gl action") {
  Ambient a{2, 1, 2};
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto id = std::vector<std::vector<GaussianRational>>{
      {GaussianRational(1), GaussianRational(0)}, {GaussianRational(0), GaussianRational(1)}};

  SparsePoly p = fock::minor_delta(a, 1) * fock::minor_delta(a, 1);
  CHECK(fock::gl_act(id, p, Rational(5)).poly == p);

  // Scaling by c*id on a homogeneous polynomial of degree d multiplies by c^d.
  auto scale = id;
  scale[0][0] = scale[1][1] = GaussianRational(3);
  CHECK(fock::gl_act(scale, p, Rational(0)).poly == p * GaussianRational(9));

  // Composition: acting by h then g equals acting by g*h ... the action is a
  // right substitution Z -> Zg, so (P.h).g = P.(hg).
  for (int round = 0; round < 8; ++round) {
    std::vector<std::vector<GaussianRational>> g(2, std::vector<GaussianRational>(2)),
        h(2, std::vector<GaussianRational>(2));
    for (auto* m : {&g, &h})
      for (auto& row : *m)
        for (auto& e : row) e = GaussianRational(coef(rng), coef(rng));
    g[0][0] += GaussianRational(7);  // keep them invertible
    h[1][1] += GaussianRational(7);
    std::vector<std::vector<GaussianRational>> gh(2, std::vector<GaussianRational>(2));
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        for (size_t k = 0; k < 2; ++k) gh[i][j] += g[i][k] * h[k][j];
    SparsePoly lhs = fock::gl_act(g, fock::gl_act(h, p, Rational(0)).poly, Rational(0)).poly;
    CHECK(lhs == fock::gl_act(gh, p, Rational(0)).poly);
  }

  // Singular matrices are rejected.
  auto sing = id;
  sing[1][1] = GaussianRational(0);
  sing[0][0] = GaussianRational(0);
  CHECK_THROWS_AS(fock::gl_act(sing, p, Rational(0)), std::domain_error);

  // Half-integral twists: carried formally without a designated root,
  // applied exactly with one.
  auto four = id;
  four[0][0] = GaussianRational(4);  // det = 4
  fock::GlActResult carried = fock::gl_act(four, p, frac(1, 2));
  CHECK(carried.carried_det_power == frac(1, 2));
  fock::GlActResult applied = fock::gl_act(four, p, frac(1, 2), GaussianRational(2));
  CHECK(applied.carried_det_power == 0);
  CHECK(applied.poly == carried.poly * GaussianRational(2));
  CHECK_THROWS(fock::gl_act(four, p, frac(1, 2), GaussianRational(3)));
}

TEST_CASE("oscillator generators") {
  Ambient a{2, 1, 2};  // m*n = 6 flattened variables
  SparsePoly one = SparsePoly::constant(a, GaussianRational(1));
  SparsePoly z1 = var(a, 1, 1);  // flat index 1

  CHECK(fock::sp_generator(one, fock::SpKind::Raise, 1, 2) ==
        var(a, 1, 1) * var(a, 1, 2));
  CHECK(fock::sp_generator(fock::sp_generator(one, fock::SpKind::Raise, 1, 2),
                           fock::SpKind::Lower, 1, 2) == one);
  // mixed(i,i) on z_i^d = (d + 1/2) z_i^d.
  SparsePoly z1cubed = z1 * z1 * z1;
  CHECK(fock::sp_generator(z1cubed, fock::SpKind::Mixed, 1, 1) ==
        z1cubed * GaussianRational(frac(7, 2)));

  // [lower(i,j), raise(k,l)] acts like the delta-weighted mixed combination.
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> idx(1, a.var_count());
  auto mixed_term = [&](const SparsePoly& P, long zi, long dj) {
    // z_i d_j as mixed minus the diagonal half.
    SparsePoly r = fock::sp_generator(P, fock::SpKind::Mixed, zi, dj);
    if (zi == dj) r = r - P * GaussianRational(frac(1, 2));
    return r;
  };
  for (int round = 0; round < 40; ++round) {
    long i = idx(rng), j = idx(rng), k = idx(rng), l = idx(rng);
    fock::Monomial mono;
    std::uniform_int_distribution<int> deg(0, 4);
    int d = deg(rng);
    for (int t = 0; t < d; ++t) {
      fock::VarIndex v = fock::unflatten(a, idx(rng));
      mono.set_exponent(v, mono.exponent(v) + 1);
    }
    SparsePoly P(a);
    P.add_term(mono, GaussianRational(1));
    SparsePoly lhs =
        fock::sp_generator(fock::sp_generator(P, fock::SpKind::Raise, k, l), fock::SpKind::Lower,
                           i, j) -
        fock::sp_generator(fock::sp_generator(P, fock::SpKind::Lower, i, j), fock::SpKind::Raise,
                           k, l);
    SparsePoly rhs(a);
    if (j == k) rhs = rhs + mixed_term(P, l, i);
    if (j == l) rhs = rhs + mixed_term(P, k, i);
    if (i == k) rhs = rhs + mixed_term(P, l, j);
    if (i == l) rhs = rhs + mixed_term(P, k, j);
    if (i == k && j == l) rhs = rhs + P;
    if (i == l && j == k) rhs = rhs + P;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("harmonic space dimensions") {
  CHECK(fock::harmonic_space_dim(3, 1, 0) == 1);
  for (long p = 1; p <= 4; ++p)
    for (long n = 1; n <= 2; ++n) CHECK(fock::harmonic_space_dim(p, n, 1) == p * n);
  // Classical spherical harmonics: dim H_ell(R^3) = 2 ell + 1.
  CHECK(fock::harmonic_space_dim(3, 1, 2) == 5);
  for (long ell = 0; ell <= 5; ++ell) CHECK(fock::harmonic_space_dim(3, 1, ell) == 2 * ell + 1);
  CHECK_THROWS_AS(fock::harmonic_space_dim(4, 2, 12, 100), std::length_error);
}
