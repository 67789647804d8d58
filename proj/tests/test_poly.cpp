#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/poly.hpp"

using namespace dualpair;
using fock::Ambient;
using fock::SparsePoly;
using fock::VarIndex;

namespace {

SparsePoly var(Ambient a, long alpha, long j) { return SparsePoly::variable(a, {alpha, j}); }

SparsePoly random_poly(Ambient a, std::mt19937& rng, int terms, int max_deg) {
  std::uniform_int_distribution<long> alpha(1, a.m()), copy(1, a.n), coef(-4, 4), deg(0, max_deg);
  SparsePoly out(a);
  for (int t = 0; t < terms; ++t) {
    fock::Monomial mono;
    int d = static_cast<int>(deg(rng));
    for (int k = 0; k < d; ++k) {
      VarIndex v{alpha(rng), copy(rng)};
      mono.set_exponent(v, mono.exponent(v) + 1);
    }
    out.add_term(mono, GaussianRational(coef(rng), coef(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("ring identities") {
  Ambient a{2, 1, 2};
  SparsePoly z11 = var(a, 1, 1), z21 = var(a, 2, 1);
  SparsePoly zero(a);
  CHECK(z11 + zero == z11);
  CHECK(z11 * z11 == SparsePoly::parse(a, "1*z[1,1]^2"));
  // Difference of squares over Q(i): (z11 - i z21)(z11 + i z21) = z11^2 + z21^2.
  SparsePoly wpp = z11 - z21 * GaussianRational::i();
  SparsePoly wp = z11 + z21 * GaussianRational::i();
  CHECK(wpp * wp == z11 * z11 + z21 * z21);
}

TEST_CASE("ring laws on random polynomials") {
  Ambient a{3, 2, 2};
  std::mt19937 rng(20240811);
  for (int round = 0; round < 25; ++round) {
    SparsePoly p = random_poly(a, rng, 4, 3);
    SparsePoly q = random_poly(a, rng, 4, 3);
    SparsePoly r = random_poly(a, rng, 3, 2);
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("partial derivatives") {
  Ambient a{2, 1, 2};
  SparsePoly z11 = var(a, 1, 1);
  CHECK((z11 * z11).partial({1, 1}) == z11 * GaussianRational(2));
  CHECK(var(a, 2, 1).partial({1, 1}).is_zero());
  CHECK((var(a, 1, 1) * var(a, 1, 2)).partial({1, 2}) == z11);
}

TEST_CASE("signature mismatch is rejected") {
  SparsePoly p = var({2, 1, 1}, 1, 1);
  SparsePoly q = var({2, 2, 1}, 1, 1);
  CHECK_THROWS_AS((void)(p + q), std::invalid_argument);
  CHECK_THROWS_AS((void)(p * q), std::invalid_argument);
}

TEST_CASE("text round trip and parse errors") {
  Ambient a{2, 1, 2};
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    SparsePoly p = random_poly(a, rng, 5, 4);
    CHECK(SparsePoly::parse(a, p.str()) == p);
  }
  CHECK(SparsePoly(a).str() == "0");
  CHECK(SparsePoly::parse(a, "0").is_zero());
  CHECK(SparsePoly::parse(a, "1/2+3/4*i*z[1,1]^2") ==
        var(a, 1, 1) * var(a, 1, 1) * GaussianRational(frac(1, 2), frac(3, 4)));
  CHECK(SparsePoly::parse(a, "2*z[1,1] + -2*z[1,1]").is_zero());
  CHECK_THROWS(SparsePoly::parse(a, "1*z[9,1]"));
  CHECK_THROWS(SparsePoly::parse(a, "1*z[1,1]^"));
  CHECK_THROWS(SparsePoly::parse(a, ""));
}

TEST_CASE("homogeneity and degree queries") {
  Ambient a{2, 1, 1};
  SparsePoly p = SparsePoly::parse(a, "1*z[1,1]^2 + 2*z[2,1]^2");
  long d = -1;
  CHECK(p.is_homogeneous(&d));
  CHECK(d == 2);
  CHECK(p.degree() == 2);
  SparsePoly q = p + SparsePoly::constant(a, GaussianRational(1));
  CHECK_FALSE(q.is_homogeneous());
  CHECK(SparsePoly(a).degree() == -1);
}

TEST_CASE("column substitution composes") {
  Ambient a{2, 1, 2};
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto random_matrix = [&]() {
    std::vector<std::vector<GaussianRational>> g(2, std::vector<GaussianRational>(2));
    for (auto& row : g)
      for (auto& e : row) e = GaussianRational(coef(rng), coef(rng));
    return g;
  };
  for (int round = 0; round < 10; ++round) {
    SparsePoly p = random_poly(a, rng, 4, 3);
    auto g = random_matrix(), h = random_matrix();
    // Substituting h then g equals substituting the product h*g applied to
    // the copy index.
    std::vector<std::vector<GaussianRational>> hg(2, std::vector<GaussianRational>(2));
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        for (size_t k = 0; k < 2; ++k) hg[i][j] += h[i][k] * g[k][j];
    CHECK(p.substitute_columns(h).substitute_columns(g) == p.substitute_columns(hg));
  }
}
