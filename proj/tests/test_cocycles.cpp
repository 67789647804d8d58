#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/cocycles.hpp"
#include "core/fock.hpp"
#include "core/linalg.hpp"
#include "core/vz.hpp"

using namespace dualpair;
using cocycles::FundamentalWeightVector;
using fock::Ambient;
using fock::SparsePoly;

TEST_CASE("km pairing on the dual Witt tuple is 1") {
  for (auto [p, q, n] : {std::array<long, 3>{2, 1, 1}, {2, 2, 1}, {4, 1, 2}, {4, 2, 2},
                         {6, 1, 3}}) {
    Ambient a{p, q, n};
    exterior::MultiVector eq = exterior::vz_vector({p, q}, n);
    CHECK(cocycles::km_pair(a, cocycles::witt_dual_tuple(a), eq) == GaussianRational(1));
  }
}

TEST_CASE("km pairing rejects degree mismatches and out-of-range flags") {
  Ambient a{4, 1, 2};
  // Wrong degree: pairing a 2-tuple against a degree-1 multivector.
  exterior::MultiVector one_form =
      exterior::MultiVector::basis_one_form({4, 1}, {1, 5});
  CHECK_THROWS_AS(cocycles::km_pair(a, cocycles::witt_dual_tuple(a), one_form),
                  std::invalid_argument);
  // n beyond the Witt rank.
  CHECK_THROWS(cocycles::km_value_on_vz(Ambient{2, 1, 2}));
  CHECK_THROWS(cocycles::full_cocycle_value(Ambient{2, 1, 2}, {{1, 1}}));
}

TEST_CASE("km pairing vanishes on degenerate tuples") {
  Ambient a{4, 1, 2};
  auto xs = cocycles::witt_dual_tuple(a);
  for (auto& e : xs[0]) e = GaussianRational(0);
  CHECK(cocycles::km_pair(a, xs, exterior::vz_vector({4, 1}, 2)) == GaussianRational(0));
}

TEST_CASE("swapping tuple entries multiplies the pairing by (-1)^q") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (long q : {1L, 2L}) {
    Ambient a{4, q, 2};
    exterior::MultiVector eq = exterior::vz_vector({4, q}, 2);
    for (int round = 0; round < 10; ++round) {
      std::vector<std::vector<GaussianRational>> xs(
          2, std::vector<GaussianRational>(4));
      for (auto& row : xs)
        for (auto& e : row) e = GaussianRational(coef(rng), coef(rng));
      GaussianRational before = cocycles::km_pair(a, xs, eq);
      std::swap(xs[0], xs[1]);
      GaussianRational after = cocycles::km_pair(a, xs, eq);
      CHECK(after == (q % 2 == 0 ? before : -before));
    }
  }
}

TEST_CASE("km value equals the minor power across the whole small grid") {
  for (long p = 2; p <= 6; ++p) {
    for (long q = 1; q <= 3; ++q) {
      for (long n = 1; n <= p / 2 && n * q <= 6; ++n) {
        Ambient a{p, q, n};
        CHECK(cocycles::km_value_on_vz(a) == fock::minor_delta(a, n).pow(q));
      }
    }
  }
}

TEST_CASE("fm zero cochain") {
  Ambient a{3, 1, 2};
  CHECK(cocycles::fm_zero(a, {1}, {1}) == SparsePoly::variable(a, {1, 1}));
  CHECK(cocycles::fm_zero(a, {}, {}) == SparsePoly::constant(a, GaussianRational(1)));
  CHECK_THROWS(cocycles::fm_zero(a, {1, 2}, {1}));

  // Multiplicative in concatenation of multi-indices.
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> site(1, 3), copy(1, 2);
  for (int round = 0; round < 20; ++round) {
    std::vector<long> I1, I2, b1, b2;
    std::uniform_int_distribution<int> len(0, 3);
    int l1 = len(rng), l2 = len(rng);
    for (int k = 0; k < l1; ++k) I1.push_back(copy(rng)), b1.push_back(site(rng));
    for (int k = 0; k < l2; ++k) I2.push_back(copy(rng)), b2.push_back(site(rng));
    std::vector<long> I = I1, b = b1;
    I.insert(I.end(), I2.begin(), I2.end());
    b.insert(b.end(), b2.begin(), b2.end());
    CHECK(cocycles::fm_zero(a, I, b) ==
          cocycles::fm_zero(a, I1, b1) * cocycles::fm_zero(a, I2, b2));
  }
}

TEST_CASE("highest weight values are minor products") {
  {
    Ambient a{2, 1, 1};
    CHECK(cocycles::fm_highest_weight_value(a, {{1}}) == fock::minor_delta(a, 1));
    CHECK(cocycles::fm_highest_weight_value(a, {{0}}) ==
          SparsePoly::constant(a, GaussianRational(1)));
  }
  {
    Ambient a{4, 1, 2};
    CHECK(cocycles::fm_highest_weight_value(a, {{1, 1}}) ==
          fock::minor_delta(a, 1) * fock::minor_delta(a, 2));
  }
}

TEST_CASE("full cocycle values") {
  {
    Ambient a{4, 2, 2};
    CHECK(cocycles::full_cocycle_value(a, {{}}) == fock::minor_delta(a, 2).pow(2));
  }
  {
    Ambient a{2, 1, 1};
    CHECK(cocycles::full_cocycle_value(a, {{1}}) == fock::minor_delta(a, 1).pow(2));
    CHECK(fock::is_pluriharmonic(cocycles::full_cocycle_value(a, {{1}})));
  }
}

TEST_CASE("top value transforms by det^q under the right substitution") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (long q : {1L, 2L}) {
    for (long n : {1L, 2L}) {
      Ambient a{2 * n, q, n};
      SparsePoly value = cocycles::km_value_on_vz(a);
      for (int round = 0; round < 6; ++round) {
        size_t nn = static_cast<size_t>(n);
        std::vector<std::vector<GaussianRational>> g(nn, std::vector<GaussianRational>(nn));
        for (auto& row : g)
          for (auto& e : row) e = GaussianRational(coef(rng), coef(rng));
        for (size_t d = 0; d < nn; ++d) g[d][d] += GaussianRational(5);
        GaussianRational det = linalg::scalar_det(g);
        GaussianRational scale(1);
        for (long t = 0; t < q; ++t) scale *= det;
        CHECK(fock::gl_act(g, value, Rational(0)).poly == value * scale);
      }
    }
  }
}

TEST_CASE("permuting the copies acts by a determinant sign, symbolically") {
  // Substituting the swap of the two copy indices into the symbolic value
  // multiplies it by det = -1 to the q-th power.
  for (long q : {1L, 2L}) {
    Ambient a{4, q, 2};
    SparsePoly value = cocycles::km_value_on_vz(a);
    std::vector<std::vector<GaussianRational>> swap{{GaussianRational(0), GaussianRational(1)},
                                                    {GaussianRational(1), GaussianRational(0)}};
    SparsePoly swapped = fock::gl_act(swap, value, Rational(0)).poly;
    CHECK(swapped == (q % 2 == 0 ? value : -value));
  }
}

TEST_CASE("fundamental weight coordinates round trip") {
  using cocycles::FundamentalWeightVector;
  FundamentalWeightVector w{{2, 0, 1}};
  CHECK(w.partition_form() == std::vector<long>{3, 1, 1});
  FundamentalWeightVector back = FundamentalWeightVector::from_partition({3, 1, 1});
  CHECK(back.a == w.a);
  CHECK(FundamentalWeightVector{{}}.partition_form().empty());
  CHECK_THROWS(FundamentalWeightVector::from_partition({1, 2}));
}

TEST_CASE("vz K-type weight") {
  CHECK(cocycles::vz_ktype_weight(3, 2, {}) == std::vector<long>{2, 2, 2});
  CHECK(cocycles::vz_ktype_weight(3, 2, {1}) == std::vector<long>{3, 2, 2});
  CHECK(cocycles::vz_ktype_weight(2, 1, {2, 1}) == std::vector<long>{3, 2});
  CHECK_THROWS(cocycles::vz_ktype_weight(1, 1, {1, 1}));
  CHECK_THROWS(cocycles::vz_ktype_weight(2, 1, {1, 2}));
}

TEST_CASE("K-type weight matches the root datum computation") {
  // lambda|_t + 2 rho(u cap p) for the standard parabolic, n <= 3, p+q <= 8.
  for (long p = 2; p <= 7; ++p) {
    for (long q = 1; p + q <= 8; ++q) {
      for (long n = 1; n <= 3 && 2 * n <= p; ++n) {
        auto [eps, delta] = vz::two_rho_u_cap_p(n, p, q);
        for (const std::vector<long>& lam :
             {std::vector<long>{}, std::vector<long>{1}, std::vector<long>{2, 1}}) {
          if (static_cast<long>(lam.size()) > n) continue;
          std::vector<long> expected = eps;
          for (size_t i = 0; i < lam.size(); ++i) expected[i] += lam[i];
          std::vector<long> got = cocycles::vz_ktype_weight(n, q, lam);
          got.resize(eps.size(), 0);
          CHECK(got == expected);
          for (long d : delta) CHECK(d == 0);
        }
      }
    }
  }
}
