#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/partition.hpp"
#include "oracles.hpp"

using namespace dualpair;
using partitions::Partition;

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  // Rectangle n x q transposes to q x n.
  for (long n = 1; n <= 4; ++n)
    for (long q = 1; q <= 4; ++q)
      CHECK(Partition::rectangle(n, q).conjugate() == Partition::rectangle(q, n));
}

TEST_CASE("conjugation is an involution up to size 12") {
  for (long s = 0; s <= 12; ++s)
    for (const Partition& p : partitions::partitions_of(s)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition parse/print round trip") {
  CHECK(Partition({3, 1}).str() == "3,1");
  CHECK(Partition().str() == "[]");
  CHECK(Partition::parse("3,1") == Partition({3, 1}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("4,0,0") == Partition({4}));
  CHECK_THROWS(Partition::parse("1,3"));
}

TEST_CASE("lr coefficient basic values") {
  // Empty skew shape.
  Partition lam({3, 2});
  CHECK(partitions::lr_coefficient(lam, lam, Partition()) == 1);
  CHECK(partitions::lr_coefficient(lam, lam, Partition({1})) == 0);
  // Frozen from the monomial product oracle below: s_1 * s_1 = s_2 + s_11.
  CHECK(partitions::lr_coefficient(Partition({2}), Partition({1}), Partition({1})) == 1);
  // Degenerate inputs give 0.
  CHECK(partitions::lr_coefficient(Partition({1}), Partition({2}), Partition({1})) == 0);
  CHECK(partitions::lr_coefficient(Partition({3}), Partition({1}), Partition({1})) == 0);
}

TEST_CASE("rectangular skew shapes have a unique filling") {
  for (long q = 1; q <= 4; ++q) {
    for (long n = 1; n <= 3; ++n) {
      for (long r = 0; r <= n; ++r) {
        Partition lam = Partition::rectangle(n, q);
        Partition mu = Partition::rectangle(r, q);
        Partition filling = Partition::rectangle(n - r, q);
        CHECK(partitions::lr_coefficient(lam, mu, filling) == 1);
        // Every other weight of the right size gives zero.
        for (const Partition& nu : partitions::partitions_of((n - r) * q)) {
          if (nu == filling) continue;
          CHECK(partitions::lr_coefficient(lam, mu, nu) == 0);
        }
      }
    }
  }
}

TEST_CASE("lr coefficients against the Schur product oracle") {
  // Expand s_mu * s_nu in <= 3 variables by SSYT monomials and compare with
  // sum_lam c^lam_{mu nu} s_lam.
  const long nvars = 3;
  for (long smu = 0; smu + 0 <= 6; ++smu) {
    for (long snu = 0; smu + snu <= 6; ++snu) {
      for (const Partition& mu : partitions::partitions_of(smu, nvars)) {
        for (const Partition& nu : partitions::partitions_of(snu, nvars)) {
          auto lhs = oracles::poly_product(oracles::schur_monomials(mu, nvars),
                                           oracles::schur_monomials(nu, nvars));
          std::map<std::vector<long>, long> rhs;
          for (const Partition& lam : partitions::partitions_of(smu + snu, nvars)) {
            Integer c = partitions::lr_coefficient(lam, mu, nu);
            if (c == 0) continue;
            for (const auto& [e, m] : oracles::schur_monomials(lam, nvars))
              rhs[e] += c.get_si() * m;
          }
          for (auto it = rhs.begin(); it != rhs.end();)
            it = it->second == 0 ? rhs.erase(it) : std::next(it);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("lr symmetry in mu and nu") {
  for (long s = 0; s <= 8; ++s) {
    for (const Partition& lam : partitions::partitions_of(s)) {
      for (long smu = 0; smu <= s; ++smu) {
        for (const Partition& mu : partitions::partitions_of(smu)) {
          if (!lam.contains(mu)) continue;
          for (const Partition& nu : partitions::partitions_of(s - smu)) {
            CHECK(partitions::lr_coefficient(lam, mu, nu) ==
                  partitions::lr_coefficient(lam, nu, mu));
          }
        }
      }
    }
  }
}

TEST_CASE("littlewood branching small values") {
  // mu = nu: only xi empty contributes.
  CHECK(partitions::littlewood_so_multiplicity(Partition({2, 1}), Partition({2, 1})) == 1);
  // Sym^2 contains the invariant quadratic form: xi = (2).
  CHECK(partitions::littlewood_so_multiplicity(Partition({2}), Partition()) == 1);
  CHECK(partitions::littlewood_so_multiplicity(Partition({1, 1}), Partition()) == 0);
  CHECK(partitions::littlewood_so_multiplicity(Partition({1}), Partition()) == 0);
  // Odd size difference can never be filled with even rows.
  CHECK(partitions::littlewood_so_multiplicity(Partition({2, 1}), Partition()) == 0);
}

TEST_CASE("schur_dim matches SSYT enumeration") {
  CHECK(partitions::schur_dim(Partition({1}), 5) == 5);
  CHECK(partitions::schur_dim(Partition({1, 1}), 3) == 3);
  // Frozen from the enumeration oracle: 8 tableaux of shape (2,1), entries <= 3.
  CHECK(oracles::ssyt_count(Partition({2, 1}), 3) == 8);
  CHECK(partitions::schur_dim(Partition({2, 1}), 3) == 8);
  for (long s = 0; s <= 6; ++s)
    for (const Partition& lam : partitions::partitions_of(s))
      for (long n = 1; n <= 4; ++n)
        CHECK(partitions::schur_dim(lam, n) == oracles::ssyt_count(lam, n));
  CHECK(partitions::schur_dim(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("so_harmonic_dim standard values") {
  for (long m = 2; m <= 9; ++m) {
    CHECK(partitions::so_harmonic_dim(Partition(), m) == 1);
    CHECK(partitions::so_harmonic_dim(Partition({1}), m) == m);
    CHECK(partitions::so_harmonic_dim(Partition({2}), m) == m * (m + 1) / 2 - 1);
    if (m >= 4) CHECK(partitions::so_harmonic_dim(Partition({1, 1}), m) == m * (m - 1) / 2);
  }
  // Spherical harmonics on R^3 have dimension 2k+1.
  for (long k = 0; k <= 6; ++k)
    CHECK(partitions::so_harmonic_dim(Partition({k}), 3) == 2 * k + 1);
  CHECK_THROWS(partitions::so_harmonic_dim(Partition({1, 1}), 3));
}

TEST_CASE("cauchy decomposition") {
  auto single = partitions::cauchy_decompose(4, 3, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == Partition({1}));
  CHECK(single[0].second == Partition({1}));

  auto two = partitions::cauchy_decompose(2, 2, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].first == Partition({2}));
  CHECK(two[0].second == Partition({1, 1}));
  CHECK(two[1].first == Partition({1, 1}));
  CHECK(two[1].second == Partition({2}));
  // Dimension bookkeeping: 3*1 + 1*3 = C(4,2).
  Integer total = 0;
  for (const auto& [mu, mustar] : two)
    total += partitions::schur_dim(mu, 2) * partitions::schur_dim(mustar, 2);
  CHECK(total == 6);

  CHECK(partitions::cauchy_decompose(1, 1, 2).empty());
}
