#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/exterior.hpp"

using namespace dualpair;
using exterior::MultiVector;
using exterior::PAmbient;

namespace {

MultiVector form(PAmbient a, long alpha, long mu) {
  return MultiVector::basis_one_form(a, {alpha, mu});
}

MultiVector random_mv(PAmbient a, std::mt19937& rng, int terms, int degree) {
  std::uniform_int_distribution<long> alpha(1, a.p), mu(a.p + 1, a.p + a.q), coef(-3, 3);
  MultiVector out(a);
  for (int t = 0; t < terms; ++t) {
    MultiVector piece = MultiVector::scalar(a, GaussianRational(coef(rng), coef(rng)));
    for (int d = 0; d < degree; ++d) piece = piece.wedge(form(a, alpha(rng), mu(rng)));
    out = out + piece;
  }
  return out;
}

}  // namespace

TEST_CASE("wedge basics") {
  PAmbient a{2, 2};
  MultiVector w = form(a, 1, 3);
  CHECK(w.wedge(w).is_zero());
  CHECK(form(a, 1, 3).wedge(form(a, 2, 3)) ==
        form(a, 2, 3).wedge(form(a, 1, 3)) * GaussianRational(-1));
  MultiVector one = MultiVector::scalar(a, GaussianRational(1));
  CHECK(one.wedge(w) == w);
  CHECK(w.wedge(one) == w);
}

TEST_CASE("graded anticommutativity and associativity") {
  PAmbient a{3, 2};
  std::mt19937 rng(1234);
  for (int da = 0; da <= 3; ++da) {
    for (int db = 0; db + da <= 6 && db <= 3; ++db) {
      MultiVector x = random_mv(a, rng, 3, da);
      MultiVector y = random_mv(a, rng, 3, db);
      MultiVector z = random_mv(a, rng, 2, 1);
      int sign = (da * db) % 2 == 0 ? 1 : -1;
      CHECK(x.wedge(y) == y.wedge(x) * GaussianRational(sign));
      CHECK(x.wedge(y).wedge(z) == x.wedge(y.wedge(z)));
    }
  }
}

TEST_CASE("ambient mismatch is rejected") {
  MultiVector a = MultiVector::scalar({2, 2}, GaussianRational(1));
  MultiVector b = MultiVector::scalar({2, 3}, GaussianRational(1));
  CHECK_THROWS_AS((void)a.wedge(b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
}

TEST_CASE("curvature forms") {
  PAmbient a{2, 3};
  CHECK(exterior::curvature_form(a, 3, 3).is_zero());
  CHECK(exterior::curvature_form(a, 3, 4) ==
        exterior::curvature_form(a, 4, 3) * GaussianRational(-1));
  PAmbient a1{1, 2};
  CHECK(exterior::curvature_form(a1, 2, 3) == form(a1, 1, 2).wedge(form(a1, 1, 3)));
  CHECK_THROWS(exterior::curvature_form(a, 1, 4));
}

TEST_CASE("euler form values") {
  for (long q : {1L, 3L, 5L}) {
    PAmbient a{2, q};
    CHECK(exterior::euler_form(a).is_zero());
  }
  PAmbient a22{2, 2};
  CHECK(exterior::euler_form(a22) == exterior::curvature_form(a22, 3, 4) * GaussianRational(2));
  CHECK_FALSE(exterior::euler_form(a22).is_zero());
  // e_q^k is nonzero exactly while kq <= pq (k <= p), per the multiplicity-one
  // analysis of the invariant subring.
  for (long p = 1; p <= 3; ++p) {
    PAmbient a{p, 2};
    MultiVector e = exterior::euler_form(a);
    for (long k = 1; k <= p + 1; ++k) CHECK(e.wedge_pow(k).is_zero() == (k > p));
  }
}

TEST_CASE("vz vector expansions") {
  PAmbient a21{2, 1};
  // u'_1 ^ v_{p+1} with u'_1 = v_1 - i v_2.
  CHECK(exterior::vz_vector(a21, 1) ==
        form(a21, 1, 3) - form(a21, 2, 3) * GaussianRational::i());

  PAmbient a22{2, 2};
  MultiVector expected = (form(a22, 1, 3) - form(a22, 2, 3) * GaussianRational::i())
                             .wedge(form(a22, 1, 4) - form(a22, 2, 4) * GaussianRational::i());
  CHECK(exterior::vz_vector(a22, 1) == expected);
  CHECK(exterior::vz_vector(a22, 0) == MultiVector::scalar(a22, GaussianRational(1)));
  CHECK_THROWS(exterior::vz_vector(a22, 2));

  long deg = -1;
  PAmbient a62{6, 2};
  CHECK(exterior::vz_vector(a62, 3).is_homogeneous(&deg));
  CHECK(deg == 6);
}

TEST_CASE("euler form is infinitesimally invariant") {
  for (long p = 1; p <= 3; ++p) {
    for (long q = 2; q <= 3; ++q) {
      PAmbient a{p, q};
      MultiVector e = exterior::euler_form(a);
      for (long x = 1; x <= p; ++x)
        for (long y = x + 1; y <= p; ++y)
          CHECK(e.apply_derivation(exterior::so_p_generator_images(a, x, y)).is_zero());
      // sl(q): off-diagonal generators and diagonal differences.
      for (long mu = a.p + 1; mu <= a.p + a.q; ++mu) {
        for (long nu = a.p + 1; nu <= a.p + a.q; ++nu) {
          if (mu == nu) continue;
          CHECK(e.apply_derivation(exterior::gl_q_generator_images(a, mu, nu)).is_zero());
        }
      }
      for (long mu = a.p + 1; mu < a.p + a.q; ++mu) {
        MultiVector d1 = e.apply_derivation(exterior::gl_q_generator_images(a, mu, mu));
        MultiVector d2 = e.apply_derivation(exterior::gl_q_generator_images(a, mu + 1, mu + 1));
        CHECK(d1 - d2 == MultiVector(a));
      }
    }
  }
}

TEST_CASE("kernel criterion at tiny scale") {
  // c ^ e(q_r) = 0 exactly when c = e_q^k with k > p - 2r, matching the
  // restriction-map kernel description (checked for the invariant-ring
  // generators at (p,q) = (3,1) and (2,2)).
  {
    PAmbient a{3, 1};  // q odd: the only invariants are the constants
    MultiVector one = MultiVector::scalar(a, GaussianRational(1));
    for (long r = 0; r <= 1; ++r) {
      MultiVector eq = exterior::vz_vector(a, r);
      CHECK_FALSE(one.wedge(eq).is_zero());
      CHECK(exterior::euler_form(a).is_zero());
    }
  }
  {
    PAmbient a{2, 2};
    MultiVector e = exterior::euler_form(a);
    for (long r = 0; r <= 1; ++r) {
      MultiVector eq = exterior::vz_vector(a, r);
      for (long k = 0; k * a.q + r * a.q <= a.p * a.q; ++k) {
        bool kills = e.wedge_pow(k).wedge(eq).is_zero();
        CHECK(kills == (k > a.p - 2 * r));
      }
    }
  }
}
