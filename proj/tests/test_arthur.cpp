#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/arthur.hpp"

using namespace dualpair;
using arthur::ArchArthurParameter;
using arthur::CharDatum;
using arthur::Factor;

namespace {

CharDatum quad(int sign) {
  CharDatum c;
  c.kind = CharDatum::Kind::Quadratic;
  c.sign = sign;
  return c;
}

CharDatum unit(long weight, Rational shift = 0) {
  CharDatum c;
  c.kind = CharDatum::Kind::Unitary;
  c.weight = weight;
  c.shift = shift;
  return c;
}

ArchArthurParameter param(long m, std::vector<Factor> factors) {
  ArchArthurParameter psi;
  psi.m = m;
  psi.factors = std::move(factors);
  return psi;
}

std::vector<Rational> rats(std::vector<std::pair<long, long>> fracs) {
  std::vector<Rational> out;
  for (auto [n, d] : fracs) out.push_back(frac(n, d));
  return out;
}

}  // namespace

TEST_CASE("validator") {
  // Trivial representation shape for SO(4,1): 1 (x) R_4.
  CHECK(param(5, {{quad(+1), 4}}).validate().empty());
  // Repeated factor.
  CHECK_FALSE(param(5, {{quad(+1), 2}, {quad(+1), 2}}).validate().empty());
  // Wrong total dimension.
  CHECK_FALSE(param(5, {{quad(+1), 2}}).validate().empty());
  // Parity violation: quadratic factor needs a == m-1 mod 2.
  CHECK_FALSE(param(5, {{quad(+1), 3}, {quad(-1), 1}}).validate().empty());
  // Missing theta-dual partner.
  CHECK_FALSE(param(5, {{unit(1), 2}, {unit(2), 2}}).validate().empty());
  // Inversion-stable unitary pair is fine.
  CHECK(param(5, {{unit(1), 2}, {unit(-1), 2}}).validate().empty());
  // Inverting every character fixes the factor multiset.
  ArchArthurParameter psi = param(7, {{unit(2), 2}, {unit(-2), 2}, {quad(+1), 2}});
  ArchArthurParameter inverted = psi;
  for (Factor& f : inverted.factors) f.chr = f.chr.inverse();
  auto key = [](ArchArthurParameter p) {
    std::sort(p.factors.begin(), p.factors.end());
    return p.factors;
  };
  CHECK(key(psi) == key(inverted));
}

TEST_CASE("infinitesimal character strings") {
  // 1 (x) R_4 for m = 5: rho-string (3/2, 1/2), regular.
  {
    arthur::InfChar ic = arthur::infinitesimal_character(param(5, {{quad(+1), 4}}));
    CHECK(ic.entries == rats({{3, 2}, {1, 2}}));
    CHECK(ic.regular());
  }
  // 1 (x) R_5 + sgn (x) R_1 for m = 6: entries (2, 1, 0).
  {
    arthur::InfChar ic =
        arthur::infinitesimal_character(param(6, {{quad(+1), 5}, {quad(-1), 1}}));
    CHECK(ic.entries == rats({{2, 1}, {1, 1}, {0, 1}}));
    CHECK(ic.regular());
  }
  // Smallest realization of a lone quadratic R_1 string: m = 2.
  {
    arthur::InfChar ic =
        arthur::infinitesimal_character(param(2, {{quad(+1), 1}, {quad(-1), 1}}));
    CHECK(ic.entries == rats({{0, 1}}));
    CHECK(ic.regular());
  }
  // Equal parity quadratic pair with min(a,b) >= 2: shared nonzero entry.
  {
    arthur::InfChar ic =
        arthur::infinitesimal_character(param(6, {{quad(+1), 3}, {quad(-1), 3}}));
    CHECK(ic.entries == rats({{1, 1}, {1, 1}, {0, 1}}));
    CHECK_FALSE(ic.regular());
  }
  CHECK_THROWS(arthur::infinitesimal_character(param(5, {{quad(+1), 2}})));
}

TEST_CASE("regularity is entry distinctness") {
  arthur::InfChar reg{rats({{3, 2}, {1, 2}}), +1};
  CHECK(reg.regular());
  arthur::InfChar irr{rats({{1, 2}, {1, 2}}), +1};
  CHECK_FALSE(irr.regular());
}

TEST_CASE("exponents") {
  // Tempered shape: all SL2 factors trivial.
  {
    ArchArthurParameter psi = param(6, {{unit(1), 1},
                                        {unit(-1), 1},
                                        {unit(2), 1},
                                        {unit(-2), 1},
                                        {quad(+1), 1},
                                        {quad(-1), 1}});
    auto e = arthur::exponents(psi);
    CHECK(e == rats({{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}));
  }
  // SO-block dominates: max exponent m0 - 2.
  {
    vz::LeviDatum levi{{{1, 0}}, {4, 2}};  // SO(6,2) side, r = 1, m0 = 6
    ArchArthurParameter psi = arthur::aj_parameter(levi, 6, 2);
    auto e = arthur::exponents(psi);
    CHECK(e.front() == Rational(4));  // m0 - 2
    CHECK(e == rats({{4, 1}, {2, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {-2, 1}, {-4, 1}}));
  }
  // Scaled reading doubles unitary strings instead of repeating them.
  {
    ArchArthurParameter psi = param(5, {{unit(1), 2}, {unit(-1), 2}});
    CHECK(arthur::exponents(psi, arthur::ExpReading::PairedFactors) ==
          rats({{1, 1}, {1, 1}, {-1, 1}, {-1, 1}}));
    CHECK(arthur::exponents(psi, arthur::ExpReading::ScaledValues) ==
          rats({{2, 1}, {-2, 1}}));
  }
  // Non-AJ shapes (continuous shift) are rejected.
  {
    ArchArthurParameter psi = param(5, {{unit(1, frac(1, 3)), 2}, {unit(-1, frac(-1, 3)), 2}});
    CHECK_THROWS_AS(arthur::exponents(psi), std::domain_error);
  }
}

TEST_CASE("aj parameter shapes") {
  // Odd m0: single SO-block factor.
  {
    vz::LeviDatum levi{{{1, 0}}, {3, 2}};
    ArchArthurParameter psi = arthur::aj_parameter(levi, 5, 2);
    CHECK(psi.factors.size() == 3);
    CHECK(psi.total_dimension() == psi.N());
    CHECK(psi.factors.back().a == 4);  // R_{m0-1} with m0 = 5
  }
  // Even m0: extra quadratic R_1.
  {
    vz::LeviDatum levi{{{1, 0}}, {3, 1}};
    ArchArthurParameter psi = arthur::aj_parameter(levi, 5, 1);
    CHECK(psi.factors.size() == 4);
    long r1 = 0;
    for (const Factor& f : psi.factors)
      if (f.chr.kind == CharDatum::Kind::Quadratic && f.a == 1) ++r1;
    CHECK(r1 == 1);
  }
  // Compact SO block is rejected.
  CHECK_THROWS(arthur::aj_parameter(vz::LeviDatum{{{1, 0}}, {3, 0}}, 5, 0));
}

TEST_CASE("predicates") {
  // Highly non-tempered flag.
  {
    ArchArthurParameter psi = param(7, {{quad(+1), 4}, {unit(1), 1}, {unit(-1), 1}});
    CHECK(arthur::predicates(&psi, 0, 3, 4, 0).highly_non_tempered);  // 12 > 6
    ArchArthurParameter psi2 =
        param(7, {{quad(+1), 2}, {unit(1), 2}, {unit(-1), 2}});
    CHECK_FALSE(arthur::predicates(&psi2, 0, 3, 4, 0).highly_non_tempered);  // 6 > 6 fails
  }
  // SL2 lower bound with equality for the AJ parameter of SO(p-2r,q) x U(1)^r.
  {
    vz::LeviDatum levi{{{1, 0}}, {4, 2}};
    ArchArthurParameter psi = arthur::aj_parameter(levi, 6, 2);
    CHECK(arthur::predicates(&psi, 0, 6, 2, 1).sl2_lower_bound_met);  // contains R_{m-2r-1}
    CHECK_FALSE(arthur::predicates(&psi, 0, 6, 2, 0).sl2_lower_bound_met);  // needs R_{m-1}
  }
  // Bound truth table rows, hand computed.  Note n=1, p=5 fails the strict
  // inequality 1 < (1/2) floor(5/2) = 1.
  CHECK_FALSE(arthur::predicates(nullptr, 1, 5, 1, 0).thm1_bound);
  CHECK(arthur::predicates(nullptr, 1, 6, 1, 0).thm1_bound);
  CHECK(arthur::predicates(nullptr, 1, 5, 1, 0).thm3_bound);  // 1 < 3/2
  CHECK(arthur::predicates(nullptr, 1, 9, 1, 0).thm4_bound);  // 2 < 10 - 5 - 1
  CHECK_FALSE(arthur::predicates(nullptr, 2, 5, 4, 0).thm4_bound);
  // Rank conditions of the basic assumption.
  {
    arthur::PredicateReport rep = arthur::predicates(nullptr, 2, 7, 5, 0);  // m = 12
    CHECK(rep.rank_condition_1 == (2 < 5));
    CHECK(rep.rank_condition_2);  // vacuous for even m
    CHECK(rep.rank_condition_3 == (2 <= 3));
    CHECK(rep.basic_assumption == (4 < 5));
  }
}
