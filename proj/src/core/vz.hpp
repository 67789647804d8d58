#ifndef DUALPAIR_CORE_VZ_HPP
#define DUALPAIR_CORE_VZ_HPP

#include <map>
#include <string>
#include <vector>

namespace dualpair::vz {

// Levi subgroup U(p_1,q_1) x ... x U(p_r,q_r) x SO(p_0,q_0) of SO(p,q),
// with p_0 + 2 sum p_j = p and q_0 + 2 sum q_j = q.
struct LeviDatum {
  std::vector<std::pair<long, long>> u_blocks;
  std::pair<long, long> so_block{0, 0};

  long sum_pu() const;
  long sum_qu() const;
  long m0() const { return so_block.first + so_block.second; }
  long ell0() const { return m0() / 2; }
  long n0() const { return 2 * ell0(); }

  void validate(long p, long q) const;

  // Splits compact unitary blocks U(k,0) / U(0,k) into U(1,0)^k / U(0,1)^k
  // and sorts blocks; the Levi stays the same up to compact factors.
  LeviDatum normalized() const;

  std::string str() const;
};

// R = dim(u cap p) for the theta-stable parabolic defined by an element X
// with distinct positive eigenvalues on the unitary blocks and zero on the
// SO block: the number of positive ad(X)-eigenvalues on V_+ (x) V_-.
long dim_u_cap_p(const LeviDatum& levi, long p, long q);

// All Levi data (canonically ordered, one per isomorphism class) with
// dim(u cap p) = R.  Requires R < min(p+q-3, pq/4); the classification says
// only C x SO(p-2n,q) and C x SO(p,q-2n) shapes can appear.
std::vector<LeviDatum> low_degree_levis(long R, long p, long q);

// 2 rho(u cap p) for the standard parabolic with Levi U(1)^n x SO(p-2n,q):
// the sum of the torus weights of u cap p, returned as (SO(p)-side entries;
// SO(q)-side entries).
std::pair<std::vector<long>, std::vector<long>> two_rho_u_cap_p(long n, long p, long q);

enum class CohomologyFamily {
  SOn1Trivial,   // G = SO(n,1), trivial coefficients, module pi_q
  SOn1Weight1,   // G = SO(n,1), lambda = (1,0,...,0)
  SOn2Trivial,   // G = SO(n,2), trivial coefficients, module A_{r,r}
};

// Degree -> dim H^degree(g,K; V otimes E) tables for the worked families.
std::map<long, long> cohomology_degrees(CohomologyFamily family, long n, long parameter);

}  // namespace dualpair::vz

#endif
