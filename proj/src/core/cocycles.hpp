#ifndef DUALPAIR_CORE_COCYCLES_HPP
#define DUALPAIR_CORE_COCYCLES_HPP

#include <vector>

#include "core/exterior.hpp"
#include "core/poly.hpp"

namespace dualpair::cocycles {

// Weight written in the fundamental weight basis: lambda = sum a_i pi_i,
// equivalently the partition lambda_k = sum_{i >= k} a_i.
struct FundamentalWeightVector {
  std::vector<long> a;

  std::vector<long> partition_form() const;
  static FundamentalWeightVector from_partition(const std::vector<long>& lam);
};

// Pairing of an n-tuple of coordinate vectors (positive part only, p entries
// each) against a degree-nq multivector: the determinant of the nq x nq
// matrix of bivector pairings, rows (i,beta) = x_i ^ v_{p+beta}, extended
// linearly over the terms of mv, and normalized so that the tuple
// (u''_1,...,u''_n) pairs to 1 against the Vogan-Zuckerman vector.
GaussianRational km_pair(const fock::Ambient& a,
                         const std::vector<std::vector<GaussianRational>>& xs,
                         const exterior::MultiVector& mv);

// phi_{nq}(e(q)) as a polynomial in the z variables.  Equals
// minor_delta(n)^q exactly under the fixed normalization.
fock::SparsePoly km_value_on_vz(const fock::Ambient& a);

// phi*_{0,l}(v_beta (x) e_I) = z_{beta_1,i_1} ... z_{beta_l,i_l}.
fock::SparsePoly fm_zero(const fock::Ambient& a, const std::vector<long>& I,
                         const std::vector<long>& beta);

// phi_{0,[lambda]} evaluated on the explicit highest weight tensor; equals
// prod_k Delta_k^{a_k} exactly.
fock::SparsePoly fm_highest_weight_value(const fock::Ambient& a,
                                         const FundamentalWeightVector& w);

// km_value_on_vz * fm_highest_weight_value = Delta_1^{a_1} ... Delta_n^{a_n+q}.
fock::SparsePoly full_cocycle_value(const fock::Ambient& a, const FundamentalWeightVector& w);

// Coordinates of the distinguished tuple (u''_1,...,u''_n): u''_gamma =
// (v_gamma + i v_{gamma'})/2, the Witt vector dual to u'_gamma.
std::vector<std::vector<GaussianRational>> witt_dual_tuple(const fock::Ambient& a);

// Highest weight (q+lambda_1,...,q+lambda_n) of the Vogan-Zuckerman K-type
// carried by the cocycle values; the Weil determinant twist m/2 is reported
// separately by the callers that know p.
std::vector<long> vz_ktype_weight(long n, long q, const std::vector<long>& lam);

}  // namespace dualpair::cocycles

#endif
