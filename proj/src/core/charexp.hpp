#ifndef DUALPAIR_CORE_CHAREXP_HPP
#define DUALPAIR_CORE_CHAREXP_HPP

#include <map>
#include <vector>

#include "core/partition.hpp"

namespace dualpair::charexp {

// Character-side branching oracle, independent of the tableau route in
// partitions:: by construction.  Schur characters come from semistandard
// tableau monomials, orthogonal characters from Weyl alternant quotients,
// and GL -> SO branching multiplicities from leading-term subtraction in
// dominance order.

// Laurent polynomial in l torus variables; exponents are stored doubled so
// the half-integer weights of type B stay integral.
using Laurent = std::map<std::vector<long>, Integer>;

// Character of S_mu(C^p) restricted to the compact torus of SO(p),
// as a Laurent polynomial in l = floor(p/2) variables (doubled exponents).
Laurent schur_restricted(const partitions::Partition& mu, long p);

// Character of the harmonic module with highest weight nu (for even p with
// full-length nu: the sum of the two chiral characters).
Laurent so_character(const partitions::Partition& nu, long p);

// Expands a torus character into harmonic characters by repeated
// subtraction of the dominance-leading term.  Throws if the input is not a
// nonnegative combination.
std::map<partitions::Partition, Integer> branch_to_so(const Laurent& chi, long p);

// Multiplicity of nu in S_mu(C^p)|SO(p) from the character expansion.
Integer branching_multiplicity(const partitions::Partition& mu, const partitions::Partition& nu,
                               long p);

}  // namespace dualpair::charexp

#endif
