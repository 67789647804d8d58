#ifndef DUALPAIR_TESTS_ORACLES_HPP
#define DUALPAIR_TESTS_ORACLES_HPP

// Independent reference computations for the unit tests.  Everything here is
// deliberately brute force and shares no code path with the library
// implementations it checks.

#include <map>
#include <vector>

#include "core/partition.hpp"

namespace oracles {

// Number of semistandard tableaux of the given shape with entries in 1..n,
// by direct enumeration (checks the hook content formula).
long ssyt_count(const dualpair::partitions::Partition& shape, long n);

// Monomial expansion of the Schur polynomial s_shape(x_1..x_nvars):
// exponent vector -> coefficient.
std::map<std::vector<long>, long> schur_monomials(const dualpair::partitions::Partition& shape,
                                                       long nvars);

std::map<std::vector<long>, long> poly_product(
    const std::map<std::vector<long>, long>& a,
    const std::map<std::vector<long>, long>& b);

}  // namespace oracles

#endif
