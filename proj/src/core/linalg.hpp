#ifndef DUALPAIR_CORE_LINALG_HPP
#define DUALPAIR_CORE_LINALG_HPP

#include <vector>

#include "core/gaussian.hpp"
#include "core/poly.hpp"

namespace dualpair::linalg {

// Rank of a dense matrix over Q(i) by exact Gaussian elimination.
// The matrix is consumed.
size_t rank(std::vector<std::vector<GaussianRational>> mat);

// Determinant of a square matrix with polynomial entries, computed by a
// column-subset DP (exact, no division).  Suited to the small structured
// matrices that show up in cocycle evaluations.
fock::SparsePoly poly_det(const std::vector<std::vector<fock::SparsePoly>>& mat,
                          const fock::Ambient& ambient);

GaussianRational scalar_det(std::vector<std::vector<GaussianRational>> mat);

}  // namespace dualpair::linalg

#endif
