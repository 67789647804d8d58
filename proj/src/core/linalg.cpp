#include "core/linalg.hpp"

#include <stdexcept>

namespace dualpair::linalg {

size_t rank(std::vector<std::vector<GaussianRational>> mat) {
  if (mat.empty()) return 0;
  size_t rows = mat.size(), cols = mat[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && mat[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[r], mat[pivot]);
    GaussianRational inv = mat[r][c].inverse();
    for (size_t cc = c; cc < cols; ++cc) mat[r][cc] *= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || mat[rr][c].is_zero()) continue;
      GaussianRational f = mat[rr][c];
      for (size_t cc = c; cc < cols; ++cc) mat[rr][cc] -= f * mat[r][cc];
    }
    ++r;
  }
  return r;
}

fock::SparsePoly poly_det(const std::vector<std::vector<fock::SparsePoly>>& mat,
                          const fock::Ambient& ambient) {
  const size_t n = mat.size();
  if (n > 20) throw std::invalid_argument("poly_det: matrix too large");
  for (const auto& row : mat)
    if (row.size() != n) throw std::invalid_argument("poly_det: matrix not square");
  // dp[mask] = signed sum over the first popcount(mask) rows using exactly
  // the columns in mask.
  std::vector<fock::SparsePoly> dp(size_t(1) << n, fock::SparsePoly(ambient));
  dp[0] = fock::SparsePoly::constant(ambient, GaussianRational(1));
  for (size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    size_t row = static_cast<size_t>(__builtin_popcountll(mask));
    size_t skipped = 0;
    for (size_t c = 0; c < n; ++c) {
      if (mask & (size_t(1) << c)) continue;
      if (!mat[row][c].is_zero()) {
        fock::SparsePoly contrib = dp[mask] * mat[row][c];
        if (skipped % 2 == 1) contrib = -contrib;
        dp[mask | (size_t(1) << c)] = dp[mask | (size_t(1) << c)] + contrib;
      }
      ++skipped;
    }
  }
  return dp.back();
}

GaussianRational scalar_det(std::vector<std::vector<GaussianRational>> mat) {
  const size_t n = mat.size();
  GaussianRational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && mat[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return GaussianRational(0);
    if (pivot != c) {
      std::swap(mat[c], mat[pivot]);
      det = -det;
    }
    det *= mat[c][c];
    GaussianRational inv = mat[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (mat[r][c].is_zero()) continue;
      GaussianRational f = mat[r][c] * inv;
      for (size_t cc = c; cc < n; ++cc) mat[r][cc] -= f * mat[c][cc];
    }
  }
  return det;
}

}  // namespace dualpair::linalg
