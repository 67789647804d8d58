#include "oracles.hpp"

#include <algorithm>

namespace oracles {

using dualpair::partitions::Partition;

namespace {

void ssyt_rec(const std::vector<long>& shape, long n, std::vector<std::vector<long>>& fill,
              size_t row, long col, long& count,
              std::map<std::vector<long>, long>* monomials, std::vector<long>& weight) {
  if (row == shape.size()) {
    ++count;
    if (monomials) (*monomials)[weight] += 1;
    return;
  }
  if (col == shape[row]) {
    ssyt_rec(shape, n, fill, row + 1, 0, count, monomials, weight);
    return;
  }
  long lo = col > 0 ? fill[row][static_cast<size_t>(col - 1)] : 1;
  if (row > 0 && col < shape[row - 1])
    lo = std::max(lo, fill[row - 1][static_cast<size_t>(col)] + 1);
  for (long v = lo; v <= n; ++v) {
    fill[row][static_cast<size_t>(col)] = v;
    weight[static_cast<size_t>(v - 1)] += 1;
    ssyt_rec(shape, n, fill, row, col + 1, count, monomials, weight);
    weight[static_cast<size_t>(v - 1)] -= 1;
  }
}

void run_ssyt(const Partition& shape, long n, long& count,
              std::map<std::vector<long>, long>* monomials) {
  std::vector<std::vector<long>> fill(shape.length());
  for (size_t r = 0; r < shape.length(); ++r)
    fill[r].assign(static_cast<size_t>(shape.parts()[r]), 0);
  std::vector<long> weight(static_cast<size_t>(n), 0);
  ssyt_rec(shape.parts(), n, fill, 0, 0, count, monomials, weight);
}

}  // namespace

long ssyt_count(const Partition& shape, long n) {
  if (static_cast<long>(shape.length()) > n) return 0;
  long count = 0;
  run_ssyt(shape, n, count, nullptr);
  return count;
}

std::map<std::vector<long>, long> schur_monomials(const Partition& shape, long nvars) {
  std::map<std::vector<long>, long> out;
  if (static_cast<long>(shape.length()) > nvars) return out;
  long count = 0;
  run_ssyt(shape, nvars, count, &out);
  return out;
}

std::map<std::vector<long>, long> poly_product(
    const std::map<std::vector<long>, long>& a,
    const std::map<std::vector<long>, long>& b) {
  std::map<std::vector<long>, long> out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<long> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
      if (out[e] == 0) out.erase(e);
    }
  }
  return out;
}

}  // namespace oracles
