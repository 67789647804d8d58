#include "core/vz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dualpair::vz {

long LeviDatum::sum_pu() const {
  long s = 0;
  for (const auto& [pj, qj] : u_blocks) s += pj;
  return s;
}

long LeviDatum::sum_qu() const {
  long s = 0;
  for (const auto& [pj, qj] : u_blocks) s += qj;
  return s;
}

void LeviDatum::validate(long p, long q) const {
  if (so_block.first < 0 || so_block.second < 0)
    throw std::invalid_argument("negative SO block");
  for (const auto& [pj, qj] : u_blocks)
    if (pj < 0 || qj < 0 || pj + qj == 0)
      throw std::invalid_argument("unitary blocks must be nonzero with nonnegative entries");
  if (so_block.first + 2 * sum_pu() != p || so_block.second + 2 * sum_qu() != q)
    throw std::invalid_argument("Levi blocks do not add up to the signature (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
}

LeviDatum LeviDatum::normalized() const {
  LeviDatum out;
  out.so_block = so_block;
  for (const auto& [pj, qj] : u_blocks) {
    if (qj == 0)
      for (long k = 0; k < pj; ++k) out.u_blocks.push_back({1, 0});
    else if (pj == 0)
      for (long k = 0; k < qj; ++k) out.u_blocks.push_back({0, 1});
    else
      out.u_blocks.push_back({pj, qj});
  }
  std::sort(out.u_blocks.begin(), out.u_blocks.end(),
            [](const auto& a, const auto& b) { return a > b; });
  return out;
}

std::string LeviDatum::str() const {
  std::ostringstream os;
  for (const auto& [pj, qj] : u_blocks) os << "U(" << pj << "," << qj << ") x ";
  os << "SO(" << so_block.first << "," << so_block.second << ")";
  return os.str();
}

namespace {

// ad(X)-eigenvalues on C^p (or C^q): +-t_j with multiplicity p_j per sign for
// the j-th unitary block, 0 with multiplicity p_0.
std::vector<long> block_eigenvalues(const std::vector<long>& sizes, long zero_count) {
  std::vector<long> eig;
  for (size_t j = 0; j < sizes.size(); ++j) {
    long t = static_cast<long>(j) + 1;
    for (long k = 0; k < sizes[j]; ++k) {
      eig.push_back(t);
      eig.push_back(-t);
    }
  }
  for (long k = 0; k < zero_count; ++k) eig.push_back(0);
  return eig;
}

}  // namespace

long dim_u_cap_p(const LeviDatum& levi, long p, long q) {
  levi.validate(p, q);
  std::vector<long> psz, qsz;
  for (const auto& [pj, qj] : levi.u_blocks) {
    psz.push_back(pj);
    qsz.push_back(qj);
  }
  std::vector<long> a = block_eigenvalues(psz, levi.so_block.first);
  std::vector<long> b = block_eigenvalues(qsz, levi.so_block.second);
  long count = 0;
  for (long x : a)
    for (long y : b)
      if (x + y > 0) ++count;
  return count;
}

namespace {

void enumerate_levis(long p_left, long q_left, std::pair<long, long> max_block,
                     LeviDatum& cur, std::vector<LeviDatum>& out, long p, long q) {
  cur.so_block = {p_left, q_left};
  out.push_back(cur);
  // Add one more unitary block, no larger than the previous one (canonical
  // descending order avoids duplicates).
  for (long pj = max_block.first; pj >= 0; --pj) {
    long qj_start = (pj == max_block.first) ? max_block.second : q_left / 2;
    for (long qj = std::min(qj_start, q_left / 2); qj >= 0; --qj) {
      if (pj + qj == 0) continue;
      if (2 * pj > p_left || 2 * qj > q_left) continue;
      cur.u_blocks.push_back({pj, qj});
      enumerate_levis(p_left - 2 * pj, q_left - 2 * qj, {pj, qj}, cur, out, p, q);
      cur.u_blocks.pop_back();
    }
  }
}

}  // namespace

std::vector<LeviDatum> low_degree_levis(long R, long p, long q) {
  if (p < 1 || q < 1) throw std::invalid_argument("signature entries must be positive");
  // R < min(p+q-3, pq/4), exact rational comparison for pq/4.
  if (!(R < p + q - 3 && 4 * R < p * q))
    throw std::invalid_argument("precondition R < min(p+q-3, pq/4) violated");
  std::vector<LeviDatum> all;
  LeviDatum cur;
  enumerate_levis(p, q, {p / 2, q / 2}, cur, all, p, q);
  std::vector<LeviDatum> hits;
  for (const LeviDatum& levi : all) {
    if (dim_u_cap_p(levi, p, q) != R) continue;
    hits.push_back(levi.normalized());
  }
  // Distinct raw multisets can normalize to the same Levi (U(2,0) vs U(1,0)^2).
  auto key = [](const LeviDatum& l) { return std::make_pair(l.u_blocks, l.so_block); };
  std::sort(hits.begin(), hits.end(),
            [&](const LeviDatum& a, const LeviDatum& b) { return key(a) < key(b); });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [&](const LeviDatum& a, const LeviDatum& b) { return key(a) == key(b); }),
             hits.end());
  // The classification: every hit must be C x SO(p-2n,q) (all q_j = 0) or
  // C x SO(p,q-2n) (all p_j = 0).
  for (const LeviDatum& levi : hits) {
    if (levi.sum_qu() != 0 && levi.sum_pu() != 0)
      throw std::logic_error("low degree Levi with a mixed unitary block: " + levi.str());
  }
  return hits;
}

std::pair<std::vector<long>, std::vector<long>> two_rho_u_cap_p(long n, long p, long q) {
  if (n < 0 || 2 * n > p) throw std::out_of_range("need 0 <= 2n <= p");
  // Weight vectors of V_+ under the compact torus: +-eps_alpha on the first
  // 2*floor(p/2) coordinates (paired alpha, alpha'), 0 on the odd leftover;
  // similarly +-delta_beta for V_-.  u cap p is spanned by the X-positive
  // weight vectors; for the standard X only the +eps_j (x) (V_- weights),
  // j <= n, are positive.
  std::vector<long> eps(static_cast<size_t>(p / 2), 0);
  std::vector<long> delta(static_cast<size_t>(q / 2), 0);
  for (long j = 0; j < n; ++j) {
    // Each +eps_j tensor factor meets all q weight vectors of V_-; their
    // delta weights cancel pairwise, leaving q * eps_j.
    eps[static_cast<size_t>(j)] += q;
  }
  return {eps, delta};
}

std::map<long, long> cohomology_degrees(CohomologyFamily family, long n, long parameter) {
  std::map<long, long> table;
  switch (family) {
    case CohomologyFamily::SOn1Trivial: {
      long ell = (n + 1) / 2;
      long qdeg = parameter;
      if (n < 2) throw std::invalid_argument("SO(n,1) needs n >= 2");
      if (qdeg < 0 || qdeg > ell || (qdeg == ell && n != 2 * ell))
        throw std::invalid_argument("module index must satisfy 0 <= q <= l-1 (q = l only for even n)");
      if (2 * qdeg == n) {
        table[qdeg] = 1;  // either middle module pi_l^{+-}
      } else {
        table[qdeg] = 1;
        table[n - qdeg] = 1;
      }
      return table;
    }
    case CohomologyFamily::SOn1Weight1: {
      if (n < 3) throw std::invalid_argument("SO(n,1) with standard coefficients needs n >= 3");
      table[1] = 1;
      table[n - 1] = 1;
      return table;
    }
    case CohomologyFamily::SOn2Trivial: {
      long r = parameter;
      if (r < 0 || 4 * r >= n)
        throw std::invalid_argument("A_{r,r} needs 0 <= r and 4r < n");
      for (long k = 0; k <= n - 2 * r; ++k) table[2 * r + 2 * k] = 1;
      return table;
    }
  }
  throw std::invalid_argument("unsupported cohomology family");
}

}  // namespace dualpair::vz
