#include "core/charexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualpair::charexp {

using partitions::Partition;

namespace {

void laurent_add(Laurent& a, const std::vector<long>& exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = a.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<long> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      laurent_add(out, e, ca * cb);
    }
  }
  return out;
}

Laurent laurent_det(const std::vector<std::vector<Laurent>>& mat, size_t ell) {
  // Column-subset DP as in the polynomial determinant; sizes here are tiny.
  std::vector<Laurent> dp(size_t(1) << ell);
  dp[0] = Laurent{{std::vector<long>(ell, 0), Integer(1)}};
  for (size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].empty()) continue;
    size_t row = static_cast<size_t>(__builtin_popcountll(mask));
    size_t skipped = 0;
    for (size_t c = 0; c < ell; ++c) {
      if (mask & (size_t(1) << c)) continue;
      if (!mat[row][c].empty()) {
        Laurent contrib = laurent_mul(dp[mask], mat[row][c]);
        for (auto& [e, coef] : contrib)
          laurent_add(dp[mask | (size_t(1) << c)], e, skipped % 2 ? -coef : coef);
      }
      ++skipped;
    }
  }
  return dp.back();
}

// Exact division, lex leading term reduction.  Coefficients stay rational
// during the reduction; the quotient must come out integral.
Laurent laurent_div(const Laurent& num, const Laurent& den) {
  if (den.empty()) throw std::invalid_argument("division by zero character");
  using RatLaurent = std::map<std::vector<long>, Rational>;
  RatLaurent rem;
  for (const auto& [e, c] : num) rem[e] = Rational(c);
  auto lead_den = den.rbegin();  // lex-max exponent (map is lex ordered)
  RatLaurent quot;
  while (!rem.empty()) {
    auto lead_rem = rem.rbegin();
    std::vector<long> qe(lead_rem->first.size());
    for (size_t i = 0; i < qe.size(); ++i) qe[i] = lead_rem->first[i] - lead_den->first[i];
    Rational qc = lead_rem->second / Rational(lead_den->second);
    quot[qe] += qc;
    for (const auto& [e, c] : den) {
      std::vector<long> t(e.size());
      for (size_t i = 0; i < t.size(); ++i) t[i] = e[i] + qe[i];
      auto it = rem.find(t);
      Rational nv = (it != rem.end() ? it->second : Rational(0)) - qc * Rational(c);
      if (nv == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[t] = nv;
      }
    }
  }
  Laurent out;
  for (const auto& [e, c] : quot) {
    if (c == 0) continue;
    Rational cc = c;
    cc.canonicalize();
    if (cc.get_den() != 1) throw std::logic_error("character quotient not integral");
    laurent_add(out, e, Integer(cc.get_num()));
  }
  return out;
}

// Doubled torus weight of the basis vector index e in 1..p.
std::vector<long> torus_weight(long e, long p) {
  long ell = p / 2;
  std::vector<long> w(static_cast<size_t>(ell), 0);
  if (e <= ell)
    w[static_cast<size_t>(e - 1)] = 2;
  else if (e <= 2 * ell)
    w[static_cast<size_t>(e - ell - 1)] = -2;
  // e == p for odd p: weight zero
  return w;
}

void ssyt_rec(const std::vector<long>& shape, long p, std::vector<std::vector<long>>& fill,
              size_t row, long col, Laurent& out, std::vector<long>& weight) {
  if (row == shape.size()) {
    laurent_add(out, weight, 1);
    return;
  }
  if (col == shape[row]) {
    ssyt_rec(shape, p, fill, row + 1, 0, out, weight);
    return;
  }
  long lo = col > 0 ? fill[row][static_cast<size_t>(col - 1)] : 1;
  if (row > 0 && col < shape[row - 1])
    lo = std::max(lo, fill[row - 1][static_cast<size_t>(col)] + 1);
  for (long v = lo; v <= p; ++v) {
    fill[row][static_cast<size_t>(col)] = v;
    std::vector<long> tw = torus_weight(v, p);
    for (size_t i = 0; i < tw.size(); ++i) weight[i] += tw[i];
    ssyt_rec(shape, p, fill, row, col + 1, out, weight);
    for (size_t i = 0; i < tw.size(); ++i) weight[i] -= tw[i];
  }
}

}  // namespace

Laurent schur_restricted(const Partition& mu, long p) {
  if (p < 2) throw std::invalid_argument("schur_restricted needs p >= 2");
  long ell = p / 2;
  Laurent out;
  if (static_cast<long>(mu.length()) > p) return out;  // zero character
  std::vector<std::vector<long>> fill(mu.length());
  for (size_t r = 0; r < mu.length(); ++r) fill[r].assign(static_cast<size_t>(mu.parts()[r]), 0);
  std::vector<long> weight(static_cast<size_t>(ell), 0);
  ssyt_rec(mu.parts(), p, fill, 0, 0, out, weight);
  return out;
}

Laurent so_character(const Partition& nu, long p) {
  long ell = p / 2;
  if (static_cast<long>(nu.length()) > ell)
    throw std::invalid_argument("so_character: weight longer than the rank");
  bool odd = p % 2 != 0;
  auto alternant = [&](bool plus, const std::vector<long>& lam2) {
    // det over i,j of x_i^{lam2_j/2} +- x_i^{-lam2_j/2} in doubled exponents.
    std::vector<std::vector<Laurent>> mat(static_cast<size_t>(ell),
                                          std::vector<Laurent>(static_cast<size_t>(ell)));
    for (long i = 0; i < ell; ++i) {
      for (long j = 0; j < ell; ++j) {
        std::vector<long> e(static_cast<size_t>(ell), 0);
        e[static_cast<size_t>(i)] = lam2[static_cast<size_t>(j)];
        laurent_add(mat[static_cast<size_t>(i)][static_cast<size_t>(j)], e, 1);
        e[static_cast<size_t>(i)] = -lam2[static_cast<size_t>(j)];
        laurent_add(mat[static_cast<size_t>(i)][static_cast<size_t>(j)], e,
                    plus ? Integer(1) : Integer(-1));
      }
    }
    return laurent_det(mat, static_cast<size_t>(ell));
  };
  std::vector<long> lam2(static_cast<size_t>(ell)), rho2(static_cast<size_t>(ell));
  for (long j = 1; j <= ell; ++j) {
    rho2[static_cast<size_t>(j - 1)] = odd ? 2 * (ell - j) + 1 : 2 * (ell - j);
    lam2[static_cast<size_t>(j - 1)] = 2 * nu.part(static_cast<size_t>(j - 1)) +
                                       rho2[static_cast<size_t>(j - 1)];
  }
  if (odd) return laurent_div(alternant(false, lam2), alternant(false, rho2));
  Laurent num = alternant(true, lam2);
  if (nu.part(static_cast<size_t>(ell - 1)) > 0) {
    // Full-length weight: both chiral halves together.  The doubling has to
    // happen before the division; one chirality alone is not a quotient of
    // these alternants.
    for (auto& [e, c] : num) c *= 2;
  }
  return laurent_div(num, alternant(true, rho2));
}

std::map<Partition, Integer> branch_to_so(const Laurent& chi, long p) {
  std::map<Partition, Integer> out;
  Laurent rem = chi;
  while (!rem.empty()) {
    // Dominant representative of each weight is |entries| sorted decreasingly;
    // the lex-largest one is the highest weight of a remaining constituent.
    std::vector<long> best;
    for (const auto& [e, c] : rem) {
      std::vector<long> dom(e.size());
      for (size_t i = 0; i < e.size(); ++i) dom[i] = std::abs(e[i]);
      std::sort(dom.begin(), dom.end(), std::greater<long>());
      if (best.empty() || dom > best) best = dom;
    }
    std::vector<long> parts(best.size());
    for (size_t i = 0; i < best.size(); ++i) {
      if (best[i] % 2 != 0) throw std::logic_error("half-integral weight in a polynomial character");
      parts[i] = best[i] / 2;
    }
    Partition nu(parts);
    auto it = rem.find(best);
    if (it == rem.end() || it->second <= 0)
      throw std::logic_error("character expansion produced a nonpositive leading multiplicity");
    Integer mult = it->second;
    Laurent ch = so_character(nu, p);
    for (const auto& [e, c] : ch) laurent_add(rem, e, -mult * c);
    out[nu] += mult;
  }
  return out;
}

Integer branching_multiplicity(const Partition& mu, const Partition& nu, long p) {
  auto table = branch_to_so(schur_restricted(mu, p), p);
  auto it = table.find(nu);
  return it == table.end() ? Integer(0) : it->second;
}

}  // namespace dualpair::charexp
