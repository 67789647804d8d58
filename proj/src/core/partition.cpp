#include "core/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dualpair::partitions {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw std::invalid_argument("parts must be weakly decreasing and positive: " + str());
  }
}

long Partition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<long> out(static_cast<size_t>(parts_[0]), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) out[j]++;
  return Partition(std::move(out));
}

Partition Partition::rectangle(long rows, long cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle");
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<long>(static_cast<size_t>(rows), cols));
}

std::string Partition::str() const {
  if (parts_.empty()) return "[]";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "[]") return {};
  std::vector<long> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition literal: " + s);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(long n, long max_part, long budget, std::vector<long>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (budget == 0) return;
  for (long first = std::min(n, max_part); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, budget - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n, long max_length, long max_part) {
  if (n < 0) return {};
  if (max_length < 0) max_length = n;
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  std::vector<long> cur;
  partitions_rec(n, max_part, max_length, cur, out);
  return out;
}

namespace {

// Backtracking enumeration of LR fillings of lam/mu with weight nu.  Cells
// are visited in reverse reading order (each row right to left, rows top to
// bottom) so that the lattice word condition can be checked prefix by prefix.
struct LRCounter {
  const std::vector<long>& lam;
  std::vector<long> mu;  // padded to lam's length
  const std::vector<long>& nu;
  std::vector<std::vector<long>> fill;  // full row storage, 0 = not in skew
  std::vector<long> counts;             // occurrences of each value so far
  Integer total = 0;

  LRCounter(const Partition& l, const Partition& m, const Partition& n)
      : lam(l.parts()), nu(n.parts()) {
    mu = m.parts();
    mu.resize(lam.size(), 0);
    fill.resize(lam.size());
    for (size_t r = 0; r < lam.size(); ++r) fill[r].assign(static_cast<size_t>(lam[r]), 0);
    counts.assign(nu.size() + 1, 0);
  }

  void run() { place(0, lam.empty() ? -1 : lam[0] - 1); }

  void place(size_t row, long col) {
    while (row < lam.size() && col < mu[row]) {
      ++row;
      if (row < lam.size()) col = lam[row] - 1;
    }
    if (row >= lam.size()) {
      total += 1;
      return;
    }
    long right = (col + 1 < lam[row]) ? fill[row][static_cast<size_t>(col + 1)] : 0;
    long above = 0;
    if (row > 0 && col < lam[row - 1]) above = fill[row - 1][static_cast<size_t>(col)];
    long hi = right > 0 ? right : static_cast<long>(nu.size());
    for (long v = above + 1; v <= hi; ++v) {
      if (counts[static_cast<size_t>(v)] >= nu[static_cast<size_t>(v - 1)]) continue;
      // Reverse lattice word: after placing v the prefix must still satisfy
      // #(v-1) >= #v.
      if (v > 1 && counts[static_cast<size_t>(v - 1)] <= counts[static_cast<size_t>(v)]) continue;
      fill[row][static_cast<size_t>(col)] = v;
      counts[static_cast<size_t>(v)]++;
      place(row, col - 1);
      counts[static_cast<size_t>(v)]--;
      fill[row][static_cast<size_t>(col)] = 0;
    }
  }
};

}  // namespace

Integer lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (!lam.contains(mu)) return 0;
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (lam == mu) return nu.length() == 0 ? 1 : 0;
  LRCounter counter(lam, mu, nu);
  counter.run();
  return counter.total;
}

Integer littlewood_so_multiplicity(const Partition& mu, const Partition& nu) {
  long diff = mu.size() - nu.size();
  if (diff < 0 || diff % 2 != 0) return diff == 0 && mu == nu ? 1 : 0;
  if (!mu.contains(nu)) return 0;
  Integer total = 0;
  // xi has even rows: xi = 2*eta with eta inside the halved bounding box.
  long max_half = mu.part(0) / 2;
  for (const Partition& eta :
       partitions_of(diff / 2, static_cast<long>(mu.length()), max_half)) {
    std::vector<long> doubled;
    doubled.reserve(eta.length());
    for (long p : eta.parts()) doubled.push_back(2 * p);
    total += lr_coefficient(mu, nu, Partition(std::move(doubled)));
  }
  return total;
}

Integer schur_dim(const Partition& lam, long n) {
  if (n <= 0) return lam.length() == 0 ? 1 : 0;
  if (static_cast<long>(lam.length()) > n) return 0;
  Partition conj = lam.conjugate();
  Integer num = 1, den = 1;
  for (size_t i = 0; i < lam.length(); ++i) {
    for (long j = 0; j < lam.parts()[i]; ++j) {
      long content = j - static_cast<long>(i);
      long hook = (lam.parts()[i] - j) + (conj.parts()[static_cast<size_t>(j)] -
                                          static_cast<long>(i)) - 1;
      num *= Integer(n + content);
      den *= Integer(hook);
    }
  }
  Rational q(num, den);
  q.canonicalize();
  if (q.get_den() != 1) throw std::logic_error("hook content product not integral");
  return q.get_num();
}

Integer so_harmonic_dim(const Partition& lam, long m) {
  if (m <= 0) throw std::invalid_argument("m must be positive");
  long ell = m / 2;
  if (static_cast<long>(lam.length()) > ell)
    throw std::invalid_argument("highest weight longer than rank of SO(" + std::to_string(m) + ")");
  if (ell == 0) return 1;
  bool odd = (m % 2) != 0;
  // Work with doubled coordinates so type B half-integers stay integral:
  // L_i = 2(lam_i + rho_i), R_i = 2 rho_i.
  std::vector<long> L(static_cast<size_t>(ell)), R(static_cast<size_t>(ell));
  for (long i = 1; i <= ell; ++i) {
    long rho2 = odd ? 2 * (ell - i) + 1 : 2 * (ell - i);
    R[static_cast<size_t>(i - 1)] = rho2;
    L[static_cast<size_t>(i - 1)] = 2 * lam.part(static_cast<size_t>(i - 1)) + rho2;
  }
  Integer num = 1, den = 1;
  for (long i = 0; i < ell; ++i) {
    for (long j = i + 1; j < ell; ++j) {
      num *= Integer(L[i] * L[i] - L[j] * L[j]);
      den *= Integer(R[i] * R[i] - R[j] * R[j]);
    }
    if (odd) {
      num *= Integer(L[i]);
      den *= Integer(R[i]);
    }
  }
  Rational q(num, den);
  q.canonicalize();
  if (q.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  Integer dim = q.get_num();
  // Type D with a full-length weight: the two SO(m) chiral summands together
  // form the harmonic module.
  if (!odd && lam.part(static_cast<size_t>(ell - 1)) > 0) dim *= 2;
  return dim;
}

std::vector<std::pair<Partition, Partition>> cauchy_decompose(long p, long q, long R) {
  std::vector<std::pair<Partition, Partition>> out;
  if (R < 0 || p <= 0 || q <= 0) return out;
  for (const Partition& mu : partitions_of(R, p, q)) out.emplace_back(mu, mu.conjugate());
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace dualpair::partitions
