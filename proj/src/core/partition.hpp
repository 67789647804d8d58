#ifndef DUALPAIR_CORE_PARTITION_HPP
#define DUALPAIR_CORE_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/gaussian.hpp"

namespace dualpair::partitions {

// Weakly decreasing sequence of positive integers.  Trailing zeros are
// stripped on construction; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long size() const;                     // sum of parts
  size_t length() const { return parts_.size(); }
  long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool contains(const Partition& inner) const;  // inner ⊆ this, row by row
  Partition conjugate() const;

  static Partition rectangle(long rows, long cols);

  // Text form "3,1"; the zero partition prints as "[]".
  std::string str() const;
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<long> parts_;
};

// All partitions of n, largest part listed first ((n) before (n-1,1) ...).
// Optional bounds restrict the number of parts and the largest part.
std::vector<Partition> partitions_of(long n, long max_length = -1, long max_part = -1);

// c^{lam}_{mu,nu}: number of LR skew tableaux of shape lam/mu and weight nu.
// Degenerate inputs (mu not contained in lam, size mismatch) give 0.
Integer lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Littlewood's GL(p) -> SO(p) branching multiplicity:
//   sum over xi with all rows of even length of c^{mu}_{nu,xi}.
// Purely combinatorial; interpretation as an SO multiplicity needs
// length(mu) <= floor(p/2).
Integer littlewood_so_multiplicity(const Partition& mu, const Partition& nu);

// dim S_lam(C^n) by the hook content formula; 0 if length(lam) > n.
Integer schur_dim(const Partition& lam, long n);

// Dimension of the harmonic tensor module of O(m) with highest weight lam
// (Weyl dimension formula for types B/D; for type D with lam of full length
// the two SO(m) chiral halves are counted together).
// Throws if length(lam) > floor(m/2).
Integer so_harmonic_dim(const Partition& lam, long m);

// Pairs (mu, mu*) indexing the GL(p) x GL(q) decomposition of
// Lambda^R(C^p (x) C^q): mu runs over partitions of R inside the p x q box.
std::vector<std::pair<Partition, Partition>> cauchy_decompose(long p, long q, long R);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace dualpair::partitions

#endif
