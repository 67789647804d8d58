#ifndef DUALPAIR_CORE_EXTERIOR_HPP
#define DUALPAIR_CORE_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/gaussian.hpp"

namespace dualpair::exterior {

// Signature of p = V_+ (x) V_-^*; basis one-forms omega_{alpha,mu} with
// 1 <= alpha <= p and p+1 <= mu <= p+q.
struct PAmbient {
  long p = 0;
  long q = 0;

  long dim() const { return p * q; }

  friend bool operator==(const PAmbient& a, const PAmbient& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const PAmbient& a, const PAmbient& b) { return !(a == b); }
};

struct PBasisIndex {
  long alpha;  // 1..p
  long mu;     // p+1..p+q
};

// Element of the exterior algebra on p, with basis sets stored as bit masks
// over the slots (alpha-1)*q + (mu-p-1).  Antisymmetry is canonicalized:
// each basis set is kept sorted with the sign absorbed into the coefficient.
class MultiVector {
 public:
  MultiVector() = default;
  explicit MultiVector(PAmbient a);

  static MultiVector scalar(PAmbient a, GaussianRational c);
  static MultiVector basis_one_form(PAmbient a, PBasisIndex idx);

  const PAmbient& ambient() const { return ambient_; }
  const std::map<uint64_t, GaussianRational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous(long* deg_out = nullptr) const;

  void add_term(uint64_t mask, const GaussianRational& c);

  MultiVector operator+(const MultiVector& o) const;
  MultiVector operator-(const MultiVector& o) const;
  MultiVector operator*(const GaussianRational& c) const;
  MultiVector wedge(const MultiVector& o) const;
  MultiVector wedge_pow(long k) const;

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

  // Extends a linear map on basis one-forms (images given per slot) to a
  // derivation of the exterior algebra.  Used for infinitesimal invariance
  // checks.
  MultiVector apply_derivation(
      const std::vector<std::vector<std::pair<long, GaussianRational>>>& images) const;

  long slot(PBasisIndex idx) const;
  PBasisIndex unslot(long s) const;

  std::string str() const;

 private:
  void check_same(const MultiVector& o) const;

  PAmbient ambient_;
  std::map<uint64_t, GaussianRational> terms_;
};

// Curvature two-form Omega_{mu,nu} = sum_alpha omega_{alpha,mu} ^ omega_{alpha,nu}.
MultiVector curvature_form(PAmbient a, long mu, long nu);

// Euler form e_q: zero for odd q, otherwise the alternating sum over S_q of
// wedges of curvature two-forms.
MultiVector euler_form(PAmbient a);

// Vogan-Zuckerman vector e(q) of degree n*q:
//   wedge over j=1..n, k=1..q of (omega_{j,p+k} - i omega_{j',p+k}),
// j' = 2*p0 - j + 1 (expansion of u'_j = v_j - i v_{j'}).
MultiVector vz_vector(PAmbient a, long n);

// Derivation images of the so(p) generator v_a ^ v_b acting on the first
// tensor slot, and of the gl(q) elementary matrix E_{mu,nu} acting on the
// dual second slot; feed these to MultiVector::apply_derivation.
std::vector<std::vector<std::pair<long, GaussianRational>>> so_p_generator_images(PAmbient amb,
                                                                                  long a, long b);
std::vector<std::vector<std::pair<long, GaussianRational>>> gl_q_generator_images(PAmbient amb,
                                                                                  long mu, long nu);

}  // namespace dualpair::exterior

#endif
