#ifndef DUALPAIR_CORE_POLY_HPP
#define DUALPAIR_CORE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/gaussian.hpp"

namespace dualpair::fock {

// Signature record shared by all Fock model objects: polynomials live on
// V (x) C^n with dim V_+ = p, dim V_- = q, so in m*n variables z_{alpha,j},
// 1 <= alpha <= m = p+q, 1 <= j <= n.
struct Ambient {
  long p = 0;
  long q = 0;
  long n = 0;

  long m() const { return p + q; }
  long p0() const { return p / 2; }
  long var_count() const { return m() * n; }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.p == b.p && a.q == b.q && a.n == b.n;
  }
  friend bool operator!=(const Ambient& a, const Ambient& b) { return !(a == b); }
};

// Variable z_{alpha,j}; alpha <= p is a "positive" variable.
struct VarIndex {
  long alpha = 1;  // 1..m
  long j = 1;      // 1..n

  friend bool operator==(const VarIndex& a, const VarIndex& b) {
    return a.alpha == b.alpha && a.j == b.j;
  }
  friend bool operator<(const VarIndex& a, const VarIndex& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.j < b.j;
  }
};

// Exponent vector with finite support, kept sorted by (alpha, j).
class Monomial {
 public:
  Monomial() = default;

  long exponent(const VarIndex& v) const;
  void set_exponent(const VarIndex& v, long e);  // e = 0 erases
  long degree() const;
  bool is_constant() const { return factors_.empty(); }

  const std::vector<std::pair<VarIndex, long>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::pair<VarIndex, long>> factors_;
};

// Graded order, ties broken lexicographically by (alpha, j) with higher
// exponents first.  Gives every polynomial a canonical term sequence.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(Ambient a) : ambient_(a) {}

  static SparsePoly constant(Ambient a, GaussianRational c);
  static SparsePoly variable(Ambient a, VarIndex v);

  const Ambient& ambient() const { return ambient_; }
  const std::map<Monomial, GaussianRational, MonomialOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  long degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(long* deg_out = nullptr) const;
  bool supported_on_positive() const;

  void add_term(const Monomial& mono, const GaussianRational& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const GaussianRational& c) const;
  SparsePoly operator-() const;
  SparsePoly pow(long e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly partial(VarIndex v) const;

  // Substitute numeric values for every variable.  values[alpha-1][j-1].
  GaussianRational evaluate(const std::vector<std::vector<GaussianRational>>& values) const;

  // Substitute z_{alpha,j} -> sum_k subs[j-1][k-1] * z_{alpha,k}  (column
  // substitution by an n x n matrix acting on the copy index).
  SparsePoly substitute_columns(const std::vector<std::vector<GaussianRational>>& coeffs) const;

  std::string str() const;
  static SparsePoly parse(Ambient a, const std::string& text);

 private:
  void check_same(const SparsePoly& o) const;

  Ambient ambient_;
  std::map<Monomial, GaussianRational, MonomialOrder> terms_;
};

}  // namespace dualpair::fock

#endif
