#ifndef DUALPAIR_CORE_ARTHUR_HPP
#define DUALPAIR_CORE_ARTHUR_HPP

#include <map>
#include <string>
#include <vector>

#include "core/gaussian.hpp"
#include "core/vz.hpp"

namespace dualpair::arthur {

// Archimedean character datum.  quadratic: trivial (sign=+1) or sgn (-1);
// unitary: (z/|z|)^weight |z|^(2 shift); discrete: the 2-dimensional
// parameter delta(k) of GL(2,R).
struct CharDatum {
  enum class Kind { Quadratic, Unitary, Discrete };
  Kind kind = Kind::Quadratic;
  int sign = +1;       // quadratic
  long weight = 0;     // unitary
  Rational shift = 0;  // unitary
  long k = 0;          // discrete

  long dimension() const { return kind == Kind::Discrete ? 2 : 1; }
  CharDatum inverse() const;
  bool self_dual() const;
  // z-exponents P of the character(s) restricted to C^*.
  std::vector<Rational> z_exponents() const;

  friend bool operator==(const CharDatum& a, const CharDatum& b);
  friend bool operator<(const CharDatum& a, const CharDatum& b);
  std::string str() const;
};

struct Factor {
  CharDatum chr;
  long a = 1;  // SL_2(C) dimension

  long dimension() const { return chr.dimension() * a; }
  friend bool operator==(const Factor& x, const Factor& y) { return x.chr == y.chr && x.a == y.a; }
  friend bool operator<(const Factor& x, const Factor& y) {
    return x.a != y.a ? x.a < y.a : x.chr < y.chr;
  }
};

// Formal sum of local factors for SO(p,q) with p+q = m; N = 2 floor(m/2).
struct ArchArthurParameter {
  std::vector<Factor> factors;
  long m = 0;

  long N() const { return 2 * (m / 2); }
  long total_dimension() const;

  // Distinctness, theta-self-duality, total dimension, and the parity
  // constraint a == m-1 (mod 2) for quadratic-character factors.
  // Returns an empty string when valid, else a description of the defect.
  std::string validate() const;
};

// Infinitesimal character (P_1,...,P_l) mod the Weyl group, stored as the
// l nonnegative representatives sorted decreasingly, plus a sign parity bit
// for the type D orbit (product of signs when no entry vanishes).
struct InfChar {
  std::vector<Rational> entries;
  int sign_parity = +1;

  bool regular() const;
  std::string str() const;
};

InfChar infinitesimal_character(const ArchArthurParameter& psi);

enum class ExpReading {
  PairedFactors,  // each unitary factor of the pair contributes its own string
  ScaledValues,   // alternative literal reading: values doubled instead
};

// Exponent multiset Exp(pi) for an Adams-Johnson shaped parameter: each
// factor eta (x) R_a contributes dim(eta) copies of {a-1, a-3, ..., 1-a}.
// Throws for non-AJ shapes (any factor with nonzero continuous shift).
std::vector<Rational> exponents(const ArchArthurParameter& psi,
                                ExpReading reading = ExpReading::PairedFactors);

// Adams-Johnson parameter attached to a Levi: unitary pairs
// (mu_j, mu_j^{-1}) (x) R_{m_j} plus the SO-block factor(s)
// chi (x) R_{m0-1} [+ chi' (x) R_1 for even m0].  Default characters:
// mu_j of weight j, chi trivial, chi' = sgn.
ArchArthurParameter aj_parameter(const vz::LeviDatum& levi, long p, long q,
                                 const std::vector<CharDatum>* unitary_chars = nullptr);

struct PredicateReport {
  bool highly_non_tempered = false;     // some quadratic eta (x) R_a with 3a > m-1
  bool thm4_bound = false;              // 2n < m - floor(m/2) - 1
  bool thm1_bound = false;              // n < floor(p/2) / 2
  bool thm3_bound = false;              // n < floor((p+1)/2) / 2
  bool sl2_lower_bound_met = false;     // some R_a with a >= m - 2r - 1
  bool basic_assumption = false;        // 2n < floor((m-1)/2)
  bool rank_condition_1 = false;        // m even: n < m/2 - 1
  bool rank_condition_2 = false;        // m odd: n < (m-1)/2
  bool rank_condition_3 = false;        // n <= floor(p/2)
};

PredicateReport predicates(const ArchArthurParameter* psi, long n, long p, long q, long r);

}  // namespace dualpair::arthur

#endif
