#include "core/arthur.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dualpair::arthur {

CharDatum CharDatum::inverse() const {
  CharDatum out = *this;
  switch (kind) {
    case Kind::Quadratic:
      break;  // self-inverse
    case Kind::Unitary:
      out.weight = -weight;
      out.shift = -shift;
      break;
    case Kind::Discrete:
      break;  // delta(k) is self-dual
  }
  return out;
}

bool CharDatum::self_dual() const { return *this == inverse(); }

std::vector<Rational> CharDatum::z_exponents() const {
  switch (kind) {
    case Kind::Quadratic:
      return {Rational(0)};
    case Kind::Unitary:
      return {frac(weight, 2) + shift};
    case Kind::Discrete:
      return {frac(k, 2), frac(-k, 2)};
  }
  throw std::logic_error("unreachable");
}

bool operator==(const CharDatum& a, const CharDatum& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case CharDatum::Kind::Quadratic:
      return a.sign == b.sign;
    case CharDatum::Kind::Unitary:
      return a.weight == b.weight && a.shift == b.shift;
    case CharDatum::Kind::Discrete:
      return a.k == b.k;
  }
  return false;
}

bool operator<(const CharDatum& a, const CharDatum& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case CharDatum::Kind::Quadratic:
      return a.sign < b.sign;
    case CharDatum::Kind::Unitary:
      return a.weight != b.weight ? a.weight < b.weight : a.shift < b.shift;
    case CharDatum::Kind::Discrete:
      return a.k < b.k;
  }
  return false;
}

std::string CharDatum::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Quadratic:
      os << (sign > 0 ? "1" : "sgn");
      break;
    case Kind::Unitary:
      os << "chi(" << weight << "," << shift << ")";
      break;
    case Kind::Discrete:
      os << "delta(" << k << ")";
      break;
  }
  return os.str();
}

long ArchArthurParameter::total_dimension() const {
  long t = 0;
  for (const Factor& f : factors) t += f.dimension();
  return t;
}

std::string ArchArthurParameter::validate() const {
  if (m < 2) return "m must be at least 2";
  if (factors.empty()) return "parameter has no factors";
  for (const Factor& f : factors)
    if (f.a < 1) return "SL2 dimension must be >= 1";
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i] == factors[j]) return "factors must be distinct";
  if (total_dimension() != N())
    return "total dimension " + std::to_string(total_dimension()) + " differs from N = " +
           std::to_string(N());
  // theta-self-duality: inversion permutes the factor multiset.
  for (const Factor& f : factors) {
    Factor inv{f.chr.inverse(), f.a};
    if (std::find(factors.begin(), factors.end(), inv) == factors.end())
      return "factor " + f.chr.str() + " (x) R_" + std::to_string(f.a) +
             " has no theta-dual partner";
  }
  // Parity: quadratic-character factors need a == m-1 (mod 2).
  for (const Factor& f : factors) {
    if (f.chr.kind == CharDatum::Kind::Quadratic && (f.a - (m - 1)) % 2 != 0)
      return "quadratic factor R_" + std::to_string(f.a) + " violates a == m-1 (mod 2)";
  }
  return "";
}

bool InfChar::regular() const {
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] == entries[i + 1]) return false;
  return true;
}

std::string InfChar::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << entries[i];
  }
  os << ")";
  return os.str();
}

InfChar infinitesimal_character(const ArchArthurParameter& psi) {
  std::string err = psi.validate();
  if (!err.empty()) throw std::invalid_argument("malformed parameter: " + err);
  std::vector<Rational> values;
  for (const Factor& f : psi.factors) {
    for (const Rational& base : f.chr.z_exponents()) {
      for (long j = 0; j < f.a; ++j) values.push_back(base + frac(f.a - 1 - 2 * j, 2));
    }
  }
  // The multiset is negation-symmetric; the l = N/2 largest entries are the
  // canonical nonnegative representatives modulo signed permutations.
  std::sort(values.begin(), values.end(), std::greater<Rational>());
  long ell = psi.N() / 2;
  InfChar ic;
  ic.entries.assign(values.begin(), values.begin() + ell);
  int parity = 1;
  bool has_zero = false;
  for (const Rational& v : ic.entries) {
    if (v == 0) has_zero = true;
    if (v < 0) parity = -parity;
  }
  ic.sign_parity = has_zero ? +1 : parity;
  return ic;
}

std::vector<Rational> exponents(const ArchArthurParameter& psi, ExpReading reading) {
  std::string err = psi.validate();
  if (!err.empty()) throw std::invalid_argument("malformed parameter: " + err);
  for (const Factor& f : psi.factors) {
    if (f.chr.kind == CharDatum::Kind::Unitary && f.chr.shift != 0)
      throw std::domain_error("exponents need an Adams-Johnson shape (unitary characters)");
  }
  std::vector<Rational> out;
  for (const Factor& f : psi.factors) {
    long copies = f.chr.dimension();
    long scale = 1;
    if (reading == ExpReading::ScaledValues && f.chr.kind == CharDatum::Kind::Unitary) {
      // Literal "2{...}" reading: one scaled string per (mu, mu^{-1}) pair,
      // attached to the positive-weight representative.
      if (f.chr.weight < 0 || (f.chr.weight == 0 && f.chr.shift < 0)) continue;
      copies = 1;
      scale = 2;
    }
    for (long c = 0; c < copies; ++c)
      for (long j = 0; j < f.a; ++j) out.push_back(Rational(scale * (f.a - 1 - 2 * j)));
  }
  std::sort(out.begin(), out.end(), std::greater<Rational>());
  return out;
}

ArchArthurParameter aj_parameter(const vz::LeviDatum& levi, long p, long q,
                                 const std::vector<CharDatum>* unitary_chars) {
  levi.validate(p, q);
  if (levi.so_block.first * levi.so_block.second == 0)
    throw std::invalid_argument("Adams-Johnson parameter needs p0*q0 != 0");
  ArchArthurParameter psi;
  psi.m = p + q;
  long j = 0;
  for (const auto& [pj, qj] : levi.u_blocks) {
    long mj = pj + qj;
    CharDatum mu;
    if (unitary_chars && j < static_cast<long>(unitary_chars->size())) {
      mu = (*unitary_chars)[static_cast<size_t>(j)];
      if (mu.kind != CharDatum::Kind::Unitary || mu.self_dual())
        throw std::invalid_argument("unitary block characters must be non-self-dual unitary");
    } else {
      mu.kind = CharDatum::Kind::Unitary;
      mu.weight = j + 1;
      mu.shift = 0;
    }
    psi.factors.push_back({mu, mj});
    psi.factors.push_back({mu.inverse(), mj});
    ++j;
  }
  long m0 = levi.m0();
  CharDatum chi;  // trivial quadratic
  chi.kind = CharDatum::Kind::Quadratic;
  chi.sign = +1;
  if (m0 % 2 == 1) {
    psi.factors.push_back({chi, m0 - 1});
  } else {
    CharDatum chi2;
    chi2.kind = CharDatum::Kind::Quadratic;
    chi2.sign = -1;
    psi.factors.push_back({chi, m0 - 1});
    psi.factors.push_back({chi2, 1});
  }
  std::string err = psi.validate();
  if (!err.empty()) throw std::logic_error("constructed AJ parameter invalid: " + err);
  return psi;
}

PredicateReport predicates(const ArchArthurParameter* psi, long n, long p, long q, long r) {
  PredicateReport rep;
  long m = psi ? psi->m : p + q;
  if (psi) {
    for (const Factor& f : psi->factors) {
      if (f.chr.kind == CharDatum::Kind::Quadratic && 3 * f.a > m - 1)
        rep.highly_non_tempered = true;
      if (f.a >= m - 2 * r - 1) rep.sl2_lower_bound_met = true;
    }
  }
  rep.thm4_bound = 2 * n < m - m / 2 - 1;
  rep.thm1_bound = Rational(n) < frac(p / 2, 2);
  rep.thm3_bound = Rational(n) < frac((p + 1) / 2, 2);
  rep.basic_assumption = 2 * n < (m - 1) / 2;
  rep.rank_condition_1 = m % 2 == 0 ? n < m / 2 - 1 : true;
  rep.rank_condition_2 = m % 2 == 1 ? n < m / 2 : true;
  rep.rank_condition_3 = n <= p / 2;
  return rep;
}

}  // namespace dualpair::arthur
