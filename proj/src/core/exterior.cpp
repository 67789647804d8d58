#include "core/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dualpair::exterior {

MultiVector::MultiVector(PAmbient a) : ambient_(a) {
  if (a.p < 1 || a.q < 1 || a.dim() > 64)
    throw std::invalid_argument("exterior ambient must satisfy 1 <= p, q and p*q <= 64");
}

MultiVector MultiVector::scalar(PAmbient a, GaussianRational c) {
  MultiVector v(a);
  v.add_term(0, c);
  return v;
}

long MultiVector::slot(PBasisIndex idx) const {
  if (idx.alpha < 1 || idx.alpha > ambient_.p || idx.mu <= ambient_.p ||
      idx.mu > ambient_.p + ambient_.q)
    throw std::out_of_range("basis index (alpha,mu) out of range");
  return (idx.alpha - 1) * ambient_.q + (idx.mu - ambient_.p - 1);
}

PBasisIndex MultiVector::unslot(long s) const {
  return {s / ambient_.q + 1, ambient_.p + s % ambient_.q + 1};
}

MultiVector MultiVector::basis_one_form(PAmbient a, PBasisIndex idx) {
  MultiVector v(a);
  v.add_term(uint64_t(1) << v.slot(idx), GaussianRational(1));
  return v;
}

bool MultiVector::is_homogeneous(long* deg_out) const {
  if (terms_.empty()) {
    if (deg_out) *deg_out = 0;
    return true;
  }
  int d = __builtin_popcountll(terms_.begin()->first);
  for (const auto& [mask, c] : terms_)
    if (__builtin_popcountll(mask) != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

void MultiVector::add_term(uint64_t mask, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiVector::check_same(const MultiVector& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("exterior ambient mismatch");
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
  check_same(o);
  MultiVector out = *this;
  for (const auto& [mask, c] : o.terms_) out.add_term(mask, c);
  return out;
}

MultiVector MultiVector::operator-(const MultiVector& o) const {
  check_same(o);
  MultiVector out = *this;
  for (const auto& [mask, c] : o.terms_) out.add_term(mask, -c);
  return out;
}

MultiVector MultiVector::operator*(const GaussianRational& c) const {
  MultiVector out(ambient_);
  if (c.is_zero()) return out;
  for (const auto& [mask, coef] : terms_) out.add_term(mask, coef * c);
  return out;
}

namespace {

// Sign of merging the sorted set B after the sorted set A: (-1)^#{a>b pairs}.
int merge_sign(uint64_t a, uint64_t b) {
  int inversions = 0;
  while (b) {
    int bit = __builtin_ctzll(b);
    inversions += __builtin_popcountll(a >> (bit + 1));
    b &= b - 1;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

MultiVector MultiVector::wedge(const MultiVector& o) const {
  check_same(o);
  MultiVector out(ambient_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;
      GaussianRational c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

MultiVector MultiVector::wedge_pow(long k) const {
  if (k < 0) throw std::invalid_argument("negative wedge power");
  MultiVector acc = scalar(ambient_, GaussianRational(1));
  for (long i = 0; i < k; ++i) acc = acc.wedge(*this);
  return acc;
}

MultiVector MultiVector::apply_derivation(
    const std::vector<std::vector<std::pair<long, GaussianRational>>>& images) const {
  MultiVector out(ambient_);
  for (const auto& [mask, c] : terms_) {
    uint64_t rest = mask;
    while (rest) {
      int x = __builtin_ctzll(rest);
      rest &= rest - 1;
      uint64_t without = mask & ~(uint64_t(1) << x);
      // Sign of pulling slot x to the front of the sorted wedge.
      int front_sign = (__builtin_popcountll(mask & ((uint64_t(1) << x) - 1)) % 2 == 0) ? 1 : -1;
      for (const auto& [y, g] : images[static_cast<size_t>(x)]) {
        if (without & (uint64_t(1) << y)) continue;
        GaussianRational coef = c * g;
        int sign = front_sign;
        sign *= (__builtin_popcountll(without & ((uint64_t(1) << y) - 1)) % 2 == 0) ? 1 : -1;
        if (sign < 0) coef = -coef;
        out.add_term(without | (uint64_t(1) << y), coef);
      }
    }
  }
  return out;
}

std::string MultiVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    uint64_t rest = mask;
    while (rest) {
      int s = __builtin_ctzll(rest);
      rest &= rest - 1;
      PBasisIndex idx = unslot(s);
      os << "*w[" << idx.alpha << "," << idx.mu << "]";
    }
  }
  return os.str();
}

MultiVector curvature_form(PAmbient a, long mu, long nu) {
  if (mu <= a.p || mu > a.p + a.q || nu <= a.p || nu > a.p + a.q)
    throw std::out_of_range("curvature indices must lie in p+1..p+q");
  MultiVector out(a);
  for (long alpha = 1; alpha <= a.p; ++alpha) {
    MultiVector term = MultiVector::basis_one_form(a, {alpha, mu})
                           .wedge(MultiVector::basis_one_form(a, {alpha, nu}));
    out = out + term;
  }
  return out;
}

MultiVector euler_form(PAmbient a) {
  MultiVector out(a);
  if (a.q % 2 != 0) return out;  // e_q = 0 for odd q
  std::vector<long> perm(static_cast<size_t>(a.q));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    // Permutation sign by inversion count.
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    MultiVector term = MultiVector::scalar(a, GaussianRational(inv % 2 == 0 ? 1 : -1));
    for (long k = 0; k + 1 < a.q; k += 2)
      term = term.wedge(curvature_form(a, a.p + perm[static_cast<size_t>(k)],
                                       a.p + perm[static_cast<size_t>(k + 1)]));
    out = out + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MultiVector vz_vector(PAmbient a, long n) {
  long p0 = a.p / 2;
  if (n < 0 || n > p0) throw std::out_of_range("vz_vector needs 0 <= n <= p0");
  MultiVector out = MultiVector::scalar(a, GaussianRational(1));
  for (long j = 1; j <= n; ++j) {
    long jbar = 2 * p0 - j + 1;
    for (long k = 1; k <= a.q; ++k) {
      MultiVector factor = MultiVector::basis_one_form(a, {j, a.p + k}) -
                           MultiVector::basis_one_form(a, {jbar, a.p + k}) *
                               GaussianRational::i();
      out = out.wedge(factor);
    }
  }
  return out;
}

std::vector<std::vector<std::pair<long, GaussianRational>>> so_p_generator_images(PAmbient amb,
                                                                                  long a, long b) {
  if (a < 1 || b < 1 || a > amb.p || b > amb.p || a == b)
    throw std::out_of_range("so(p) generator needs distinct 1 <= a,b <= p");
  // rho(v_a ^ v_b): v_a -> v_b, v_b -> -v_a on the first tensor slot.
  std::vector<std::vector<std::pair<long, GaussianRational>>> images(
      static_cast<size_t>(amb.dim()));
  MultiVector probe(amb);
  for (long alpha = 1; alpha <= amb.p; ++alpha) {
    for (long mu = amb.p + 1; mu <= amb.p + amb.q; ++mu) {
      long s = probe.slot({alpha, mu});
      if (alpha == a)
        images[static_cast<size_t>(s)].push_back({probe.slot({b, mu}), GaussianRational(1)});
      else if (alpha == b)
        images[static_cast<size_t>(s)].push_back({probe.slot({a, mu}), GaussianRational(-1)});
    }
  }
  return images;
}

std::vector<std::vector<std::pair<long, GaussianRational>>> gl_q_generator_images(PAmbient amb,
                                                                                  long mu, long nu) {
  if (mu <= amb.p || nu <= amb.p || mu > amb.p + amb.q || nu > amb.p + amb.q)
    throw std::out_of_range("gl(q) generator indices must lie in p+1..p+q");
  // E_{mu,nu} acts on V_-^* by v_mu^* -> -v_nu^*.
  std::vector<std::vector<std::pair<long, GaussianRational>>> images(
      static_cast<size_t>(amb.dim()));
  MultiVector probe(amb);
  for (long alpha = 1; alpha <= amb.p; ++alpha) {
    long s = probe.slot({alpha, mu});
    images[static_cast<size_t>(s)].push_back({probe.slot({alpha, nu}), GaussianRational(-1)});
  }
  return images;
}

}  // namespace dualpair::exterior
