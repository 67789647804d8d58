#include "core/cocycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/fock.hpp"
#include "core/linalg.hpp"

namespace dualpair::cocycles {

std::vector<long> FundamentalWeightVector::partition_form() const {
  std::vector<long> lam(a.size(), 0);
  long acc = 0;
  for (size_t i = a.size(); i-- > 0;) {
    acc += a[i];
    lam[i] = acc;
  }
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  return lam;
}

FundamentalWeightVector FundamentalWeightVector::from_partition(const std::vector<long>& lam) {
  FundamentalWeightVector w;
  w.a.assign(lam.size(), 0);
  for (size_t i = 0; i < lam.size(); ++i) {
    long next = i + 1 < lam.size() ? lam[i + 1] : 0;
    if (lam[i] < next) throw std::invalid_argument("weight is not a partition");
    w.a[i] = lam[i] - next;
  }
  return w;
}

namespace {

// Raw pairing before sign normalization: sum over the terms of mv of
// coeff * det of the matrix with rows (i,beta) and entries
// delta_{p+beta, mu} * (x_i, v_alpha).
GaussianRational km_pair_raw(const fock::Ambient& a,
                             const std::vector<std::vector<GaussianRational>>& xs,
                             const exterior::MultiVector& mv) {
  const long n = a.n, q = a.q, N = n * q;
  if (static_cast<long>(xs.size()) != n)
    throw std::invalid_argument("km_pair needs an n-tuple of coordinate vectors");
  for (const auto& x : xs)
    if (static_cast<long>(x.size()) != a.p)
      throw std::invalid_argument("each coordinate vector must have p entries");
  long deg = 0;
  if (!mv.is_homogeneous(&deg) || deg != N)
    throw std::invalid_argument("multivector must be homogeneous of degree n*q");

  GaussianRational total(0);
  for (const auto& [mask, coef] : mv.terms()) {
    std::vector<std::vector<GaussianRational>> mat(static_cast<size_t>(N),
                                                   std::vector<GaussianRational>(
                                                       static_cast<size_t>(N)));
    uint64_t rest = mask;
    long col = 0;
    for (; rest; ++col) {
      int s = __builtin_ctzll(rest);
      rest &= rest - 1;
      exterior::PBasisIndex idx = mv.unslot(s);
      long beta = idx.mu - a.p;  // 1..q
      for (long i = 1; i <= n; ++i) {
        mat[static_cast<size_t>((i - 1) * q + beta - 1)][static_cast<size_t>(col)] =
            xs[static_cast<size_t>(i - 1)][static_cast<size_t>(idx.alpha - 1)];
      }
    }
    total += coef * linalg::scalar_det(std::move(mat));
  }
  return total;
}

// Global sign of the raw pairing relative to the p(I_n) = 1 normalization.
GaussianRational normalization_sign(const fock::Ambient& a) {
  exterior::MultiVector eq = exterior::vz_vector({a.p, a.q}, a.n);
  GaussianRational s = km_pair_raw(a, witt_dual_tuple(a), eq);
  if (!(s * s == GaussianRational(1)))
    throw std::logic_error("pairing normalization is not a sign");
  return s;
}

}  // namespace

std::vector<std::vector<GaussianRational>> witt_dual_tuple(const fock::Ambient& a) {
  long p0 = a.p0();
  if (a.n > p0) throw std::out_of_range("tuple needs n <= p0");
  std::vector<std::vector<GaussianRational>> xs(
      static_cast<size_t>(a.n), std::vector<GaussianRational>(static_cast<size_t>(a.p)));
  Rational half = frac(1, 2);
  for (long gamma = 1; gamma <= a.n; ++gamma) {
    long gbar = 2 * p0 - gamma + 1;
    xs[static_cast<size_t>(gamma - 1)][static_cast<size_t>(gamma - 1)] =
        GaussianRational(half, Rational(0));
    xs[static_cast<size_t>(gamma - 1)][static_cast<size_t>(gbar - 1)] =
        GaussianRational(Rational(0), half);
  }
  return xs;
}

GaussianRational km_pair(const fock::Ambient& a,
                         const std::vector<std::vector<GaussianRational>>& xs,
                         const exterior::MultiVector& mv) {
  return km_pair_raw(a, xs, mv) * normalization_sign(a);
}

fock::SparsePoly km_value_on_vz(const fock::Ambient& a) {
  if (a.n < 1 || a.n > a.p0()) throw std::out_of_range("km_value_on_vz needs 1 <= n <= p0");
  const long n = a.n, q = a.q, N = n * q;
  exterior::MultiVector eq = exterior::vz_vector({a.p, a.q}, n);

  fock::SparsePoly total(a);
  for (const auto& [mask, coef] : eq.terms()) {
    std::vector<std::vector<fock::SparsePoly>> mat(
        static_cast<size_t>(N), std::vector<fock::SparsePoly>(static_cast<size_t>(N),
                                                              fock::SparsePoly(a)));
    uint64_t rest = mask;
    long col = 0;
    for (; rest; ++col) {
      int s = __builtin_ctzll(rest);
      rest &= rest - 1;
      exterior::PBasisIndex idx = eq.unslot(s);
      long beta = idx.mu - a.p;
      for (long i = 1; i <= n; ++i) {
        mat[static_cast<size_t>((i - 1) * q + beta - 1)][static_cast<size_t>(col)] =
            fock::SparsePoly::variable(a, {idx.alpha, i});
      }
    }
    total = total + linalg::poly_det(mat, a) * coef;
  }
  total = total * normalization_sign(a);
  long deg = -1;
  if (!total.supported_on_positive() || !total.is_homogeneous(&deg) || deg != N)
    throw std::logic_error("cocycle value left the expected homogeneous component");
  return total;
}

fock::SparsePoly fm_zero(const fock::Ambient& a, const std::vector<long>& I,
                         const std::vector<long>& beta) {
  if (I.size() != beta.size()) throw std::invalid_argument("fm_zero multi-index length mismatch");
  fock::Monomial mono;
  for (size_t r = 0; r < I.size(); ++r) {
    if (I[r] < 1 || I[r] > a.n) throw std::out_of_range("copy index out of range in fm_zero");
    if (beta[r] < 1 || beta[r] > a.p) throw std::out_of_range("site index out of range in fm_zero");
    fock::VarIndex v{beta[r], I[r]};
    mono.set_exponent(v, mono.exponent(v) + 1);
  }
  fock::SparsePoly out(a);
  out.add_term(mono, GaussianRational(1));
  return out;
}

namespace {

// The degree-k factor of the highest weight tensor: antisymmetrization of
// (u'_1 (x) e_1) ... (u'_k (x) e_k) over the u' slots, pushed through fm_zero
// term by term.  Expanding u'_gamma = v_gamma - i v_{gamma'} produces the
// beta multi-indices.
fock::SparsePoly highest_weight_factor(const fock::Ambient& a, long k) {
  long p0 = a.p0();
  std::vector<long> perm(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i + 1;
  std::vector<long> I(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) I[static_cast<size_t>(i)] = i + 1;

  fock::SparsePoly out(a);
  do {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    GaussianRational sgn(inv % 2 == 0 ? 1 : -1);
    // Expand the choices v_gamma vs -i v_{gamma'} in each slot.
    for (long choice = 0; choice < (1L << k); ++choice) {
      std::vector<long> beta(static_cast<size_t>(k));
      GaussianRational c = sgn;
      for (long slot = 0; slot < k; ++slot) {
        long gamma = perm[static_cast<size_t>(slot)];
        if (choice & (1L << slot)) {
          beta[static_cast<size_t>(slot)] = 2 * p0 - gamma + 1;
          c *= -GaussianRational::i();
        } else {
          beta[static_cast<size_t>(slot)] = gamma;
        }
      }
      out = out + fm_zero(a, I, beta) * c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

fock::SparsePoly fm_highest_weight_value(const fock::Ambient& a,
                                         const FundamentalWeightVector& w) {
  if (static_cast<long>(w.a.size()) > a.n)
    throw std::invalid_argument("weight has more entries than n");
  if (a.n > a.p0()) throw std::out_of_range("fm_highest_weight_value needs n <= p0");
  for (long ai : w.a)
    if (ai < 0) throw std::invalid_argument("fundamental weight coefficients must be >= 0");
  fock::SparsePoly out = fock::SparsePoly::constant(a, GaussianRational(1));
  long ell = 0;
  for (size_t k = 0; k < w.a.size(); ++k) {
    if (w.a[k] == 0) continue;
    ell += w.a[k] * static_cast<long>(k + 1);
    fock::SparsePoly factor = highest_weight_factor(a, static_cast<long>(k + 1));
    out = out * factor.pow(w.a[k]);
  }
  long deg = -1;
  if (!out.supported_on_positive() || !out.is_homogeneous(&deg) || deg != ell)
    throw std::logic_error("highest weight value left the expected homogeneous component");
  return out;
}

fock::SparsePoly full_cocycle_value(const fock::Ambient& a, const FundamentalWeightVector& w) {
  return km_value_on_vz(a) * fm_highest_weight_value(a, w);
}

std::vector<long> vz_ktype_weight(long n, long q, const std::vector<long>& lam) {
  if (static_cast<long>(lam.size()) > n)
    throw std::invalid_argument("lambda has more than n parts");
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) throw std::invalid_argument("lambda must be weakly decreasing");
  std::vector<long> weight(static_cast<size_t>(n), q);
  for (size_t i = 0; i < lam.size(); ++i) weight[i] += lam[i];
  return weight;
}

}  // namespace dualpair::cocycles
