#include "core/fock.hpp"

#include <cstdlib>
#include <stdexcept>

#include "core/linalg.hpp"
#include "core/partition.hpp"

namespace dualpair::fock {

SparsePoly witt_w(const Ambient& a, WittKind kind, long alpha, long j) {
  long p0 = a.p0();
  if (alpha < 1 || alpha > p0)
    throw std::out_of_range("witt index alpha must be in 1..p0");
  if (j < 1 || j > a.n) throw std::out_of_range("copy index j out of range");
  long alpha_bar = 2 * p0 - alpha + 1;
  GaussianRational unit = GaussianRational::i();
  if (kind == WittKind::WDoublePrime) unit = -unit;
  return SparsePoly::variable(a, {alpha, j}) +
         SparsePoly::variable(a, {alpha_bar, j}) * unit;
}

SparsePoly witt_t(const Ambient& a, long j) {
  if (a.p % 2 == 0) throw std::domain_error("t coordinates exist only for odd p");
  if (j < 1 || j > a.n) throw std::out_of_range("copy index j out of range");
  return SparsePoly::variable(a, {a.p, j});
}

SparsePoly minor_delta(const Ambient& a, long k) {
  if (k < 1 || k > a.p0() || k > a.n)
    throw std::out_of_range("minor size k must satisfy 1 <= k <= min(p0, n)");
  std::vector<std::vector<SparsePoly>> mat(static_cast<size_t>(k));
  for (long alpha = 1; alpha <= k; ++alpha) {
    for (long j = 1; j <= k; ++j)
      mat[static_cast<size_t>(alpha - 1)].push_back(witt_w(a, WittKind::WDoublePrime, alpha, j));
  }
  return linalg::poly_det(mat, a);
}

SparsePoly laplacian(const SparsePoly& P, long i, long j) {
  const Ambient& a = P.ambient();
  if (i < 1 || i > a.n || j < 1 || j > a.n) throw std::out_of_range("copy index out of range");
  if (!P.supported_on_positive())
    throw std::domain_error("laplacian requires a polynomial in the positive variables");
  SparsePoly out(a);
  for (long alpha = 1; alpha <= a.p; ++alpha)
    out = out + P.partial({alpha, i}).partial({alpha, j});
  return out;
}

bool is_pluriharmonic(const SparsePoly& P) {
  const Ambient& a = P.ambient();
  for (long i = 1; i <= a.n; ++i)
    for (long j = i; j <= a.n; ++j)
      if (!laplacian(P, i, j).is_zero()) return false;
  return true;
}

GlActResult gl_act(const std::vector<std::vector<GaussianRational>>& g, const SparsePoly& P,
                   const Rational& twist, const std::optional<GaussianRational>& sqrt_det) {
  const Ambient& a = P.ambient();
  const size_t n = static_cast<size_t>(a.n);
  if (g.size() != n) throw std::invalid_argument("g must be n x n");
  std::vector<std::vector<GaussianRational>> gm = g;
  for (const auto& row : gm)
    if (row.size() != n) throw std::invalid_argument("g must be n x n");
  GaussianRational det = linalg::scalar_det(gm);
  if (det.is_zero()) throw std::domain_error("gl_act requires invertible g");

  // substitute_columns expects the matrix of the map j -> (coeff of z_{.,k}),
  // i.e. the transpose of g.
  std::vector<std::vector<GaussianRational>> subs(n, std::vector<GaussianRational>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) subs[r][c] = g[c][r];
  SparsePoly image = P.substitute_columns(subs);

  Rational tw = twist;
  tw.canonicalize();
  GlActResult res{std::move(image), Rational(0)};
  if (tw == 0) return res;
  if (tw.get_den() == 1) {
    long e = static_cast<long>(tw.get_num().get_si());
    GaussianRational scale(1);
    GaussianRational base = e >= 0 ? det : det.inverse();
    for (long k = 0; k < std::abs(e); ++k) scale *= base;
    res.poly = res.poly * scale;
    return res;
  }
  if (tw.get_den() != 2) throw std::invalid_argument("twist must be integral or half-integral");
  if (sqrt_det) {
    if (!((*sqrt_det) * (*sqrt_det) == det))
      throw std::invalid_argument("designated square root does not square to det(g)");
    long e2 = static_cast<long>(tw.get_num().get_si());  // twist = e2/2
    GaussianRational scale(1);
    GaussianRational base = e2 >= 0 ? *sqrt_det : sqrt_det->inverse();
    for (long k = 0; k < std::abs(e2); ++k) scale *= base;
    res.poly = res.poly * scale;
    return res;
  }
  // No designated root: keep the determinant power as formal metadata.
  res.carried_det_power = tw;
  return res;
}

VarIndex unflatten(const Ambient& a, long flat) {
  if (flat < 1 || flat > a.var_count()) throw std::out_of_range("flattened index out of range");
  return {(flat - 1) / a.n + 1, (flat - 1) % a.n + 1};
}

SparsePoly sp_generator(const SparsePoly& P, SpKind kind, long i, long j) {
  const Ambient& a = P.ambient();
  VarIndex vi = unflatten(a, i), vj = unflatten(a, j);
  switch (kind) {
    case SpKind::Raise:
      return P * SparsePoly::variable(a, vi) * SparsePoly::variable(a, vj);
    case SpKind::Lower:
      return P.partial(vi).partial(vj);
    case SpKind::Mixed: {
      // (z_i d_j + d_j z_i)/2 = z_i d_j + delta_{ij}/2.
      SparsePoly out = SparsePoly::variable(a, vi) * P.partial(vj);
      if (vi == vj) out = out + P * GaussianRational(frac(1, 2));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

long default_nullspace_cap() {
  if (const char* env = std::getenv("DUALPAIR_NULLSPACE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 2000;
}

static void enumerate_monomials(const Ambient& a, long vars_left, long deg_left, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (vars_left == 0) {
    if (deg_left == 0) out.push_back(cur);
    return;
  }
  long flat = a.p * a.n - vars_left + 1;  // over positive variables only
  VarIndex v{(flat - 1) / a.n + 1, (flat - 1) % a.n + 1};
  for (long e = 0; e <= deg_left; ++e) {
    cur.set_exponent(v, e);
    enumerate_monomials(a, vars_left - 1, deg_left - e, cur, out);
  }
  cur.set_exponent(v, 0);
}

std::vector<Monomial> positive_monomials(const Ambient& a, long ell) {
  std::vector<Monomial> out;
  Monomial cur;
  enumerate_monomials(a, a.p * a.n, ell, cur, out);
  return out;
}

long harmonic_space_dim(long p, long n, long ell, long cap) {
  if (p < 1 || n < 1 || ell < 0) throw std::invalid_argument("bad harmonic space parameters");
  if (cap <= 0) cap = default_nullspace_cap();
  Ambient a{p, 0, n};
  Integer count = partitions::binomial(static_cast<unsigned long>(p * n + ell - 1),
                                       static_cast<unsigned long>(ell));
  if (count > cap)
    throw std::length_error("homogeneous component dimension " + count.get_str() +
                            " exceeds nullspace cap " + std::to_string(cap));
  std::vector<Monomial> cols = positive_monomials(a, ell);
  if (ell < 2) return static_cast<long>(cols.size());

  std::vector<Monomial> low = positive_monomials(a, ell - 2);
  std::map<Monomial, size_t, MonomialOrder> low_index;
  for (size_t r = 0; r < low.size(); ++r) low_index[low[r]] = r;

  // Stack the matrices of all Delta_{ij}, columns indexed by degree-ell
  // monomials.
  size_t pairs = static_cast<size_t>(n * (n + 1) / 2);
  std::vector<std::vector<GaussianRational>> mat(pairs * low.size(),
                                                 std::vector<GaussianRational>(cols.size()));
  size_t block = 0;
  for (long i = 1; i <= n; ++i) {
    for (long j = i; j <= n; ++j, ++block) {
      for (size_t c = 0; c < cols.size(); ++c) {
        SparsePoly mono(a);
        mono.add_term(cols[c], GaussianRational(1));
        SparsePoly img = laplacian(mono, i, j);
        for (const auto& [mo, coef] : img.terms())
          mat[block * low.size() + low_index.at(mo)][c] = coef;
      }
    }
  }
  size_t rk = linalg::rank(std::move(mat));
  return static_cast<long>(cols.size() - rk);
}

}  // namespace dualpair::fock
