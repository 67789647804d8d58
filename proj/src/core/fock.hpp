#ifndef DUALPAIR_CORE_FOCK_HPP
#define DUALPAIR_CORE_FOCK_HPP

#include <optional>

#include "core/poly.hpp"

namespace dualpair::fock {

enum class WittKind { WPrime, WDoublePrime };

// Witt coordinate linear forms on V_+:
//   w'_{alpha,j}  = z_{alpha,j} + i z_{alpha',j}
//   w''_{alpha,j} = z_{alpha,j} - i z_{alpha',j}
// with alpha' = 2*p0 - alpha + 1 and 1 <= alpha <= p0 = floor(p/2).
SparsePoly witt_w(const Ambient& a, WittKind kind, long alpha, long j);

// Extra coordinate t_j = z_{p,j} when p is odd.
SparsePoly witt_t(const Ambient& a, long j);

// Delta_k: leading principal k x k minor of the p0 x n matrix W'' whose
// (alpha, j) entry is w''_{alpha,j}.  Homogeneous of degree k and
// pluriharmonic.
SparsePoly minor_delta(const Ambient& a, long k);

// Delta_{ij} P = sum_{alpha=1..p} d^2 P / dz_{alpha,i} dz_{alpha,j}.
// P must be supported on the positive variables.
SparsePoly laplacian(const SparsePoly& P, long i, long j);

// True iff laplacian(P,i,j) = 0 for all 1 <= i <= j <= n.
bool is_pluriharmonic(const SparsePoly& P);

// GL(n) action with determinant twist.  Substitutes Z -> Z*g and multiplies
// by det(g)^twist.  An integral twist is applied as an exact scalar; a
// half-integral twist needs a designated square root of det(g), otherwise
// the full power is carried formally in the result.
struct GlActResult {
  SparsePoly poly;
  Rational carried_det_power = 0;  // 0 when the twist was applied as a scalar
};

GlActResult gl_act(const std::vector<std::vector<GaussianRational>>& g, const SparsePoly& P,
                   const Rational& twist,
                   const std::optional<GaussianRational>& sqrt_det = std::nullopt);

enum class SpKind { Raise, Lower, Mixed };

// Oscillator generators on flattened variable indices 1..m*n
// (index = (alpha-1)*n + j):
//   raise(i,j): multiply by z_i z_j
//   lower(i,j): apply d^2/dz_i dz_j
//   mixed(i,j): (z_i d/dz_j + d/dz_j z_i)/2
SparsePoly sp_generator(const SparsePoly& P, SpKind kind, long i, long j);

VarIndex unflatten(const Ambient& a, long flat);

// Dimension of the joint kernel of all Delta_{ij} on the degree-ell
// homogeneous component of the polynomials in the positive variables,
// by exact dense nullspace.  Throws when the component dimension exceeds
// the cap (cap = 0 reads DUALPAIR_NULLSPACE_CAP, default 2000).
long harmonic_space_dim(long p, long n, long ell, long cap = 0);

// Monomials of total degree ell in the positive variables, in term order.
std::vector<Monomial> positive_monomials(const Ambient& a, long ell);

long default_nullspace_cap();

}  // namespace dualpair::fock

#endif
