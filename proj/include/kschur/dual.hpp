#pragma once

#include "kschur/partition.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

/// Dual k-Schur function in the m basis, truncated to k-bounded monomials:
/// coefficient of m_mu is K^{(k)}_{lambda mu}.
SymPoly dual_kschur_in_m(const Partition& lambda, int k);

/// Skew dual k-Schur function: coefficient of m_alpha counts k-tableaux of
/// shape c(nu)/c(mu) and k-weight alpha. Requires mu contained in nu.
SymPoly skew_dual_in_m(const Partition& nu, const Partition& mu, int k);

/// The same skew dual expanded in dual k-Schur functions, with coefficients
/// c^{nu,k}_{mu lambda} taken from klr. The m-expansion of the result is
/// checked against skew_dual_in_m.
SymPoly skew_dual_in_dual(const Partition& nu, const Partition& mu, int k);

/// Structure constants of the dual product modulo non-k-bounded monomials:
/// the result, in the dual_kschur basis, has coefficient d^{nu,k}_{lambda mu}
/// at nu. Computed from monomial products and from the k-Schur coproduct;
/// the two must agree.
SymPoly d_coefficients(const Partition& lambda, const Partition& mu, int k);
SymPoly d_coefficients_monomial_route(const Partition& lambda, const Partition& mu, int k);
SymPoly d_coefficients_coproduct_route(const Partition& lambda, const Partition& mu, int k);

/// s^{(k)}_nu(x, y) in kschur(x) (x) kschur(y).
Tensor kschur_coproduct(const Partition& nu, int k);

/// Skew k-Schur function sum_lambda d^{nu,k}_{mu lambda} s^{(k)}_lambda.
/// Requires mu contained in nu.
SymPoly skew_kschur_in_kschur(const Partition& nu, const Partition& mu, int k);

/// Re-expands sum_lambda s^{(k)}_lambda (x) dual_lambda over the k-bounded
/// partitions of degree n in h (x) m and compares with sum_lambda h_lambda (x)
/// m_lambda.
bool cauchy_check(int k, int n);

/// Checks s_{nu/mu}(x,y) = sum_rho s_{nu/rho}(x) s_{rho/mu}(y) for skew
/// k-Schur functions and the matching identity for skew dual k-Schur
/// functions. Requires mu contained in nu.
bool skew_coproduct_check(const Partition& nu, const Partition& mu, int k);

}  // namespace kschur
