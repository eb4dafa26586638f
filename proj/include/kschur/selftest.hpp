#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kschur::selftest {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  ///< first failure, empty on success
  double seconds = 0;
};

/// from_core(to_core(lambda)) = lambda, and to_core gives a (k+1)-core, for
/// k-bounded lambda, k in [kmin, kmax], degree <= dmax.
CheckResult bijection(int kmin, int kmax, int dmax);
/// <s^{(k)}_lambda, dual_mu> = delta for k <= kmax, degree <= dmax.
CheckResult duality(int kmax, int dmax);
/// s^{(k)}_lambda = s_lambda in the h basis whenever main_hook(lambda) <= k.
CheckResult degeneration(int dmax);
/// gw_invariants = quantum_product_oracle for 2 <= l < n <= nmax.
CheckResult gw_oracle(int nmax);
/// The d = 0 layer of gw_invariants is classical LR restricted to the
/// rectangle, 2 <= l < n <= nmax.
CheckResult gw_classical_layer(int nmax);
/// c^{nu,k}_{lambda mu} = c^{nu',k}_{lambda' mu'} with k-conjugates.
CheckResult omega_klr(int kmax, int dmax);
/// The same symmetry for d-coefficients.
CheckResult omega_d(int kmax, int dmax);
/// Monomial route = coproduct route for d-coefficients.
CheckResult d_routes(int kmax, int dmax);
/// sum_lambda c^{nu,k}_{mu lambda} dual_lambda = skew dual nu/mu in m.
CheckResult skew_theorem(int kmax, int dmax);
/// cauchy_check for k <= kmax, degree <= dmax.
CheckResult cauchy(int kmax, int dmax);
/// klr commutativity and associativity, joint degree <= dmax.
CheckResult klr_algebra(int kmax, int dmax);
/// k-tableau counts depend only on the sorted weight.
CheckResult weight_permutation(int kmax, int dmax);
/// Skew coproduct identities for mu in nu, degree <= dmax.
CheckResult skew_coproduct(int kmax, int dmax);

/// Everything above with bounds scaled from one degree bound.
std::vector<CheckResult> run_all(int degree);

}  // namespace kschur::selftest
