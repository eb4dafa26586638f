#include "kschur/dual.hpp"

#include <map>
#include <mutex>

#include "kschur/cores.hpp"
#include "kschur/errors.hpp"
#include "kschur/kschur.hpp"
#include "kschur/ktableaux.hpp"

namespace kschur {

namespace {

void check_bounded(const Partition& p, int k) {
  require(k >= 1, "bound k must be at least 1");
  require(p.largest() <= k, to_string(p) + " is not " + std::to_string(k) + "-bounded");
}

void check_skew(const Partition& nu, const Partition& mu, int k) {
  check_bounded(nu, k);
  check_bounded(mu, k);
  require(contains(nu, mu), to_string(mu) + " is not contained in " + to_string(nu));
}

void add_tensor(Tensor& into, const Tensor& t, const Integer& scale) {
  for (const auto& [key, c] : t) {
    auto& slot = into[key];
    slot += c * scale;
    if (slot == 0) into.erase(key);
  }
}

Tensor outer(const SymPoly& a, const SymPoly& b) {
  Tensor t;
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms()) t[{p, q}] += c * d;
  return t;
}

// Skew dual with no containment precondition: zero unless c(mu) lies in c(nu).
SymPoly skew_dual_any(const Partition& nu, const Partition& mu, int k) {
  const int degree = nu.degree() - mu.degree();
  SymPoly out(Basis::m, std::max(degree, 0));
  if (degree < 0) return out;
  const Partition outer_core = to_core(nu, k).shape();
  const Partition inner_core = to_core(mu, k).shape();
  if (!contains(outer_core, inner_core)) return out;
  const auto index = enumerate_bounded(degree, k);
  std::vector<std::vector<int>> weights;
  for (const auto& p : index) weights.push_back(p.parts());
  const auto counts = count_core_fillings(k, outer_core, inner_core, weights);
  for (std::size_t i = 0; i < index.size(); ++i) out.add(index[i], counts[i]);
  return out;
}

// Skew k-Schur with no containment precondition.
SymPoly skew_kschur_any(const Partition& nu, const Partition& mu, int k) {
  const int degree = nu.degree() - mu.degree();
  SymPoly out(Basis::kschur, std::max(degree, 0), k);
  if (degree < 0) return out;
  for (const auto& lambda : enumerate_bounded(degree, k))
    out.add(lambda, d_coefficients(mu, lambda, k).coeff(nu));
  return out;
}

std::mutex g_memo_mu;
std::map<std::pair<int, Partition>, Tensor> g_coproducts;
std::map<std::tuple<int, Partition, Partition>, SymPoly> g_dcoef;

}  // namespace

SymPoly dual_kschur_in_m(const Partition& lambda, int k) {
  check_bounded(lambda, k);
  const auto km = kostka_matrix(k, lambda.degree());
  const std::size_t row = km->position(lambda);
  SymPoly out(Basis::m, lambda.degree());
  for (std::size_t j = row; j < km->index.size(); ++j) out.add(km->index[j], km->forward[row][j]);
  return out;
}

SymPoly skew_dual_in_m(const Partition& nu, const Partition& mu, int k) {
  check_skew(nu, mu, k);
  return skew_dual_any(nu, mu, k);
}

SymPoly skew_dual_in_dual(const Partition& nu, const Partition& mu, int k) {
  check_skew(nu, mu, k);
  const int degree = nu.degree() - mu.degree();
  SymPoly out(Basis::dual_kschur, degree, k);
  SymPoly in_m(Basis::m, degree);
  for (const auto& lambda : enumerate_bounded(degree, k)) {
    const Integer c = klr(mu, lambda, k).coeff(nu);
    if (c == 0) continue;
    out.add(lambda, c);
    in_m += dual_kschur_in_m(lambda, k) * c;
  }
  ensure(in_m == skew_dual_any(nu, mu, k),
         "skew dual expansion disagrees with skew k-tableau counts for " + to_string(nu) +
             "/" + to_string(mu));
  return out;
}

SymPoly d_coefficients_monomial_route(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  const int n = lambda.degree() + mu.degree();
  const SymPoly f = dual_kschur_in_m(lambda, k);
  const SymPoly g = dual_kschur_in_m(mu, k);
  const auto km = kostka_matrix(k, n);
  const std::size_t size = km->index.size();
  std::vector<Integer> product(size);
  for (std::size_t i = 0; i < size; ++i)
    product[i] = monomial_product_coefficient(f, g, km->index[i]);
  SymPoly out(Basis::dual_kschur, n, k);
  for (std::size_t j = 0; j < size; ++j) {
    Integer c = 0;
    for (std::size_t i = 0; i <= j; ++i)
      if (product[i] != 0) c += product[i] * km->inverse[i][j];
    out.add(km->index[j], c);
  }
  return out;
}

Tensor kschur_coproduct(const Partition& nu, int k) {
  check_bounded(nu, k);
  {
    std::lock_guard lock(g_memo_mu);
    if (auto it = g_coproducts.find({k, nu}); it != g_coproducts.end()) return it->second;
  }
  Tensor out;
  for (const auto& [pair, c] : coproduct_h(kschur_in_h(nu, k))) {
    const SymPoly left = h_in_kschur(pair.first, k);
    const SymPoly right = h_in_kschur(pair.second, k);
    add_tensor(out, outer(left, right), c);
  }
  std::lock_guard lock(g_memo_mu);
  g_coproducts.emplace(std::make_pair(k, nu), out);
  return out;
}

SymPoly d_coefficients_coproduct_route(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  const int n = lambda.degree() + mu.degree();
  SymPoly out(Basis::dual_kschur, n, k);
  for (const auto& nu : enumerate_bounded(n, k)) {
    const Tensor t = kschur_coproduct(nu, k);
    if (auto it = t.find({lambda, mu}); it != t.end()) out.add(nu, it->second);
  }
  return out;
}

SymPoly d_coefficients(const Partition& lambda, const Partition& mu, int k) {
  check_bounded(lambda, k);
  check_bounded(mu, k);
  const auto key = std::make_tuple(k, lambda, mu);
  {
    std::lock_guard lock(g_memo_mu);
    if (auto it = g_dcoef.find(key); it != g_dcoef.end()) return it->second;
  }
  SymPoly out = d_coefficients_monomial_route(lambda, mu, k);
  ensure(out == d_coefficients_coproduct_route(lambda, mu, k),
         "d-coefficient routes disagree for " + to_string(lambda) + ", " + to_string(mu) +
             " at k=" + std::to_string(k));
  std::lock_guard lock(g_memo_mu);
  g_dcoef.emplace(key, out);
  return out;
}

SymPoly skew_kschur_in_kschur(const Partition& nu, const Partition& mu, int k) {
  check_skew(nu, mu, k);
  return skew_kschur_any(nu, mu, k);
}

bool cauchy_check(int k, int n) {
  require(k >= 1, "bound k must be at least 1");
  require(n >= 0, "degree must be nonnegative");
  Tensor lhs;
  for (const auto& lambda : enumerate_bounded(n, k))
    add_tensor(lhs, outer(kschur_in_h(lambda, k), dual_kschur_in_m(lambda, k)), 1);
  Tensor rhs;
  for (const auto& lambda : enumerate_bounded(n, k)) rhs[{lambda, lambda}] = 1;
  return lhs == rhs;
}

bool skew_coproduct_check(const Partition& nu, const Partition& mu, int k) {
  check_skew(nu, mu, k);
  const int lo = mu.degree();
  const int hi = nu.degree();

  Tensor lhs;
  const SymPoly skew = skew_kschur_any(nu, mu, k);
  for (const auto& [lambda, c] : skew.terms())
    add_tensor(lhs, kschur_coproduct(lambda, k), c);
  Tensor rhs;
  for (int d = lo; d <= hi; ++d)
    for (const auto& rho : enumerate_bounded(d, k))
      add_tensor(rhs, outer(skew_kschur_any(nu, rho, k), skew_kschur_any(rho, mu, k)), 1);
  if (lhs != rhs) return false;

  Tensor dual_lhs = coproduct_m(skew_dual_any(nu, mu, k));
  Tensor dual_rhs;
  for (int d = lo; d <= hi; ++d)
    for (const auto& rho : enumerate_bounded(d, k))
      add_tensor(dual_rhs, outer(skew_dual_any(nu, rho, k), skew_dual_any(rho, mu, k)), 1);
  return dual_lhs == dual_rhs;
}

}  // namespace kschur
