#include "kschur/quantum.hpp"

#include <sstream>

#include "kschur/cores.hpp"
#include "kschur/errors.hpp"
#include "kschur/kschur.hpp"
#include "kschur/ktableaux.hpp"

namespace kschur {

namespace {

void check_params(int l, int n) {
  require(1 <= l && l < n, "Grassmannian parameters need 1 <= l < n");
}

void check_rectangle(const Partition& p, int l, int n) {
  check_params(l, n);
  require(in_rectangle(p, l, n), to_string(p) + " does not fit in the " +
                                     std::to_string(n - l) + " x " + std::to_string(l) +
                                     " rectangle");
}

void finish(GWExpansion& g, const char* what) {
  std::erase_if(g.terms, [](const auto& kv) { return kv.second == 0; });
  const int total = g.lambda.degree() + g.mu.degree();
  for (const auto& [key, c] : g.terms) {
    const auto& [d, nu] = key;
    ensure(c > 0, std::string(what) + ": negative coefficient at " + to_string(nu) +
                      " q^" + std::to_string(d));
    ensure(nu.degree() == total - d * g.n,
           std::string(what) + ": degree bookkeeping fails at " + to_string(nu));
    ensure(in_rectangle(nu, g.l, g.n),
           std::string(what) + ": " + to_string(nu) + " leaves the rectangle");
  }
}

}  // namespace

Integer GWExpansion::coeff(const Partition& nu, int d) const {
  auto it = terms.find({d, nu});
  return it == terms.end() ? Integer(0) : it->second;
}

std::optional<ReducedSchur> schur_mod_Jq(const Partition& nu, int l, int n) {
  check_params(l, n);
  require(nu.largest() <= l, to_string(nu) + " has a part exceeding l = " + std::to_string(l));
  const RimHookRecord rec = n_core(nu, n);
  if (!in_rectangle(rec.removed_shape, l, n)) return std::nullopt;
  const int eps = epsilon(rec, l);
  return ReducedSchur{eps % 2 == 0 ? 1 : -1, rec.hooks_removed, rec.removed_shape};
}

GWExpansion quantum_product_oracle(const Partition& lambda, const Partition& mu, int l,
                                   int n) {
  check_rectangle(lambda, l, n);
  check_rectangle(mu, l, n);
  GWExpansion g{l, n, lambda, mu, {}};
  const SymPoly classical = classical_lr(lambda, mu);
  for (const auto& [nu, c] : classical.terms()) {
    if (nu.largest() > l) continue;
    if (auto r = schur_mod_Jq(nu, l, n)) g.terms[{r->d, r->core}] += c * r->sign;
  }
  finish(g, "quantum product oracle");
  return g;
}

GWExpansion gw_invariants(const Partition& lambda, const Partition& mu, int l, int n) {
  check_rectangle(lambda, l, n);
  check_rectangle(mu, l, n);
  GWExpansion g{l, n, lambda, mu, {}};
  const SymPoly product = klr(lambda, mu, n - 1);
  for (const auto& [gamma, c] : product.terms()) {
    if (!in_Pi(gamma, l, n)) continue;
    const RimHookRecord rec = n_core(gamma, n);
    const int d = rec.hooks_removed;
    const Partition& nu = rec.removed_shape;
    Partition down = gamma;
    for (int i = 0; i < d; ++i) down = rim_down(down, l, n);
    ensure(down == nu, "first-column rim removal from " + to_string(gamma) +
                           " does not reach its n-core");
    Partition up = nu;
    for (int i = 0; i < d; ++i) up = rim_up(up, l, n);
    ensure(up == gamma, "rim addition does not invert removal at " + to_string(gamma));
    const auto [it, fresh] = g.terms.emplace(std::make_pair(d, nu), c);
    ensure(fresh, "two indices reduce to " + to_string(nu) + " q^" + std::to_string(d));
  }
  finish(g, "Gromov-Witten invariants");
  return g;
}

bool in_fusion_box(const Partition& p, int l, int n) {
  check_params(l, n);
  return p.largest() <= n - l && static_cast<int>(p.length()) <= l - 1;
}

FusionTerms fusion(const Partition& lambda, const Partition& mu, int l, int n) {
  check_params(l, n);
  require(l >= 2, "fusion needs l >= 2");
  for (const auto* p : {&lambda, &mu})
    require(in_fusion_box(*p, l, n),
            to_string(*p) + " does not fit in the " + std::to_string(l - 1) + " x " +
                std::to_string(n - l) + " fusion box");
  const SymPoly product = klr(conjugate(lambda), conjugate(mu), n - 1);
  const int total = lambda.degree() + mu.degree();
  FusionTerms out;
  for (const auto& nu : enumerate_in_box(l - 1, n - l)) {
    const int gap = total - nu.degree();
    if (gap < 0 || gap % l != 0) continue;
    std::vector<int> hat(static_cast<std::size_t>(gap / l), l);
    const Partition nu_conj = conjugate(nu);
    for (int x : nu_conj.parts()) hat.push_back(x);
    const Integer c = product.coeff(Partition(hat));
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

SymPoly modth_image(const Partition& lambda, int l, int n) {
  check_params(l, n);
  require(lambda.largest() <= n - 1,
          to_string(lambda) + " is not " + std::to_string(n - 1) + "-bounded");
  SymPoly out(Basis::s, lambda.degree());
  if (in_Pi(lambda, l, n)) out.add(lambda, 1);
  return out;
}

Integer hecke_dimension(const Partition& lambda, int l, int n) {
  check_params(l, n);
  const Partition lc = conjugate(lambda);
  require(in_Pi(lc, l, n), "conjugate " + to_string(lc) + " is not in Pi^{" +
                               std::to_string(l) + "," + std::to_string(n) + "}");
  return count_standard(n - 1, lc);
}

std::string to_string(const GWExpansion& g) {
  std::ostringstream os;
  for (const auto& [key, c] : g.terms)
    os << "{nu: " << to_string(key.second) << ", d: " << key.first << ", coeff: " << c
       << "}\n";
  return os.str();
}

}  // namespace kschur
